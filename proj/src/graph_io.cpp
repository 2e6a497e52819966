#include "advdel/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "advdel/errors.hpp"

namespace advdel {

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        pos = end + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        const auto start = line.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos)
            break;
        auto end = line.find_first_of(" \t", start);
        if (end == std::string_view::npos)
            end = line.size();
        out.push_back(line.substr(start, end - start));
        pos = end;
    }
    return out;
}

int to_int(std::string_view token, std::string_view what)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("expected integer for " + std::string(what) + ", got '" + std::string(token) + "'");
    return value;
}

// Reads one text-format graph starting at lines[i]; advances i past it.
Graph parse_text_graph(const std::vector<std::string_view> &lines, std::size_t &i)
{
    const auto head = tokens(lines[i]);
    if (head.size() != 2)
        throw ParseError("graph header must be 'n m'");
    const int n = to_int(head[0], "vertex count");
    const int m = to_int(head[1], "edge count");
    if (n < 0 || n > Graph::kMaxOrder)
        throw ParseError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(Graph::kMaxOrder));
    if (m < 0 || m > n * (n - 1) / 2)
        throw ParseError("edge count " + std::to_string(m) + " impossible for " + std::to_string(n) + " vertices");
    ++i;
    GraphBuilder b(n);
    for (int e = 0; e < m; ++e, ++i) {
        if (i >= lines.size())
            throw ParseError("expected " + std::to_string(m) + " edges, file ended after " + std::to_string(e));
        const auto t = tokens(lines[i]);
        if (t.size() != 2)
            throw ParseError("edge line must be 'u v'");
        const int u = to_int(t[0], "edge endpoint");
        const int v = to_int(t[1], "edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") label out of range");
        if (u == v)
            throw ParseError("self-loop at " + std::to_string(u));
        if (b.has_edge(u, v))
            throw ParseError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        b.add_edge(u, v);
    }
    return b.build();
}

bool is_comment(std::string_view line) { return !line.empty() && line.front() == '#'; }

}  // namespace

std::string write_graph(const Graph &g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge &e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text)
{
    GraphList list = parse_graph_list(text);
    if (list.graphs.size() != 1)
        throw ParseError("expected exactly one graph, found " + std::to_string(list.graphs.size()));
    return std::move(list.graphs.front());
}

std::string to_graph6(const Graph &g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph parse_graph6(std::string_view line)
{
    line = trim(line);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw ParseError("empty graph6 string");
    for (char c : line)
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 character");
    std::size_t pos = 0;
    int n = line[pos++] - 63;
    if (n == 63) {
        if (line.size() < 4 || line[1] == 126)
            throw ParseError("graph6 order too large");
        n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
        pos = 4;
    }
    if (n > Graph::kMaxOrder)
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds " + std::to_string(Graph::kMaxOrder));
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (line.size() - pos != (nbits + 5) / 6)
        throw ParseError("graph6 length does not match order " + std::to_string(n));
    GraphBuilder b(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = line[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    }
    return b.build();
}

std::string write_graph_list(const GraphList &list)
{
    std::ostringstream out;
    for (const auto &[key, value] : list.header)
        out << "# " << key << ' ' << value << '\n';
    for (const Graph &g : list.graphs)
        out << write_graph(g);
    return out.str();
}

GraphList parse_graph_list(std::string_view text)
{
    GraphList list;
    const auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size()) {
        const std::string_view line = trim(lines[i]);
        if (line.empty()) {
            ++i;
            continue;
        }
        if (is_comment(line)) {
            if (list.graphs.empty()) {
                const auto t = tokens(line.substr(1));
                if (!t.empty()) {
                    std::string value;
                    for (std::size_t k = 1; k < t.size(); ++k) {
                        if (k > 1)
                            value += ' ';
                        value += t[k];
                    }
                    list.header[std::string(t[0])] = value;
                }
            }
            ++i;
            continue;
        }
        if (tokens(line).size() == 1) {
            list.graphs.push_back(parse_graph6(line));
            ++i;
            continue;
        }
        list.graphs.push_back(parse_text_graph(lines, i));
    }
    return list;
}

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

Graph load_graph(const std::filesystem::path &path) { return parse_graph(read_file(path)); }

}  // namespace advdel
