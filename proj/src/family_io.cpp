#include "advdel/family_io.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "advdel/errors.hpp"
#include "advdel/graph_io.hpp"

namespace advdel {

using nlohmann::json;

namespace {

json optimum_json(const DeletionSet &s, Mode mode)
{
    json out = json::array();
    if (mode == Mode::Node)
        for (Vertex v : s.vertices)
            out.push_back(v);
    else
        for (const Edge &e : s.edges)
            out.push_back(json::array({e.u, e.v}));
    return out;
}

DeletionSet optimum_from(const json &j, Mode mode)
{
    DeletionSet s;
    for (const json &x : j) {
        if (mode == Mode::Node)
            s.vertices.push_back(x.get<Vertex>());
        else
            s.edges.push_back(Edge{x.at(0).get<Vertex>(), x.at(1).get<Vertex>()});
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

std::string member_file(std::size_t i)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "member_%03zu.txt", i);
    return buf;
}

}  // namespace

std::string write_obstruction(const ObstructionSet &f)
{
    GraphList list;
    list.graphs.assign(f.members().begin(), f.members().end());
    return write_graph_list(list);
}

ObstructionSet load_obstruction(const std::filesystem::path &path)
{
    GraphList list = parse_graph_list(read_file(path));
    try {
        return ObstructionSet(std::move(list.graphs));
    } catch (const std::invalid_argument &ex) {
        throw ParseError(path.string() + ": " + ex.what());
    }
}

void write_family(const Family &family, const std::filesystem::path &dir)
{
    json members = json::array();
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const FamilyMember &m = family.members[i];
        write_file(dir / member_file(i), write_graph(m.instance.graph));
        members.push_back({{"file", member_file(i)},
                           {"choice", m.choice},
                           {"expected_optimum", optimum_json(m.expected_optimum, family.mode())}});
    }
    write_file(dir / "obstruction.txt", write_obstruction(family.obstruction));
    write_file(dir / "base.txt", write_graph(family.base));
    const json manifest{{"kind", std::string(to_string(family.kind))},
                        {"mode", std::string(to_string(family.mode()))},
                        {"parameter", family.parameter},
                        {"optimum_size", family.optimum_size},
                        {"unique_optimum", family.unique_optimum},
                        {"expected_leaves", family.expected_leaves},
                        {"obstruction", "obstruction.txt"},
                        {"base", "base.txt"},
                        {"members", members}};
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

Family read_family(const std::filesystem::path &dir)
{
    try {
        const json manifest = json::parse(read_file(dir / "manifest.json"));
        const FamilyKind kind = parse_family_kind(manifest.at("kind").get<std::string>());
        Family family{.kind = kind,
                      .obstruction = load_obstruction(dir / manifest.at("obstruction").get<std::string>()),
                      .base = load_graph(dir / manifest.at("base").get<std::string>()),
                      .parameter = manifest.at("parameter").get<int>(),
                      .optimum_size = manifest.at("optimum_size").get<std::size_t>(),
                      .unique_optimum = manifest.at("unique_optimum").get<bool>(),
                      .expected_leaves = manifest.at("expected_leaves").get<std::size_t>(),
                      .members = {}};
        if (manifest.contains("mode") && parse_mode(manifest.at("mode").get<std::string>()) != family.mode())
            throw ParseError("manifest mode does not match family kind");
        for (const json &m : manifest.at("members")) {
            FamilyMember member{
                .instance = {load_graph(dir / m.at("file").get<std::string>()), family.mode()},
                .choice = m.at("choice").get<std::vector<int>>(),
                .expected_optimum = optimum_from(m.at("expected_optimum"), family.mode()),
            };
            family.members.push_back(std::move(member));
        }
        return family;
    } catch (const json::exception &ex) {
        throw ParseError(dir.string() + "/manifest.json: " + ex.what());
    } catch (const std::invalid_argument &ex) {
        throw ParseError(dir.string() + "/manifest.json: " + ex.what());
    }
}

}  // namespace advdel
