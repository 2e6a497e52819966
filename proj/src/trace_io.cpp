#include "advdel/trace_io.hpp"

#include <sstream>

#include <json.hpp>

#include "advdel/errors.hpp"

namespace advdel {

using nlohmann::json;

namespace {

json element_json(const Element &e)
{
    if (const Vertex *v = std::get_if<Vertex>(&e))
        return *v;
    const Edge &edge = std::get<Edge>(e);
    return json::array({edge.u, edge.v});
}

Element element_from(const json &j)
{
    if (j.is_number_integer())
        return j.get<Vertex>();
    if (j.is_array() && j.size() == 2)
        return Edge{j[0].get<Vertex>(), j[1].get<Vertex>()};
    throw ParseError("trace: bad element " + j.dump());
}

json deleted_json(const DeletionSet &s, Mode mode)
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

}  // namespace

std::string write_trace(const Trace &trace)
{
    std::string out;
    out += json{{"type", "start"}, {"mode", std::string(to_string(trace.mode))}, {"initial_bits", trace.initial_bits}}
               .dump();
    out += '\n';
    for (const TraceStep &s : trace.steps) {
        json events = json::array();
        for (const DeletionEvent &e : s.events)
            events.push_back({{"member", e.member}, {"violation", e.violation}, {"deleted", element_json(e.deleted)}});
        out += json{{"type", "step"}, {"step", s.step}, {"revealed", s.revealed}, {"bits", s.bits}, {"events", events}}
                   .dump();
        out += '\n';
    }
    out += json{{"type", "end"},
                {"deletions", trace.deletions()},
                {"total_bits", trace.total_bits},
                {"deleted", deleted_json(trace.deleted, trace.mode)}}
               .dump();
    out += '\n';
    return out;
}

Trace parse_trace(std::string_view text)
{
    Trace trace;
    bool started = false, ended = false;
    std::istringstream in{std::string(text)};
    std::string line;
    try {
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            if (ended)
                throw ParseError("trace: records after end");
            const json j = json::parse(line);
            const std::string type = j.at("type").get<std::string>();
            if (type == "start") {
                if (started)
                    throw ParseError("trace: duplicate start record");
                started = true;
                trace.mode = parse_mode(j.at("mode").get<std::string>());
                trace.initial_bits = j.at("initial_bits").get<std::size_t>();
            } else if (!started) {
                throw ParseError("trace: missing start record");
            } else if (type == "step") {
                TraceStep s;
                s.step = j.at("step").get<int>();
                s.revealed = j.at("revealed").get<Vertex>();
                s.bits = j.at("bits").get<std::size_t>();
                for (const json &e : j.at("events"))
                    s.events.push_back({e.at("member").get<std::size_t>(), e.at("violation").get<VertexSet>(),
                                        element_from(e.at("deleted"))});
                trace.steps.push_back(std::move(s));
            } else if (type == "end") {
                ended = true;
                trace.total_bits = j.at("total_bits").get<std::size_t>();
                for (const json &e : j.at("deleted")) {
                    const Element el = element_from(e);
                    if (const Vertex *v = std::get_if<Vertex>(&el))
                        trace.deleted.vertices.push_back(*v);
                    else
                        trace.deleted.edges.push_back(std::get<Edge>(el));
                }
                if (j.at("deletions").get<std::size_t>() != trace.deleted.size())
                    throw ParseError("trace: deletion count disagrees with deleted set");
            } else {
                throw ParseError("trace: unknown record type " + type);
            }
        }
    } catch (const json::exception &ex) {
        throw ParseError(std::string("trace: ") + ex.what());
    }
    if (!ended)
        throw ParseError("trace: missing end record");
    return trace;
}

}  // namespace advdel
