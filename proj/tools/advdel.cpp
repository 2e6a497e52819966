#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "advdel/algorithms.hpp"
#include "advdel/errors.hpp"
#include "advdel/family_io.hpp"
#include "advdel/graph_io.hpp"
#include "advdel/offline.hpp"
#include "advdel/trace_io.hpp"
#include "advdel/verifier.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace advdel;

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kInvalidInput = 2, kCapExceeded = 3, kBadConfig = 4 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string obstruction;
    std::string mode = "node";
    std::string strategy = "naive";
    int m = 2;
    int opt = 4;
    int cap = kEnumerationCap;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out;

    // subcommand inputs
    std::string input;
    std::string kind;
    std::string graph;
    std::string edge;
    int order = 8;
    double density = 0.5;
};

Mode config_mode(const RunConfig &cfg)
{
    try {
        return parse_mode(cfg.mode);
    } catch (const std::invalid_argument &ex) {
        throw ConfigError(ex.what());
    }
}

ObstructionSet config_obstruction(const RunConfig &cfg, Mode mode)
{
    if (cfg.obstruction.empty())
        throw ConfigError("--obstruction is required");
    ObstructionSet f = load_obstruction(cfg.obstruction);
    if (mode == Mode::Edge && !f.valid_for_edge_mode())
        throw ConfigError("edge mode needs an obstruction set without edgeless members");
    return f;
}

void emit_records(const RunConfig &cfg, const std::string &name, const std::vector<json> &records)
{
    if (cfg.out.empty())
        return;
    std::string text;
    for (const json &r : records)
        text += r.dump() + "\n";
    write_file(fs::path(cfg.out) / name, text);
}

std::string labels(const DeletionSet &s)
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.vertices) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    }
    for (const Edge &e : s.edges) {
        out += (first ? "" : ",") + std::to_string(e.u) + "-" + std::to_string(e.v);
        first = false;
    }
    return out + "}";
}

json deletion_json(const DeletionSet &s)
{
    json out = json::array();
    for (Vertex v : s.vertices)
        out.push_back(v);
    for (const Edge &e : s.edges)
        out.push_back(json::array({e.u, e.v}));
    return out;
}

void print_row(const std::string &key, const std::string &value)
{
    std::printf("%-22s %s\n", key.c_str(), value.c_str());
}

// gen

Family generate_family(const RunConfig &cfg)
{
    const FamilyKind kind = parse_family_kind(cfg.kind);
    const auto need_graph = [&] {
        if (cfg.graph.empty())
            throw ConfigError("--graph is required for family kind " + cfg.kind);
        return load_graph(cfg.graph);
    };
    switch (kind) {
    case FamilyKind::Connected:
        return connected_lb_family(need_graph(), cfg.m);
    case FamilyKind::Disconnected:
        return disconnected_lb_family(need_graph(), cfg.m);
    case FamilyKind::Edge:
        return edge_lb_family(need_graph(), cfg.m);
    case FamilyKind::IsolatedPrefix:
        return isolated_prefix_family(need_graph(), cfg.m);
    case FamilyKind::CliqueJoin:
        return clique_join_family(config_obstruction(cfg, Mode::Node), cfg.opt, cfg.cap);
    case FamilyKind::IndependentJoin:
        return independent_join_family(config_obstruction(cfg, Mode::Node), cfg.opt, cfg.cap);
    }
    throw ConfigError("unknown family kind");
}

int cmd_gen(const RunConfig &cfg)
{
    if (cfg.out.empty())
        throw ConfigError("gen needs --out");
    if (cfg.kind == "random") {
        std::mt19937_64 rng(cfg.seed);
        std::bernoulli_distribution coin(cfg.density);
        GraphBuilder b(cfg.order);
        for (Vertex u = 0; u < cfg.order; ++u)
            for (Vertex v = u + 1; v < cfg.order; ++v)
                if (coin(rng))
                    b.add_edge(u, v);
        const Graph g = b.build();
        write_file(fs::path(cfg.out) / "instance.txt", write_graph(g));
        print_row("kind", "random");
        print_row("order", std::to_string(g.order()));
        print_row("edges", std::to_string(g.edge_count()));
        print_row("seed", std::to_string(cfg.seed));
        return kOk;
    }
    const Family family = generate_family(cfg);
    write_family(family, cfg.out);
    print_row("kind", std::string(to_string(family.kind)));
    print_row("mode", std::string(to_string(family.mode())));
    print_row("parameter", std::to_string(family.parameter));
    print_row("members", std::to_string(family.members.size()));
    print_row("optimum size", std::to_string(family.optimum_size));
    print_row("unique optimum", family.unique_optimum ? "yes" : "no");
    print_row("expected leaves", std::to_string(family.expected_leaves));
    return kOk;
}

// solve

int cmd_solve(const RunConfig &cfg)
{
    const Mode mode = config_mode(cfg);
    const ObstructionSet f = config_obstruction(cfg, mode);
    const Graph g = load_graph(cfg.input);
    const OfflineOptimum optimum = offline_optimum(g, f, mode);
    json solutions = json::array();
    for (const DeletionSet &s : optimum.solutions)
        solutions.push_back(deletion_json(s));
    emit_records(cfg, "solve.jsonl",
                 {json{{"type", "optimum"},
                       {"mode", std::string(to_string(mode))},
                       {"size", optimum.size},
                       {"count", optimum.solutions.size()},
                       {"solutions", solutions}}});
    print_row("mode", std::string(to_string(mode)));
    print_row("optimum size", std::to_string(optimum.size));
    print_row("optimum count", std::to_string(optimum.solutions.size()));
    print_row("smallest optimum", labels(optimum.smallest()));
    return kOk;
}

// run

int cmd_run(const RunConfig &cfg)
{
    const Mode mode = config_mode(cfg);
    const ObstructionSet f = config_obstruction(cfg, mode);
    const OnlineInstance instance{load_graph(cfg.input), mode};
    const OfflineOptimum optimum = offline_optimum(instance.graph, f, mode);

    AdviceTape tape;
    std::unique_ptr<OnlineStrategy> strategy;
    std::size_t budget = 0;
    std::optional<RamseyCertificate> cert;
    if (cfg.strategy == "naive") {
        tape = (mode == Mode::Node ? naive_node_advisor(instance, f) : naive_edge_advisor(instance, f)).tape;
        strategy = std::make_unique<NaiveAlgorithm>();
        budget = naive_budget(optimum.size, f, mode);
    } else if (cfg.strategy == "log") {
        if (mode != Mode::Node)
            throw ConfigError("the log strategy runs in node mode only");
        cert = ramsey_bound(f, cfg.cap);
        if (!cert)
            throw ConfigError("no Ramsey bound up to --cap for this obstruction set");
        tape = log_advisor(instance, f, *cert).tape;
        strategy = std::make_unique<LogAlgorithm>(*cert);
        budget = log_budget(optimum.size, cert->bound, f.max_order());
    } else if (cfg.strategy == "greedy") {
        strategy = std::make_unique<GreedyBaseline>();
    } else {
        throw ConfigError("unknown strategy " + cfg.strategy + " (naive, log, greedy)");
    }

    AdviceReader reader(tape, cfg.seed);
    const Trace trace = run(instance, f, *strategy, reader);
    replay(instance, f, trace);
    const bool audit = audit_bits(trace, budget);
    const bool optimal = trace.deletions() == optimum.size;
    const bool advised = cfg.strategy != "greedy";

    if (!cfg.out.empty()) {
        write_file(fs::path(cfg.out) / "trace.jsonl", write_trace(trace));
        write_file(fs::path(cfg.out) / "tape.txt", serialize_tape(tape) + "\n");
    }
    emit_records(cfg, "run.jsonl",
                 {json{{"type", "run"},
                       {"strategy", cfg.strategy},
                       {"mode", std::string(to_string(mode))},
                       {"deletions", trace.deletions()},
                       {"optimum", optimum.size},
                       {"bits", trace.total_bits},
                       {"budget", budget},
                       {"audit", audit}}});
    print_row("strategy", cfg.strategy);
    print_row("mode", std::string(to_string(mode)));
    print_row("deletions", std::to_string(trace.deletions()));
    print_row("offline optimum", std::to_string(optimum.size));
    print_row("deleted", labels(trace.deleted));
    print_row("bits read", std::to_string(trace.total_bits));
    print_row("bit budget", std::to_string(budget));
    print_row("audit", audit ? "pass" : "FAIL");
    if (advised)
        print_row("optimal", optimal ? "yes" : "NO");
    return audit && (optimal || !advised) ? kOk : kFailed;
}

// verify-lb

int cmd_verify(const RunConfig &cfg)
{
    const Family family = read_family(cfg.input);
    const DistinguishabilityReport r = verify_family(family, cfg.jobs);
    const bool certified = r.certified(family.expected_leaves);

    std::vector<json> records;
    for (const MemberCheck &m : r.members)
        records.push_back({{"type", "member"},
                           {"index", m.index},
                           {"optimum_size", m.optimum_size},
                           {"optimum_count", m.optimum_count},
                           {"matches_expected", m.matches_expected}});
    records.push_back({{"type", "report"},
                       {"kind", std::string(to_string(family.kind))},
                       {"family_size", r.family_size},
                       {"leaves", r.leaves},
                       {"expected_leaves", family.expected_leaves},
                       {"distinct_sequences", r.distinct_sequences},
                       {"lower_bound_bits", r.lower_bound_bits},
                       {"min_divergence_step", r.min_divergence_step},
                       {"max_divergence_step", r.max_divergence_step},
                       {"mean_divergence_step", r.mean_divergence_step},
                       {"all_pairs_conflict", r.all_pairs_conflict},
                       {"optima_ok", r.optima_ok},
                       {"failures", r.failures},
                       {"certified", certified}});
    emit_records(cfg, "report.jsonl", records);

    print_row("kind", std::string(to_string(family.kind)));
    print_row("family size", std::to_string(r.family_size));
    print_row("leaves", std::to_string(r.leaves) + " (expected " + std::to_string(family.expected_leaves) + ")");
    print_row("distinct sequences", std::to_string(r.distinct_sequences));
    print_row("lower bound bits", std::to_string(r.lower_bound_bits));
    char mean[32];
    std::snprintf(mean, sizeof mean, "%.2f", r.mean_divergence_step);
    print_row("divergence steps", std::to_string(r.min_divergence_step) + ".." +
                                      std::to_string(r.max_divergence_step) + " mean " + mean);
    print_row("pairwise conflict", r.all_pairs_conflict ? "yes" : "no");
    print_row("optima", r.optima_ok ? "ok" : "FAIL");
    for (const std::string &s : r.failures)
        print_row("failure", s);
    print_row("certified", certified ? "yes" : "NO");
    return certified ? kOk : kFailed;
}

// ramsey

int cmd_ramsey(const RunConfig &cfg)
{
    const ObstructionSet f = config_obstruction(cfg, Mode::Node);
    const std::optional<RamseyCertificate> cert = ramsey_bound(f, cfg.cap);
    if (!cert) {
        emit_records(cfg, "ramsey.jsonl", {json{{"type", "ramsey"}, {"bound", nullptr}, {"cap", cfg.cap}}});
        print_row("Ramsey bound", "none up to cap " + std::to_string(cfg.cap));
        return f.contains_clique() && f.contains_independent_set() ? kCapExceeded : kFailed;
    }
    emit_records(cfg, "ramsey.jsonl",
                 {json{{"type", "ramsey"}, {"bound", cert->bound}, {"witness", to_graph6(cert->witness)}}});
    if (!cfg.out.empty())
        write_file(fs::path(cfg.out) / "witness.txt", write_graph(cert->witness));
    print_row("Ramsey bound", std::to_string(cert->bound));
    print_row("witness order", std::to_string(cert->witness.order()));
    print_row("witness edges", std::to_string(cert->witness.edge_count()));
    print_row("witness graph6", to_graph6(cert->witness));
    return kOk;
}

// extend

std::optional<Edge> parse_edge(const std::string &text)
{
    if (text.empty())
        return std::nullopt;
    int u = 0, v = 0;
    char sep = 0;
    std::istringstream in(text);
    if (!(in >> u >> sep >> v) || sep != ',')
        throw ConfigError("--edge expects u,v");
    return Edge{u, v};
}

int cmd_extend(const RunConfig &cfg)
{
    const Graph h = load_graph(cfg.input);
    std::vector<Edge> edges;
    if (const auto e = parse_edge(cfg.edge)) {
        if (!h.adjacent(e->u, e->v))
            throw std::invalid_argument("--edge is not an edge of the graph");
        edges.push_back(*e);
    } else {
        edges = h.edges();
    }
    std::vector<json> records;
    bool all_ok = true;
    for (const Edge &e : edges) {
        const EExtension ext = e_extension(h, e);
        const EExtensionCheck check = check_e_extension(ext.graph, ext.edge, h);
        all_ok = all_ok && check.ok();
        const std::string tag = std::to_string(e.u) + "-" + std::to_string(e.v);
        records.push_back({{"type", "extension"},
                           {"edge", json::array({e.u, e.v})},
                           {"order", ext.graph.order()},
                           {"edges", ext.graph.edge_count()},
                           {"graph6", to_graph6(ext.graph)},
                           {"axioms", check.ok()}});
        if (!cfg.out.empty())
            write_file(fs::path(cfg.out) / ("extension_" + tag + ".txt"), write_graph(ext.graph));
        print_row("edge " + tag, "order " + std::to_string(ext.graph.order()) + ", " +
                                     std::to_string(ext.graph.edge_count()) + " edges, axioms " +
                                     (check.ok() ? "hold" : "FAIL") + ", " + to_graph6(ext.graph));
    }
    emit_records(cfg, "extend.jsonl", records);
    return all_ok ? kOk : kFailed;
}

// decompose

std::string set_text(const VertexSet &s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

int cmd_decompose(const RunConfig &cfg)
{
    const Graph g = load_graph(cfg.input);
    const std::vector<VertexSet> parts = join_decomposition(g);
    const std::vector<VertexSet> components = connected_components(g);
    emit_records(cfg, "decompose.jsonl",
                 {json{{"type", "decomposition"}, {"join_parts", parts}, {"components", components}}});
    print_row("join parts", std::to_string(parts.size()));
    for (const VertexSet &p : parts) {
        const Graph part = induced_subgraph(g, p);
        print_row("  part", set_text(p) + " edges " + std::to_string(part.edge_count()));
    }
    print_row("components", std::to_string(components.size()));
    for (const VertexSet &c : components)
        print_row("  component", set_text(c));
    return kOk;
}

// obstructions

int cmd_obstructions(const RunConfig &cfg)
{
    const Graph h = load_graph(cfg.input);
    std::vector<Graph> family;
    if (cfg.kind == "union")
        family = not_sub_h_union_family(h, cfg.cap);
    else if (cfg.kind == "join")
        family = not_sub_h_join_family(h, cfg.cap);
    else
        throw ConfigError("--kind must be union or join");
    GraphList list;
    list.header["kind"] = cfg.kind;
    list.graphs = family;
    if (!cfg.out.empty())
        write_file(fs::path(cfg.out) / "obstructions.txt", write_graph_list(list));
    std::vector<json> records;
    for (const Graph &g : family)
        records.push_back({{"type", "member"}, {"order", g.order()}, {"edges", g.edge_count()}, {"graph6", to_graph6(g)}});
    emit_records(cfg, "obstructions.jsonl", records);
    print_row("kind", cfg.kind);
    print_row("members", std::to_string(family.size()));
    for (const Graph &g : family)
        print_row("  " + to_graph6(g), "order " + std::to_string(g.order()) + ", " + std::to_string(g.edge_count()) +
                                           " edges");
    return kOk;
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Delayed online F-deletion with advice: generation, solving, simulation and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--obstruction", cfg.obstruction, "Obstruction set (graph list file)");
    app.add_option("--mode", cfg.mode, "node or edge")->check(CLI::IsMember({"node", "edge"}));
    app.add_option("--strategy", cfg.strategy, "naive, log or greedy");
    app.add_option("--m", cfg.m, "Number of gadgets")->check(CLI::PositiveNumber);
    app.add_option("--opt", cfg.opt, "Optimum size for join families")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "Enumeration order cap")->check(CLI::Range(1, kEnumerationCap));
    app.add_option("--seed", cfg.seed, "Seed for filler bits and random instances");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "Output directory");

    auto *gen = app.add_subcommand("gen", "Generate a lower-bound family or a random instance");
    gen->add_option("--kind", cfg.kind,
                    "connected, disconnected, edge, isolated-prefix, clique-join, independent-join or random")
        ->required();
    gen->add_option("--graph", cfg.graph, "Base graph H");
    gen->add_option("--order", cfg.order, "Order of a random instance")->check(CLI::Range(1, 64));
    gen->add_option("--density", cfg.density, "Edge probability of a random instance")->check(CLI::Range(0.0, 1.0));

    auto *solve = app.add_subcommand("solve", "Offline optimum of an instance");
    solve->add_option("instance", cfg.input)->required();
    auto *runc = app.add_subcommand("run", "Run a strategy with its advisor and audit the bits");
    runc->add_option("instance", cfg.input)->required();
    auto *verify = app.add_subcommand("verify-lb", "Certify a generated family");
    verify->add_option("family", cfg.input, "Family directory")->required();
    app.add_subcommand("ramsey", "Ramsey bound of the obstruction set");
    auto *extend = app.add_subcommand("extend", "e-extensions of a graph");
    extend->add_option("graph", cfg.input)->required();
    extend->add_option("--edge", cfg.edge, "Single edge u,v");
    auto *decompose = app.add_subcommand("decompose", "Join decomposition and components");
    decompose->add_option("graph", cfg.input)->required();
    auto *obstructions = app.add_subcommand("obstructions", "Minimal non-sub-H-union or non-sub-H-join graphs");
    obstructions->add_option("graph", cfg.input)->required();
    obstructions->add_option("--kind", cfg.kind, "union or join")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadConfig;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "gen")
            return cmd_gen(cfg);
        if (name == "solve")
            return cmd_solve(cfg);
        if (name == "run")
            return cmd_run(cfg);
        if (name == "verify-lb")
            return cmd_verify(cfg);
        if (name == "ramsey")
            return cmd_ramsey(cfg);
        if (name == "extend")
            return cmd_extend(cfg);
        if (name == "decompose")
            return cmd_decompose(cfg);
        return cmd_obstructions(cfg);
    } catch (const ConfigError &ex) {
        std::cerr << "advdel: " << ex.what() << "\n";
        return kBadConfig;
    } catch (const CapExceeded &ex) {
        std::cerr << "advdel: cap exceeded: " << ex.what() << "\n";
        return kCapExceeded;
    } catch (const ParseError &ex) {
        std::cerr << "advdel: " << ex.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument &ex) {
        std::cerr << "advdel: " << ex.what() << "\n";
        return kInvalidInput;
    } catch (const AdviceError &ex) {
        std::cerr << "advdel: advice: " << ex.what() << "\n";
        return kFailed;
    } catch (const EngineError &ex) {
        std::cerr << "advdel: engine: " << ex.what() << "\n";
        return kFailed;
    } catch (const std::exception &ex) {
        std::cerr << "advdel: " << ex.what() << "\n";
        return kInvalidInput;
    }
}
