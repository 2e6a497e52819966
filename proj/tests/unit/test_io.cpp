#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "advdel/algorithms.hpp"
#include "advdel/errors.hpp"
#include "advdel/family_io.hpp"
#include "advdel/graph_io.hpp"
#include "advdel/trace_io.hpp"
#include "oracle.hpp"

using namespace advdel;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / ("advdel_test_io_" + name);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST(GraphText, NormalizedOutput)
{
    EXPECT_EQ(write_graph(path_graph(3)), "3 2\n0 1\n1 2\n");
    EXPECT_EQ(parse_graph("3 2\n2 1\n1 0\n"), path_graph(3));
    EXPECT_EQ(parse_graph("0 0\n"), Graph(0));
}

TEST(GraphText, RoundTrip)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, trial % 20, 0.3);
        const std::string text = write_graph(g);
        EXPECT_EQ(parse_graph(text), g);
        EXPECT_EQ(write_graph(parse_graph(text)), text);
    }
}

TEST(GraphText, Errors)
{
    EXPECT_THROW(parse_graph(""), ParseError);
    EXPECT_THROW(parse_graph("3 1\n0 3\n"), ParseError);
    EXPECT_THROW(parse_graph("3 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
    EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);
    EXPECT_THROW(parse_graph("3 4\n"), ParseError);
    EXPECT_THROW(parse_graph("x 1\n"), ParseError);
    EXPECT_THROW(parse_graph("65 0\n"), ParseError);
}

TEST(Graph6, KnownStrings)
{
    EXPECT_EQ(to_graph6(Graph(0)), "?");
    EXPECT_EQ(to_graph6(Graph(1)), "@");
    EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
    EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("Bww"), ParseError);
    EXPECT_THROW(parse_graph6("B\x01"), ParseError);
}

TEST(Graph6, RoundTrip)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, trial % 64 + 1, 0.4);
        EXPECT_EQ(parse_graph6(to_graph6(g)), g);
    }
}

TEST(GraphList, HeaderAndMixedFormats)
{
    const GraphList list = parse_graph_list("# name test\n# order 3\n3 2\n0 1\n1 2\nBw\n# note\n1 0\n");
    EXPECT_EQ(list.header.at("name"), "test");
    EXPECT_EQ(list.header.at("order"), "3");
    ASSERT_EQ(list.graphs.size(), 3u);
    EXPECT_EQ(list.graphs[0], path_graph(3));
    EXPECT_EQ(list.graphs[1], complete_graph(3));
    EXPECT_EQ(list.graphs[2], Graph(1));
    EXPECT_EQ(parse_graph_list(write_graph_list(list)).graphs, list.graphs);
    EXPECT_EQ(parse_graph_list(write_graph_list(list)).header, list.header);
}

TEST(TraceIo, RoundTripNodeAndEdge)
{
    const ObstructionSet k3({complete_graph(3)});
    const Family fam = connected_lb_family(complete_graph(3), 2);
    const OnlineInstance &inst = fam.members[5].instance;
    const AdvisorOutput out = naive_node_advisor(inst, k3);
    NaiveAlgorithm alg;
    AdviceReader reader(out.tape);
    const Trace t = run(inst, k3, alg, reader);
    EXPECT_EQ(parse_trace(write_trace(t)), t);

    const Family ef = edge_lb_family(Graph(4, {{0, 1}, {2, 3}}), 2);
    GreedyBaseline g;
    const Trace te = run(ef.members[3].instance, ef.obstruction, g);
    EXPECT_EQ(parse_trace(write_trace(te)), te);
}

TEST(TraceIo, FieldNames)
{
    GreedyBaseline g;
    const Trace t = run({complete_graph(3), Mode::Node}, ObstructionSet({complete_graph(3)}), g);
    const std::string text = write_trace(t);
    EXPECT_EQ(text,
              "{\"initial_bits\":0,\"mode\":\"node\",\"type\":\"start\"}\n"
              "{\"bits\":0,\"events\":[],\"revealed\":0,\"step\":1,\"type\":\"step\"}\n"
              "{\"bits\":0,\"events\":[],\"revealed\":1,\"step\":2,\"type\":\"step\"}\n"
              "{\"bits\":0,\"events\":[{\"deleted\":0,\"member\":0,\"violation\":[0,1,2]}],\"revealed\":2,"
              "\"step\":3,\"type\":\"step\"}\n"
              "{\"deleted\":[0],\"deletions\":1,\"total_bits\":0,\"type\":\"end\"}\n");
}

TEST(TraceIo, Errors)
{
    EXPECT_THROW(parse_trace(""), ParseError);
    EXPECT_THROW(parse_trace("{\"type\":\"step\"}\n"), ParseError);
    EXPECT_THROW(parse_trace("not json\n"), ParseError);
    EXPECT_THROW(parse_trace("{\"initial_bits\":0,\"mode\":\"node\",\"type\":\"start\"}\n"), ParseError);
}

TEST(FamilyIo, RoundTrip)
{
    const Family fams[] = {connected_lb_family(path_graph(3), 2),
                           edge_lb_family(Graph(4, {{0, 1}, {2, 3}}), 1),
                           clique_join_family(ObstructionSet({complete_graph(3), edgeless_graph(3)}), 4)};
    int i = 0;
    for (const Family &fam : fams) {
        const fs::path dir = scratch("family" + std::to_string(i++));
        write_family(fam, dir);
        const Family back = read_family(dir);
        EXPECT_EQ(back.kind, fam.kind);
        EXPECT_EQ(back.parameter, fam.parameter);
        EXPECT_EQ(back.optimum_size, fam.optimum_size);
        EXPECT_EQ(back.unique_optimum, fam.unique_optimum);
        EXPECT_EQ(back.expected_leaves, fam.expected_leaves);
        EXPECT_EQ(back.base, fam.base);
        ASSERT_EQ(back.obstruction.size(), fam.obstruction.size());
        for (std::size_t k = 0; k < fam.obstruction.size(); ++k)
            EXPECT_EQ(back.obstruction[k], fam.obstruction[k]);
        ASSERT_EQ(back.members.size(), fam.members.size());
        for (std::size_t k = 0; k < fam.members.size(); ++k) {
            EXPECT_EQ(back.members[k].instance, fam.members[k].instance);
            EXPECT_EQ(back.members[k].choice, fam.members[k].choice);
            EXPECT_EQ(back.members[k].expected_optimum, fam.members[k].expected_optimum);
        }
        fs::remove_all(dir);
    }
}

TEST(FamilyIo, MissingManifest)
{
    const fs::path dir = scratch("missing");
    fs::create_directories(dir);
    EXPECT_THROW(read_family(dir), ParseError);
    write_file(dir / "manifest.json", "{\"kind\": 3}");
    EXPECT_THROW(read_family(dir), ParseError);
    fs::remove_all(dir);
}
