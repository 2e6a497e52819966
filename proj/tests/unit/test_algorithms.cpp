#include <gtest/gtest.h>

#include <random>

#include "advdel/algorithms.hpp"
#include "advdel/errors.hpp"
#include "advdel/gadgets.hpp"
#include "advdel/offline.hpp"
#include "oracle.hpp"

using namespace advdel;

namespace {

const std::uint64_t kSeeds[] = {0, 1, 0xdeadbeef};

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

ObstructionSet ramsey33() { return ObstructionSet({complete_graph(3), edgeless_graph(3)}); }

Trace run_naive(const OnlineInstance &inst, const ObstructionSet &f, std::uint64_t seed, AdvisorOutput *out = nullptr)
{
    AdvisorOutput o = inst.mode == Mode::Node ? naive_node_advisor(inst, f) : naive_edge_advisor(inst, f);
    NaiveAlgorithm alg;
    AdviceReader reader(o.tape, seed);
    Trace t = run(inst, f, alg, reader);
    EXPECT_EQ(reader.filler_bits_read(), 0u);
    if (out)
        *out = o;
    return t;
}

}  // namespace

TEST(Naive, K3GadgetsNineBits)
{
    const ObstructionSet f({complete_graph(3)});
    const Family fam = connected_lb_family(complete_graph(3), 2);
    for (const FamilyMember &m : fam.members) {
        AdvisorOutput out;
        const Trace t = run_naive(m.instance, f, 3, &out);
        EXPECT_EQ(t.total_bits, 9u);
        EXPECT_EQ(out.tape.size(), 9u);
        EXPECT_EQ(out.tape.to_bit_string().substr(0, 5), "11010");
        EXPECT_EQ(t.deleted, m.expected_optimum);
        EXPECT_EQ(naive_budget(2, f, Mode::Node), 9u);
    }
}

TEST(Naive, SmallExamples)
{
    const ObstructionSet k2({complete_graph(2)});
    AdvisorOutput out;
    Trace t = run_naive({complete_graph(2), Mode::Node}, k2, 0, &out);
    EXPECT_EQ(out.opt, 1u);
    EXPECT_EQ(naive_index_width(k2, Mode::Node), 1u);
    EXPECT_EQ(t.total_bits, 3u + 1u);

    const ObstructionSet p3({path_graph(3)});
    t = run_naive({path_graph(3), Mode::Edge}, p3, 0, &out);
    EXPECT_EQ(out.opt, 1u);
    EXPECT_EQ(naive_index_width(p3, Mode::Edge), 1u);
    EXPECT_EQ(t.total_bits, 4u);
}

TEST(Naive, EdgeFamilyDeletesChosenEdge)
{
    const Family fam = edge_lb_family(two_k2(), 1);
    ASSERT_EQ(fam.members.size(), 2u);
    for (const FamilyMember &m : fam.members) {
        const Trace t = run_naive(m.instance, fam.obstruction, 9);
        EXPECT_EQ(t.deleted, m.expected_optimum);
    }
}

TEST(Naive, OptimalOnRandomNodeInstances)
{
    std::mt19937_64 rng(1001);
    const std::vector<Graph> fams[] = {{complete_graph(3)}, {path_graph(3)}, {two_k2()}};
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.5);
        const auto &fam = fams[trial % 3];
        const ObstructionSet f(fam);
        const oracle::Optimum want = oracle::node_optimum(g, fam);
        for (std::uint64_t seed : kSeeds) {
            const Trace t = run_naive({g, Mode::Node}, f, seed);
            ASSERT_EQ(t.deletions(), want.size) << trial;
            EXPECT_EQ(t.total_bits, naive_budget(want.size, f, Mode::Node));
        }
    }
}

TEST(Naive, OptimalOnRandomEdgeInstances)
{
    std::mt19937_64 rng(1002);
    const std::vector<Graph> fams[] = {{complete_graph(3)}, {path_graph(3)}, {two_k2()}};
    int checked = 0;
    while (checked < 200) {
        const Graph g = oracle::random_graph(rng, 3 + checked % 5, 0.5);
        if (g.edge_count() > 12)
            continue;
        const auto &fam = fams[checked % 3];
        const ObstructionSet f(fam);
        const oracle::Optimum want = oracle::edge_optimum(g, fam);
        for (std::uint64_t seed : kSeeds) {
            const Trace t = run_naive({g, Mode::Edge}, f, seed);
            ASSERT_EQ(t.deletions(), want.size) << checked;
            EXPECT_EQ(t.total_bits, naive_budget(want.size, f, Mode::Edge));
        }
        ++checked;
    }
}

TEST(Naive, BudgetLinearInM)
{
    const ObstructionSet f({complete_graph(3)});
    std::vector<std::size_t> bits;
    for (int m = 1; m <= 4; ++m) {
        const Family fam = connected_lb_family(complete_graph(3), m);
        const Trace t = run_naive(fam.members.back().instance, f, 0);
        bits.push_back(t.total_bits);
        EXPECT_EQ(t.total_bits, naive_budget(m, f, Mode::Node));
    }
    // index part grows by exactly 2 bits per gadget
    for (std::size_t i = 1; i < bits.size(); ++i)
        EXPECT_EQ(bits[i] - bits[i - 1] - (self_delimiting_length(i + 1) - self_delimiting_length(i)), 2u);
}

TEST(Naive, WrongAdviceIsDetectedOrSuboptimal)
{
    const ObstructionSet f({complete_graph(3)});
    const OnlineInstance inst{connected_lb_family(complete_graph(3), 1).members[0].instance};
    // opt announced as 0: no indices
    AdviceTape empty;
    empty.write_self_delimiting(0);
    NaiveAlgorithm alg;
    AdviceReader r(empty);
    EXPECT_THROW(run(inst, f, alg, r), AdviceError);
    // index 3 is outside a triangle
    AdviceTape bad;
    bad.write_self_delimiting(1);
    bad.write_fixed(3, 2);
    NaiveAlgorithm alg2;
    AdviceReader r2(bad);
    EXPECT_THROW(run(inst, f, alg2, r2), AdviceError);
}

TEST(Log, K4JoinC5ThirtyBits)
{
    const ObstructionSet f = ramsey33();
    const auto cert = *ramsey_bound(f);
    const OnlineInstance inst{join(complete_graph(4), cycle_graph(5)), Mode::Node};
    const AdvisorOutput out = log_advisor(inst, f, cert);
    ASSERT_TRUE(out.fixed);
    EXPECT_LE(out.fixed->u, 5u);
    EXPECT_EQ(out.tape.size(), 30u);
    for (std::uint64_t seed : kSeeds) {
        LogAlgorithm alg(cert);
        AdviceReader reader(out.tape, seed);
        const Trace t = run(inst, f, alg, reader);
        EXPECT_EQ(t.total_bits, 30u);
        EXPECT_EQ(t.deleted.vertices, (VertexSet{0, 1, 2, 3}));
        EXPECT_EQ(alg.deletions(), 4u);
        EXPECT_EQ(alg.round(), 5u);
    }
    EXPECT_EQ(log_budget(4, 6, 3), 30u);
}

TEST(Log, OptimalOnCliqueJoinFamilies)
{
    const ObstructionSet f = ramsey33();
    const auto cert = *ramsey_bound(f);
    for (int opt = 4; opt <= 6; ++opt) {
        const Family fam = clique_join_family(f, opt);
        EXPECT_EQ(fam.members.size(), oracle::binomial(opt + 2, 2));
        for (const FamilyMember &m : fam.members) {
            const AdvisorOutput out = log_advisor(m.instance, f, cert);
            for (std::uint64_t seed : kSeeds) {
                LogAlgorithm alg(cert);
                AdviceReader reader(out.tape, seed);
                const Trace t = run(m.instance, f, alg, reader);
                ASSERT_EQ(t.deletions(), static_cast<std::size_t>(opt));
                EXPECT_EQ(t.deleted, m.expected_optimum);
                EXPECT_EQ(t.total_bits, log_budget(opt, cert.bound, 3));
            }
        }
    }
}

TEST(Log, OptimalOnRandomInstances)
{
    const ObstructionSet f = ramsey33();
    const auto cert = *ramsey_bound(f);
    std::mt19937_64 rng(555);
    const auto brute = std::vector<Graph>{complete_graph(3), edgeless_graph(3)};
    int ran = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = oracle::random_graph(rng, 3 + trial % 7, 0.5);
        const oracle::Optimum want = oracle::node_optimum(g, brute);
        AdvisorOutput out;
        try {
            out = log_advisor({g, Mode::Node}, f, cert);
        } catch (const AdviceError &) {
            continue;  // more survivors to fix than slots
        }
        LogAlgorithm alg(cert);
        AdviceReader reader(out.tape, static_cast<std::uint64_t>(trial));
        const Trace t = run({g, Mode::Node}, f, alg, reader);
        EXPECT_EQ(t.deletions(), want.size) << trial;
        EXPECT_EQ(t.total_bits, log_budget(want.size, cert.bound, 3));
        ++ran;
    }
    EXPECT_GE(ran, 60);
}

TEST(Log, BudgetGrowsLogarithmically)
{
    // (R-1)(ceil log opt + 2) + ceil log 5 + selfdelim(opt)
    for (std::size_t opt = 4; opt <= 8; ++opt)
        EXPECT_EQ(log_budget(opt, 6, 3),
                  5 * (static_cast<std::size_t>(ceil_log2(opt)) + 2) + 3 + self_delimiting_length(opt));
    EXPECT_LT(log_budget(8, 6, 3) - log_budget(4, 6, 3), naive_budget(8, ramsey33(), Mode::Node) -
                                                            naive_budget(4, ramsey33(), Mode::Node));
}

TEST(Log, Preconditions)
{
    const auto cert = *ramsey_bound(ramsey33());
    EXPECT_THROW(log_advisor({complete_graph(3), Mode::Node}, ObstructionSet({complete_graph(3)}), cert),
                 std::invalid_argument);
    EXPECT_THROW(log_advisor({complete_graph(3), Mode::Edge}, ramsey33(), cert), std::invalid_argument);
}

TEST(Greedy, Examples)
{
    const ObstructionSet f({complete_graph(3)});
    GreedyBaseline g1;
    // triangles {0,1,2} and {2,3,4}: greedy deletes 0 then 2, optimum is {2}
    const OnlineInstance bow{glue(complete_graph(3), 2, complete_graph(3), 0), Mode::Node};
    const Trace t = run(bow, f, g1);
    EXPECT_EQ(t.deletions(), 2u);
    EXPECT_EQ(offline_optimum(bow.graph, f, Mode::Node).size, 1u);
    GreedyBaseline g2;
    EXPECT_EQ(run({cycle_graph(5), Mode::Node}, f, g2).deletions(), 0u);
    GreedyBaseline g3;
    EXPECT_EQ(run({complete_graph(3), Mode::Node}, f, g3).deletions(), 1u);
}

TEST(Determinism, SameTapeSameTrace)
{
    const ObstructionSet f({complete_graph(3)});
    const Family fam = connected_lb_family(complete_graph(3), 2);
    const OnlineInstance &inst = fam.members[4].instance;
    const AdvisorOutput out = naive_node_advisor(inst, f);
    NaiveAlgorithm a, b;
    AdviceReader ra(out.tape, 1), rb(out.tape, 2);
    EXPECT_EQ(run(inst, f, a, ra), run(inst, f, b, rb));
}
