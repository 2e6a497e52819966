#include <gtest/gtest.h>

#include "advdel/algorithms.hpp"
#include "advdel/verifier.hpp"
#include "oracle.hpp"

using namespace advdel;

namespace {

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

ObstructionSet ramsey33() { return ObstructionSet({complete_graph(3), edgeless_graph(3)}); }

}  // namespace

TEST(EExtensionCheck, ConstructionPasses)
{
    for (const Edge &e : two_k2().edges())
        EXPECT_TRUE(verify_e_extension(e_extension(two_k2(), e), two_k2()));
}

TEST(EExtensionCheck, HostEqualToH)
{
    const EExtensionCheck c = check_e_extension(two_k2(), Edge{0, 1}, two_k2());
    EXPECT_TRUE(c.contains_h);
    EXPECT_TRUE(c.e_destroys_all);
    EXPECT_FALSE(c.other_edges_keep_h);
    EXPECT_EQ(c.failing_edge, (Edge{2, 3}));
    EXPECT_FALSE(c.ok());
}

TEST(EExtensionCheck, ExtraEdgeRemovedFails)
{
    const Graph h = two_k2();
    const EExtension ext = e_extension(h, Edge{0, 1});
    // drop one cross edge so that some other edge becomes critical
    for (const Edge &f : ext.graph.edges()) {
        if (f == ext.edge)
            continue;
        const Edge gone[] = {f};
        const Graph smaller = remove_edges(ext.graph, gone);
        const EExtensionCheck c = check_e_extension(smaller, ext.edge, h);
        bool brute_ok = oracle::embeds(h, smaller);
        const Edge only_e[] = {ext.edge};
        brute_ok = brute_ok && !oracle::embeds(h, remove_edges(smaller, only_e));
        for (const Edge &g : smaller.edges()) {
            if (g == ext.edge)
                continue;
            const Edge only_g[] = {g};
            brute_ok = brute_ok && oracle::embeds(h, remove_edges(smaller, only_g));
        }
        EXPECT_EQ(c.ok(), brute_ok);
    }
}

TEST(UniqueOptimum, Examples)
{
    const ObstructionSet k3({complete_graph(3)});
    const OnlineInstance bow{glue_gadget(complete_graph(3), 1), Mode::Node};
    EXPECT_TRUE(verify_unique_optimum(bow, k3, DeletionSet{{1}, {}}));
    EXPECT_FALSE(verify_unique_optimum(bow, k3, DeletionSet{{0}, {}}));
    const OnlineInstance kc{join(complete_graph(4), cycle_graph(5)), Mode::Node};
    EXPECT_TRUE(verify_unique_optimum(kc, ramsey33(), DeletionSet{{0, 1, 2, 3}, {}}));
    EXPECT_FALSE(verify_unique_optimum({complete_graph(3), Mode::Node}, k3, DeletionSet{{0}, {}}));
}

TEST(ForcedActions, TokensFollowTrace)
{
    const ObstructionSet k3({complete_graph(3)});
    const OnlineInstance inst{glue_gadget(complete_graph(3), 2), Mode::Node};
    const auto tokens = forced_action_sequence(inst, k3, DeletionSet{{2}, {}});
    ASSERT_EQ(tokens.size(), 5u);
    EXPECT_EQ(tokens[2].deleted, (std::vector<Element>{Vertex{2}}));
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        EXPECT_EQ(tokens[i].step, static_cast<int>(i) + 1);
        EXPECT_EQ(tokens[i].prefix.size(), i + 1);
        if (i != 2) {
            EXPECT_TRUE(tokens[i].deleted.empty());
        }
    }
}

TEST(Family, ConnectedP3)
{
    const DistinguishabilityReport r = verify_family(connected_lb_family(path_graph(3), 2));
    EXPECT_EQ(r.family_size, 9u);
    EXPECT_EQ(r.leaves, 9u);
    EXPECT_EQ(r.lower_bound_bits, 4u);
    EXPECT_TRUE(r.all_pairs_conflict);
    EXPECT_TRUE(r.optima_ok);
    EXPECT_TRUE(r.certified(9));
    EXPECT_LE(r.leaves, r.family_size);
    EXPECT_LE(r.min_divergence_step, r.max_divergence_step);
    EXPECT_GE(r.min_divergence_step, 3);
}

TEST(Family, EdgeTwoK2)
{
    const DistinguishabilityReport r = verify_family(edge_lb_family(two_k2(), 2));
    EXPECT_EQ(r.leaves, 4u);
    EXPECT_EQ(r.lower_bound_bits, 2u);
    EXPECT_TRUE(r.certified(4));
}

TEST(Family, CliqueJoinOptFour)
{
    const DistinguishabilityReport r = verify_family(clique_join_family(ramsey33(), 4));
    EXPECT_EQ(r.leaves, 15u);
    EXPECT_EQ(r.lower_bound_bits, 4u);
    EXPECT_TRUE(r.certified(15));
}

TEST(Family, ParallelMatchesSequential)
{
    const Family fam = disconnected_lb_family(two_k2(), 2);
    const DistinguishabilityReport a = verify_family(fam, 1);
    const DistinguishabilityReport b = verify_family(fam, 4);
    EXPECT_EQ(a.leaves, b.leaves);
    EXPECT_EQ(a.distinct_sequences, b.distinct_sequences);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.mean_divergence_step, b.mean_divergence_step);
    ASSERT_EQ(a.members.size(), b.members.size());
    for (std::size_t i = 0; i < a.members.size(); ++i)
        EXPECT_EQ(a.members[i].optimum_count, b.members[i].optimum_count);
    EXPECT_EQ(a.leaves, 16u);
}

TEST(Family, DetectsBrokenPrediction)
{
    Family fam = connected_lb_family(complete_graph(3), 1);
    fam.members[1].expected_optimum = fam.members[0].expected_optimum;
    const DistinguishabilityReport r = verify_family(fam);
    EXPECT_FALSE(r.optima_ok);
    EXPECT_FALSE(r.certified(3));
}

TEST(Family, DuplicatedMemberCollapses)
{
    Family fam = connected_lb_family(complete_graph(3), 1);
    fam.members.push_back(fam.members[0]);
    const DistinguishabilityReport r = verify_family(fam);
    EXPECT_EQ(r.leaves, 3u);
    EXPECT_FALSE(r.all_pairs_conflict);
    EXPECT_FALSE(r.certified(4));
}

TEST(Audit, Budgets)
{
    const ObstructionSet k3({complete_graph(3)});
    const Family fam = connected_lb_family(complete_graph(3), 2);
    const OnlineInstance &inst = fam.members[0].instance;
    const AdvisorOutput out = naive_node_advisor(inst, k3);
    NaiveAlgorithm alg;
    AdviceReader reader(out.tape);
    const Trace t = run(inst, k3, alg, reader);
    EXPECT_TRUE(audit_bits(t, 9));
    EXPECT_FALSE(audit_bits(t, 8));

    const auto cert = *ramsey_bound(ramsey33());
    const OnlineInstance kc{join(complete_graph(4), cycle_graph(5)), Mode::Node};
    const AdvisorOutput lo = log_advisor(kc, ramsey33(), cert);
    LogAlgorithm la(cert);
    AdviceReader lr(lo.tape);
    EXPECT_TRUE(audit_bits(run(kc, ramsey33(), la, lr), 30));

    GreedyBaseline g;
    EXPECT_TRUE(audit_bits(run(inst, k3, g), 0));
}
