#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "advdel/errors.hpp"
#include "advdel/isomorphism.hpp"
#include "oracle.hpp"

using namespace advdel;

TEST(Induced, Examples)
{
    EXPECT_TRUE(find_induced(path_graph(3), path_graph(4)).has_value());
    EXPECT_FALSE(find_induced(complete_graph(3), cycle_graph(4)).has_value());
    EXPECT_FALSE(find_induced(path_graph(3), complete_graph(3)).has_value());
}

TEST(Induced, CanonicalChoiceIsSmallestImageThenMapping)
{
    // triangles {0,1,2} and {1,2,3}
    const Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    const auto m = find_induced(complete_graph(3), g);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->image, (std::vector<Vertex>{0, 1, 2}));
    const auto later = find_induced(complete_graph(3), g, ~bit(0));
    ASSERT_TRUE(later);
    EXPECT_EQ(later->image, (std::vector<Vertex>{1, 2, 3}));
    // P_3 = 0-1-2 inside star centered at 3: image {0,1,3}, center maps to 3
    const Graph star(4, {{0, 3}, {1, 3}, {2, 3}});
    const auto p = find_induced(path_graph(3), star);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->image, (std::vector<Vertex>{0, 3, 1}));
}

TEST(Induced, AgreesWithBruteForce)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const Graph pattern = oracle::random_graph(rng, 1 + trial % 4, 0.5);
        const Graph host = oracle::random_graph(rng, 3 + trial % 6, 0.5);
        const VertexMask active = rng() & host.all_vertices();
        std::vector<bool> alive(host.order());
        for (int v = 0; v < host.order(); ++v)
            alive[v] = (active >> v) & 1;
        const bool expected = oracle::embeds(pattern, oracle::matrix(host), alive);
        const auto found = find_induced(pattern, host, active);
        ASSERT_EQ(found.has_value(), expected) << trial;
        if (found) {
            EXPECT_TRUE(is_induced_embedding(pattern, host, *found));
            EXPECT_EQ(found->image_set(), vertices_of(mask_of(found->image_set())));
            for (Vertex v : found->image)
                EXPECT_TRUE((active >> v) & 1);
            // no lexicographically smaller image set carries a copy
            const VertexSet chosen = found->image_set();
            for (std::uint64_t s = 0; s <= host.all_vertices(); ++s) {
                if ((s & ~active) || __builtin_popcountll(s) != pattern.order())
                    continue;
                const VertexSet cand = vertices_of(s);
                if (cand >= chosen)
                    continue;
                EXPECT_FALSE(is_isomorphic(induced_subgraph(host, cand), pattern));
            }
        }
    }
}

TEST(Free, Examples)
{
    const std::vector<Graph> f{complete_graph(3), edgeless_graph(3)};
    EXPECT_TRUE(is_free(cycle_graph(5), f));
    EXPECT_FALSE(is_free(complete_graph(6), f));
    EXPECT_TRUE(is_free(complete_graph(6), std::vector<Graph>{}));
}

TEST(Isomorphic, Examples)
{
    EXPECT_TRUE(is_isomorphic(path_graph(3), glue(complete_graph(2), 0, complete_graph(2), 0)));
    EXPECT_FALSE(is_isomorphic(complete_graph(3), path_graph(3)));
    EXPECT_TRUE(is_isomorphic(cycle_graph(5), complement(cycle_graph(5))));
}

TEST(Canonical, InvariantUnderRelabeling)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 10;
        const Graph g = oracle::random_graph(rng, n, 0.4);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        EXPECT_EQ(canonical_form(g), canonical_form(h));
        EXPECT_EQ(canonical_graph(g), canonical_graph(h));
        EXPECT_TRUE(is_isomorphic(canonical_graph(g), g));
    }
}

TEST(Canonical, SeparatesClassesLikeBruteForce)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 5;
        const Graph a = oracle::random_graph(rng, n, 0.5);
        const Graph b = oracle::random_graph(rng, n, 0.5);
        EXPECT_EQ(canonical_form(a) == canonical_form(b), oracle::brute_isomorphic(a, b)) << trial;
    }
}

TEST(Enumerate, ClassicalCounts)
{
    const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
    const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(enumerate_graphs(n, false).size(), all[n - 1]) << n;
        EXPECT_EQ(enumerate_graphs(n, true).size(), connected[n - 1]) << n;
    }
}

TEST(Enumerate, MatchesBruteForceClasses)
{
    for (int n = 1; n <= 5; ++n) {
        std::set<std::vector<bool>> classes;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs); ++s) {
            std::vector<Edge> edges;
            int i = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++i)
                    if ((s >> i) & 1)
                        edges.emplace_back(u, v);
            classes.insert(oracle::brute_canonical(Graph(n, edges)));
        }
        std::set<std::vector<bool>> listed;
        for (const Graph &g : enumerate_graphs(n, false))
            listed.insert(oracle::brute_canonical(g));
        EXPECT_EQ(listed, classes) << n;
    }
}

TEST(Enumerate, SortedByKeyAndCapped)
{
    const auto graphs = enumerate_graphs(5, false);
    for (std::size_t i = 1; i < graphs.size(); ++i)
        EXPECT_LT(canonical_form(graphs[i - 1]), canonical_form(graphs[i]));
    EXPECT_THROW(enumerate_graphs(9, false), CapExceeded);
    EXPECT_THROW(enumerate_graphs(5, false, 4), CapExceeded);
}
