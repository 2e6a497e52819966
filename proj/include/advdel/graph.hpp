#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace advdel {

using Vertex = int;

// Bit i set <=> vertex i is a member. Graphs are limited to 64 vertices.
using VertexMask = std::uint64_t;

/// Undirected edge, always stored normalized as (low label, high label).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

using VertexSet = std::vector<Vertex>;  // sorted ascending
using EdgeSet = std::vector<Edge>;      // sorted lexicographically

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

constexpr VertexMask prefix_mask(int count)
{
    return count >= 64 ? ~VertexMask{0} : (VertexMask{1} << count) - 1;
}

VertexMask mask_of(std::span<const Vertex> vertices);
VertexSet vertices_of(VertexMask mask);

/// Immutable simple undirected graph on labels 0..order-1.
///
/// Labels double as reveal order for online instances, so every operation
/// that builds a new graph documents where the labels of its inputs land.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::span<const Edge> edges);
    Graph(int order, std::initializer_list<Edge> edges);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int edge_count() const noexcept;

    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    VertexMask neighbors(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const;
    VertexMask all_vertices() const noexcept { return prefix_mask(order()); }

    EdgeSet edges() const;
    /// Edges with both ends inside `mask`, lexicographic.
    EdgeSet edges_within(VertexMask mask) const;
    int edge_count_within(VertexMask mask) const;

    bool operator==(const Graph &) const = default;

private:
    friend class GraphBuilder;
    std::vector<VertexMask> rows_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int order);
    explicit GraphBuilder(const Graph &g);

    GraphBuilder &add_edge(Vertex u, Vertex v);
    GraphBuilder &remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    int order() const noexcept { return static_cast<int>(rows_.size()); }

    Graph build() const;

private:
    void check(Vertex u, Vertex v) const;
    std::vector<VertexMask> rows_;
};

// Named graphs.
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

Graph complement(const Graph &g);

/// g1 keeps labels 0..|g1|-1, g2 is shifted by |g1|.
Graph disjoint_union(const Graph &g1, const Graph &g2);
/// Disjoint union plus every edge between the two sides. Same labeling as disjoint_union.
Graph join(const Graph &g1, const Graph &g2);

/// Identify v1 of g1 with v2 of g2. g1 keeps its labels; the vertices of g2
/// other than v2 follow in ascending order. Throws std::out_of_range on bad labels.
Graph glue(const Graph &g1, Vertex v1, const Graph &g2, Vertex v2);

/// Subgraph induced by `vertices`, relabeled so vertices[i] becomes i.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph &g, VertexMask mask);

/// Same vertex set, listed edges removed. Edges absent from g are ignored.
Graph remove_edges(const Graph &g, std::span<const Edge> edges);

/// new_label[v] is where vertex v of g lands. Must be a permutation.
Graph relabel(const Graph &g, std::span<const Vertex> new_label);

/// Components of g restricted to `active`, each sorted, ordered by smallest label.
std::vector<VertexSet> connected_components(const Graph &g, VertexMask active);
std::vector<VertexSet> connected_components(const Graph &g);

/// Join components: the connected components of the complement.
std::vector<VertexSet> join_decomposition(const Graph &g);

bool is_connected(const Graph &g);
bool is_join_graph(const Graph &g);
int clique_number(const Graph &g);
bool has_universal_vertex(const Graph &g);
bool has_isolated_vertex(const Graph &g);
int isolated_vertex_count(const Graph &g);

}  // namespace advdel
