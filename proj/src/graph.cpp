#include "advdel/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace advdel {

VertexMask mask_of(std::span<const Vertex> vertices)
{
    VertexMask mask = 0;
    for (Vertex v : vertices)
        mask |= bit(v);
    return mask;
}

VertexSet vertices_of(VertexMask mask)
{
    VertexSet out;
    out.reserve(std::popcount(mask));
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

namespace {

void check_order(int order)
{
    if (order < 0 || order > Graph::kMaxOrder)
        throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." +
                                    std::to_string(Graph::kMaxOrder));
}

}  // namespace

Graph::Graph(int order)
{
    check_order(order);
    rows_.assign(order, 0);
}

Graph::Graph(int order, std::span<const Edge> edges)
{
    GraphBuilder b(order);
    for (const Edge &e : edges)
        b.add_edge(e.u, e.v);
    *this = b.build();
}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::span<const Edge>(edges.begin(), edges.size()))
{
}

int Graph::edge_count() const noexcept
{
    int twice = 0;
    for (VertexMask row : rows_)
        twice += std::popcount(row);
    return twice / 2;
}

int Graph::degree(Vertex v) const { return std::popcount(rows_[v]); }

EdgeSet Graph::edges() const { return edges_within(all_vertices()); }

EdgeSet Graph::edges_within(VertexMask mask) const
{
    EdgeSet out;
    for (Vertex u : vertices_of(mask))
        for (Vertex v : vertices_of(rows_[u] & mask & ~prefix_mask(u + 1)))
            out.emplace_back(u, v);
    return out;
}

int Graph::edge_count_within(VertexMask mask) const
{
    int twice = 0;
    for (Vertex u : vertices_of(mask))
        twice += std::popcount(rows_[u] & mask);
    return twice / 2;
}

GraphBuilder::GraphBuilder(int order)
{
    check_order(order);
    rows_.assign(order, 0);
}

GraphBuilder::GraphBuilder(const Graph &g) : rows_(g.rows_) {}

void GraphBuilder::check(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw std::out_of_range("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") outside graph of order " + std::to_string(order()));
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

GraphBuilder &GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check(u, v);
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
    return *this;
}

GraphBuilder &GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check(u, v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
    return *this;
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.rows_ = rows_;
    return g;
}

Graph complete_graph(int n) { return complement(edgeless_graph(n)); }

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph complement(const Graph &g)
{
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return b.build();
}

namespace {

GraphBuilder union_builder(const Graph &g1, const Graph &g2)
{
    const int n1 = g1.order();
    GraphBuilder b(n1 + g2.order());
    for (const Edge &e : g1.edges())
        b.add_edge(e.u, e.v);
    for (const Edge &e : g2.edges())
        b.add_edge(e.u + n1, e.v + n1);
    return b;
}

}  // namespace

Graph disjoint_union(const Graph &g1, const Graph &g2) { return union_builder(g1, g2).build(); }

Graph join(const Graph &g1, const Graph &g2)
{
    GraphBuilder b = union_builder(g1, g2);
    const int n1 = g1.order();
    for (Vertex u = 0; u < n1; ++u)
        for (Vertex v = 0; v < g2.order(); ++v)
            b.add_edge(u, n1 + v);
    return b.build();
}

Graph glue(const Graph &g1, Vertex v1, const Graph &g2, Vertex v2)
{
    if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order())
        throw std::out_of_range("glue vertex outside graph");
    const int n1 = g1.order();
    std::vector<Vertex> where(g2.order());
    for (Vertex v = 0, next = n1; v < g2.order(); ++v)
        where[v] = v == v2 ? v1 : next++;
    GraphBuilder b(n1 + g2.order() - 1);
    for (const Edge &e : g1.edges())
        b.add_edge(e.u, e.v);
    for (const Edge &e : g2.edges())
        b.add_edge(where[e.u], where[e.v]);
    return b.build();
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> vertices)
{
    GraphBuilder b(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return b.build();
}

Graph induced_subgraph(const Graph &g, VertexMask mask)
{
    const VertexSet vs = vertices_of(mask);
    return induced_subgraph(g, vs);
}

Graph remove_edges(const Graph &g, std::span<const Edge> edges)
{
    GraphBuilder b(g);
    for (const Edge &e : edges)
        b.remove_edge(e.u, e.v);
    return b.build();
}

Graph relabel(const Graph &g, std::span<const Vertex> new_label)
{
    if (static_cast<int>(new_label.size()) != g.order())
        throw std::invalid_argument("relabel: permutation size mismatch");
    VertexMask seen = 0;
    for (Vertex v : new_label) {
        if (v < 0 || v >= g.order() || (seen & bit(v)))
            throw std::invalid_argument("relabel: not a permutation");
        seen |= bit(v);
    }
    GraphBuilder b(g.order());
    for (const Edge &e : g.edges())
        b.add_edge(new_label[e.u], new_label[e.v]);
    return b.build();
}

std::vector<VertexSet> connected_components(const Graph &g, VertexMask active)
{
    std::vector<VertexSet> parts;
    VertexMask left = active & g.all_vertices();
    while (left) {
        VertexMask comp = left & -left;
        VertexMask frontier = comp;
        while (frontier) {
            const Vertex v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            const VertexMask fresh = g.neighbors(v) & left & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        parts.push_back(vertices_of(comp));
        left &= ~comp;
    }
    return parts;
}

std::vector<VertexSet> connected_components(const Graph &g)
{
    return connected_components(g, g.all_vertices());
}

std::vector<VertexSet> join_decomposition(const Graph &g)
{
    return connected_components(complement(g));
}

bool is_connected(const Graph &g) { return connected_components(g).size() == 1; }

bool is_join_graph(const Graph &g) { return join_decomposition(g).size() > 1; }

namespace {

int max_clique_from(const Graph &g, VertexMask candidates, int size)
{
    if (!candidates)
        return size;
    int best = size;
    while (candidates) {
        if (size + std::popcount(candidates) <= best)
            break;
        const Vertex v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        best = std::max(best, max_clique_from(g, candidates & g.neighbors(v), size + 1));
    }
    return best;
}

}  // namespace

int clique_number(const Graph &g) { return max_clique_from(g, g.all_vertices(), 0); }

bool has_universal_vertex(const Graph &g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1)
            return true;
    return false;
}

bool has_isolated_vertex(const Graph &g) { return isolated_vertex_count(g) > 0; }

int isolated_vertex_count(const Graph &g)
{
    int count = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        count += g.degree(v) == 0;
    return count;
}

}  // namespace advdel
