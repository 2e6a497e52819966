#include "advdel/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "advdel/verifier.hpp"

namespace advdel {

std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::Connected: return "connected";
    case FamilyKind::Disconnected: return "disconnected";
    case FamilyKind::Edge: return "edge";
    case FamilyKind::IsolatedPrefix: return "isolated-prefix";
    case FamilyKind::CliqueJoin: return "clique-join";
    case FamilyKind::IndependentJoin: return "independent-join";
    }
    return "unknown";
}

FamilyKind parse_family_kind(std::string_view text)
{
    for (FamilyKind k : {FamilyKind::Connected, FamilyKind::Disconnected, FamilyKind::Edge,
                         FamilyKind::IsolatedPrefix, FamilyKind::CliqueJoin, FamilyKind::IndependentJoin})
        if (to_string(k) == text)
            return k;
    throw std::invalid_argument("unknown family kind '" + std::string(text) + "'");
}

namespace {

// Every vector in [0, base)^m, lexicographic.
std::vector<std::vector<int>> all_choices(int base, int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current(m, 0);
    if (base <= 0)
        return out;
    while (true) {
        out.push_back(current);
        int i = m - 1;
        while (i >= 0 && current[i] == base - 1)
            current[i--] = 0;
        if (i < 0)
            return out;
        ++current[i];
    }
}

std::vector<std::vector<int>> all_subsets(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    if (k > n)
        return out;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return out;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

std::size_t power(std::size_t base, int exp)
{
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

void require_m(int m)
{
    if (m < 1)
        throw std::invalid_argument("family needs m >= 1");
}

ObstructionSet single(const Graph &h) { return ObstructionSet({h}); }

}  // namespace

Graph glue_gadget(const Graph &h, Vertex v) { return glue(h, v, h, v); }

Graph join_gadget(const Graph &h, Vertex v)
{
    GraphBuilder b(glue_gadget(h, v));
    const int n = h.order();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex x = n; x < 2 * n - 1; ++x)
            if (a != v)
                b.add_edge(a, x);
    return b.build();
}

namespace {

Family glue_family(const Graph &h, int m, FamilyKind kind)
{
    const bool joined = kind == FamilyKind::Disconnected;
    const int block = 2 * h.order() - 1;
    std::vector<FamilyMember> members;
    for (const std::vector<int> &choice : all_choices(h.order(), m)) {
        Graph g(0);
        DeletionSet expected;
        for (int j = 0; j < m; ++j) {
            const Graph gadget = joined ? join_gadget(h, choice[j]) : glue_gadget(h, choice[j]);
            g = joined ? join(g, gadget) : disjoint_union(g, gadget);
            expected.vertices.push_back(j * block + choice[j]);
        }
        members.push_back(FamilyMember{OnlineInstance{g, Mode::Node}, choice, std::move(expected)});
    }
    return Family{.kind = kind,
                  .obstruction = single(h),
                  .base = h,
                  .parameter = m,
                  .optimum_size = static_cast<std::size_t>(m),
                  .unique_optimum = true,
                  .expected_leaves = power(static_cast<std::size_t>(h.order()), m),
                  .members = std::move(members)};
}

}  // namespace

Family connected_lb_family(const Graph &h, int m)
{
    require_m(m);
    if (h.order() < 2 || !is_connected(h))
        throw std::invalid_argument("connected family needs a connected H with at least two vertices");
    return glue_family(h, m, FamilyKind::Connected);
}

Family disconnected_lb_family(const Graph &h, int m)
{
    require_m(m);
    if (h.order() < 2 || is_connected(h))
        throw std::invalid_argument("disconnected family needs a disconnected H");
    return glue_family(h, m, FamilyKind::Disconnected);
}

EExtension e_extension(const Graph &h, Edge e)
{
    if (h.order() < 2 || is_connected(h))
        throw std::invalid_argument("e-extension needs a disconnected H");
    if (has_isolated_vertex(h))
        throw std::invalid_argument("e-extension needs H without isolated vertices");
    if (e.u < 0 || e.v >= h.order() || e.u == e.v || !h.adjacent(e.u, e.v))
        throw std::invalid_argument("e-extension edge is not an edge of H");

    const int n = h.order();
    EExtension ext;
    ext.edge = e;
    ext.second_copy.resize(n);
    for (Vertex v = 0, next = n; v < n; ++v)
        ext.second_copy[v] = (v == e.u || v == e.v) ? v : next++;

    GraphBuilder b(2 * n - 2);
    for (const Edge &f : h.edges()) {
        b.add_edge(f.u, f.v);
        b.add_edge(ext.second_copy[f.u], ext.second_copy[f.v]);
    }
    for (Vertex a = 0; a < n; ++a) {
        if (a == e.u || a == e.v)
            continue;
        for (Vertex x = n; x < 2 * n - 2; ++x)
            b.add_edge(a, x);
    }
    ext.graph = b.build();

    if (!verify_e_extension(ext, h))
        throw std::logic_error("constructed graph violates the e-extension axioms");
    return ext;
}

Family edge_lb_family(const Graph &h, int m)
{
    require_m(m);
    const EdgeSet edges = h.edges();
    std::vector<EExtension> extensions;
    for (const Edge &e : edges)
        extensions.push_back(e_extension(h, e));

    const int block = 2 * h.order() - 2;
    std::vector<FamilyMember> members;
    for (const std::vector<int> &choice : all_choices(static_cast<int>(edges.size()), m)) {
        Graph g(0);
        DeletionSet expected;
        for (int i = 0; i < m; ++i) {
            g = join(g, extensions[choice[i]].graph);
            const Edge e = edges[choice[i]];
            expected.edges.emplace_back(i * block + e.u, i * block + e.v);
        }
        members.push_back(FamilyMember{OnlineInstance{g, Mode::Edge}, choice, std::move(expected)});
    }
    return Family{.kind = FamilyKind::Edge,
                  .obstruction = single(h),
                  .base = h,
                  .parameter = m,
                  .optimum_size = static_cast<std::size_t>(m),
                  .unique_optimum = true,
                  .expected_leaves = power(edges.size(), m),
                  .members = std::move(members)};
}

OnlineInstance isolated_prefix(const Graph &h, const OnlineInstance &inner)
{
    const int k = isolated_vertex_count(h);
    if (k == 0)
        throw std::invalid_argument("isolated prefix needs H with isolated vertices");
    return OnlineInstance{disjoint_union(edgeless_graph(k), inner.graph), inner.mode};
}

Family isolated_prefix_family(const Graph &h, int m)
{
    const int k = isolated_vertex_count(h);
    if (k == 0)
        throw std::invalid_argument("isolated prefix family needs H with isolated vertices");
    VertexSet kept;
    for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) > 0)
            kept.push_back(v);
    const Graph stripped = induced_subgraph(h, kept);

    Family inner = edge_lb_family(stripped, m);
    for (FamilyMember &member : inner.members) {
        member.instance = isolated_prefix(h, member.instance);
        for (Edge &e : member.expected_optimum.edges)
            e = Edge(e.u + k, e.v + k);
    }
    inner.kind = FamilyKind::IsolatedPrefix;
    inner.obstruction = single(h);
    inner.base = h;
    return inner;
}

namespace {

// Lexicographically smallest clique of the given size.
VertexSet smallest_clique(const Graph &g, int size)
{
    for (const std::vector<int> &candidate : all_subsets(g.order(), size)) {
        bool clique = true;
        for (std::size_t i = 0; i < candidate.size() && clique; ++i)
            for (std::size_t j = i + 1; j < candidate.size() && clique; ++j)
                clique = g.adjacent(candidate[i], candidate[j]);
        if (clique)
            return VertexSet(candidate.begin(), candidate.end());
    }
    throw std::logic_error("no clique of the requested size");
}

int forbidden_clique_order(const ObstructionSet &f)
{
    for (const Graph &h : f.members())
        if (2 * h.edge_count() == h.order() * (h.order() - 1))
            return h.order();
    throw std::invalid_argument("obstruction set contains no clique");
}

}  // namespace

FamilyMember clique_join_instance(const ObstructionSet &f, const Graph &remainder, int opt,
                                  std::span<const Vertex> u_set)
{
    if (!f.contains_independent_set())
        throw std::invalid_argument("clique join needs an independent set in F");
    const int n = forbidden_clique_order(f);
    if (opt <= n)
        throw std::invalid_argument("clique join needs opt > " + std::to_string(n));
    const int c = clique_number(remainder);
    if (static_cast<int>(u_set.size()) != c)
        throw std::invalid_argument("u-set must have exactly c = " + std::to_string(c) + " labels");
    VertexSet u(u_set.begin(), u_set.end());
    std::sort(u.begin(), u.end());
    if (std::adjacent_find(u.begin(), u.end()) != u.end() || (!u.empty() && (u.front() < 0 || u.back() >= opt + c)))
        throw std::invalid_argument("u-set labels must be distinct and below opt + c");

    const int clique_size = opt + c;
    const int total = opt + remainder.order();
    const VertexSet core = smallest_clique(remainder, c);

    // where[d]: instance label of remainder vertex d.
    std::vector<Vertex> where(remainder.order(), -1);
    for (int i = 0; i < c; ++i)
        where[core[i]] = u[i];
    for (Vertex d = 0, next = clique_size; d < remainder.order(); ++d)
        if (where[d] < 0)
            where[d] = next++;

    GraphBuilder b(total);
    for (Vertex a = 0; a < clique_size; ++a)
        for (Vertex x = a + 1; x < clique_size; ++x)
            b.add_edge(a, x);
    const VertexMask u_mask = mask_of(u);
    for (Vertex x = clique_size; x < total; ++x)
        for (Vertex a = 0; a < clique_size; ++a)
            if (!(u_mask & bit(a)))
                b.add_edge(a, x);
    for (const Edge &e : remainder.edges())
        if (!b.has_edge(where[e.u], where[e.v]))
            b.add_edge(where[e.u], where[e.v]);

    DeletionSet expected;
    for (Vertex a = 0; a < clique_size; ++a)
        if (!(u_mask & bit(a)))
            expected.vertices.push_back(a);
    return FamilyMember{OnlineInstance{b.build(), Mode::Node}, std::vector<int>(u.begin(), u.end()),
                        std::move(expected)};
}

FamilyMember independent_join_instance(const ObstructionSet &f, const Graph &remainder, int opt,
                                       std::span<const Vertex> u_set)
{
    const ObstructionSet dual_f = f.complemented();
    FamilyMember member = clique_join_instance(dual_f, complement(remainder), opt, u_set);
    member.instance = duality_transform(member.instance, dual_f).first;
    return member;
}

namespace {

Family join_family(const ObstructionSet &f, int opt, int cap, bool independent)
{
    const auto cert = ramsey_bound(f, cap);
    if (!cert)
        throw std::invalid_argument("no Ramsey bound for F within the enumeration cap");
    const RemainderGraph d =
        extremal_remainder(f, *cert, independent ? ExtremalMode::MinEdges : ExtremalMode::MaxEdges, cap);
    const Graph &remainder = d.graph;
    const int c = independent ? clique_number(complement(remainder)) : d.clique_number;

    std::vector<FamilyMember> members;
    for (const std::vector<int> &u : all_subsets(opt + c, c))
        members.push_back(independent ? independent_join_instance(f, remainder, opt, u)
                                      : clique_join_instance(f, remainder, opt, u));
    return Family{.kind = independent ? FamilyKind::IndependentJoin : FamilyKind::CliqueJoin,
                  .obstruction = f,
                  .base = remainder,
                  .parameter = opt,
                  .optimum_size = static_cast<std::size_t>(opt),
                  .unique_optimum = independent ? !d.has_isolated : !d.has_universal,
                  .expected_leaves = binomial(static_cast<std::size_t>(opt + c), static_cast<std::size_t>(c)),
                  .members = std::move(members)};
}

}  // namespace

Family clique_join_family(const ObstructionSet &f, int opt, int cap) { return join_family(f, opt, cap, false); }

Family independent_join_family(const ObstructionSet &f, int opt, int cap) { return join_family(f, opt, cap, true); }

std::pair<OnlineInstance, ObstructionSet> duality_transform(const OnlineInstance &instance, const ObstructionSet &f)
{
    if (instance.mode != Mode::Node)
        throw std::invalid_argument("complement duality holds for node deletion only");
    return {OnlineInstance{complement(instance.graph), Mode::Node}, f.complemented()};
}

}  // namespace advdel
