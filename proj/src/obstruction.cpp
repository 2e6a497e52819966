#include "advdel/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

#include "advdel/errors.hpp"
#include "advdel/graph_io.hpp"

namespace advdel {

namespace {

bool is_edgeless(const Graph &g) { return g.edge_count() == 0; }
bool is_complete(const Graph &g) { return 2 * g.edge_count() == g.order() * (g.order() - 1); }

}  // namespace

ObstructionSet::ObstructionSet(std::vector<Graph> members) : members_(std::move(members))
{
    if (members_.empty())
        throw std::invalid_argument("obstruction set must not be empty");
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (i != j && members_[i].order() <= members_[j].order() && contains_induced(members_[i], members_[j]))
                throw std::invalid_argument("obstruction member " + std::to_string(j) + " contains member " +
                                            std::to_string(i) + " and is redundant");
}

int ObstructionSet::max_order() const noexcept
{
    int k = 0;
    for (const Graph &h : members_)
        k = std::max(k, h.order());
    return k;
}

int ObstructionSet::max_edges() const noexcept
{
    int m = 0;
    for (const Graph &h : members_)
        m = std::max(m, h.edge_count());
    return m;
}

bool ObstructionSet::contains_clique() const { return std::any_of(members_.begin(), members_.end(), is_complete); }

bool ObstructionSet::contains_independent_set() const
{
    return std::any_of(members_.begin(), members_.end(), is_edgeless);
}

bool ObstructionSet::valid_for_edge_mode() const { return !contains_independent_set(); }

ObstructionSet ObstructionSet::complemented() const
{
    std::vector<Graph> out;
    out.reserve(members_.size());
    for (const Graph &h : members_)
        out.push_back(complement(h));
    return ObstructionSet(std::move(out));
}

bool is_free(const Graph &g, const ObstructionSet &f, VertexMask active)
{
    return is_free(g, f.members(), active);
}

bool is_free(const Graph &g, const ObstructionSet &f) { return is_free(g, f.members()); }

ReduceResult reduce(std::vector<Graph> family)
{
    if (family.empty())
        throw std::invalid_argument("cannot reduce an empty family");
    std::vector<std::string> warnings;
    std::vector<bool> dropped(family.size(), false);
    for (std::size_t j = 0; j < family.size(); ++j) {
        for (std::size_t i = 0; i < family.size() && !dropped[j]; ++i) {
            if (i == j || dropped[i] || family[i].order() > family[j].order())
                continue;
            if (!contains_induced(family[i], family[j]))
                continue;
            // Isomorphic pair: keep the earlier one.
            if (family[i].order() == family[j].order() && i > j)
                continue;
            dropped[j] = true;
            warnings.push_back("dropping member " + std::to_string(j) + " (" + to_graph6(family[j]) +
                               "): contains member " + std::to_string(i) + " (" + to_graph6(family[i]) + ")");
        }
    }
    std::vector<Graph> kept;
    for (std::size_t j = 0; j < family.size(); ++j)
        if (!dropped[j])
            kept.push_back(std::move(family[j]));
    return ReduceResult{ObstructionSet(std::move(kept)), std::move(warnings)};
}

std::optional<RamseyCertificate> ramsey_bound(const ObstructionSet &f, int cap)
{
    if (!f.contains_clique() || !f.contains_independent_set())
        return std::nullopt;
    std::optional<Graph> last_free = Graph(0);
    for (int n = 1; n <= cap; ++n) {
        std::optional<Graph> free_here;
        for (const Graph &g : enumerate_graphs(n, false, cap)) {
            if (is_free(g, f)) {
                free_here = g;
                break;
            }
        }
        if (!free_here)
            return RamseyCertificate{n, *last_free};
        last_free = std::move(free_here);
    }
    return std::nullopt;
}

RemainderGraph extremal_remainder(const ObstructionSet &f, const RamseyCertificate &cert, ExtremalMode mode, int cap)
{
    if (cert.bound < 1 || cert.bound > cap + 1)
        throw CapExceeded("remainder graph needs R <= cap + 1");
    const std::vector<Graph> candidates = enumerate_graphs(cert.bound - 1, false, cap);
    std::optional<Graph> best;
    // Enumeration is sorted by canonical key, so the first extremal hit wins ties.
    for (const Graph &g : candidates) {
        if (!is_free(g, f))
            continue;
        if (!best)
            best = g;
        else if (mode == ExtremalMode::MaxEdges ? g.edge_count() > best->edge_count()
                                                : g.edge_count() < best->edge_count())
            best = g;
    }
    if (!best)
        throw std::invalid_argument("certificate inconsistent: no F-free graph of order R-1");
    RemainderGraph out;
    out.graph = *best;
    out.mode = mode;
    out.clique_number = clique_number(*best);
    out.has_universal = has_universal_vertex(*best);
    out.has_isolated = has_isolated_vertex(*best);
    return out;
}

std::vector<Graph> not_sub_h_union_family(const Graph &h, int cap)
{
    if (h.order() > cap)
        throw CapExceeded("not-sub-H-union family limited to |H| <= " + std::to_string(cap));
    std::vector<Graph> members;
    for (int n = 1; n < h.order(); ++n)
        for (const Graph &g : enumerate_graphs(n, true, cap))
            if (!contains_induced(g, h))
                members.push_back(g);
    for (const Graph &g : enumerate_graphs(h.order(), true, cap))
        members.push_back(g);
    if (members.empty())
        return members;
    const ObstructionSet reduced = reduce(std::move(members)).set;
    return {reduced.members().begin(), reduced.members().end()};
}

std::vector<Graph> not_sub_h_join_family(const Graph &h, int cap)
{
    std::vector<Graph> out;
    for (const Graph &g : not_sub_h_union_family(complement(h), cap))
        out.push_back(complement(g));
    return out;
}

namespace {

bool proper_induced(const Graph &part, const Graph &h)
{
    return part.order() < h.order() && contains_induced(part, h);
}

}  // namespace

bool is_sub_h_union(const Graph &g, const Graph &h)
{
    for (const VertexSet &c : connected_components(g))
        if (!proper_induced(induced_subgraph(g, c), h))
            return false;
    return true;
}

bool is_sub_h_join(const Graph &g, const Graph &h)
{
    for (const VertexSet &c : join_decomposition(g))
        if (!proper_induced(induced_subgraph(g, c), h))
            return false;
    return true;
}

}  // namespace advdel
