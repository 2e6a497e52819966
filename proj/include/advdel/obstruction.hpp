#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "advdel/graph.hpp"
#include "advdel/isomorphism.hpp"

namespace advdel {

/// Irredundant, nonempty family of forbidden induced subgraphs.
///
/// Construction rejects families where one member is an induced subgraph of
/// another; use reduce() to drop redundant members instead.
class ObstructionSet {
public:
    explicit ObstructionSet(std::vector<Graph> members);

    std::span<const Graph> members() const noexcept { return members_; }
    const Graph &operator[](std::size_t i) const { return members_[i]; }
    std::size_t size() const noexcept { return members_.size(); }

    /// Largest member order (k).
    int max_order() const noexcept;
    /// Largest member edge count.
    int max_edges() const noexcept;

    bool contains_clique() const;
    bool contains_independent_set() const;
    /// Edge deletion cannot remove an edgeless member, so those are rejected.
    bool valid_for_edge_mode() const;

    ObstructionSet complemented() const;

private:
    std::vector<Graph> members_;
};

bool is_free(const Graph &g, const ObstructionSet &f, VertexMask active);
bool is_free(const Graph &g, const ObstructionSet &f);

struct ReduceResult {
    ObstructionSet set;
    std::vector<std::string> warnings;  // one per dropped member
};

/// Drops every member that contains another member as an induced subgraph
/// (isomorphic duplicates keep their first occurrence). Throws
/// std::invalid_argument on an empty family.
ReduceResult reduce(std::vector<Graph> family);

struct RamseyCertificate {
    int bound = 0;   // R: minimal order where no graph is F-free
    Graph witness;   // F-free graph of order R-1
};

/// Smallest R <= cap such that every graph of order R contains a member.
/// Absent when no such order exists up to cap; short-circuits to absent when
/// the family lacks a clique or an independent set, since arbitrarily large
/// independent sets (cliques) are then F-free.
std::optional<RamseyCertificate> ramsey_bound(const ObstructionSet &f, int cap = kEnumerationCap);

enum class ExtremalMode { MaxEdges, MinEdges };

struct RemainderGraph {
    Graph graph;                 // D
    ExtremalMode mode = ExtremalMode::MaxEdges;
    int clique_number = 0;       // c
    bool has_universal = false;
    bool has_isolated = false;
};

/// Edge-extremal F-free graph of order R-1, ties broken by smallest canonical key.
RemainderGraph extremal_remainder(const ObstructionSet &f, const RamseyCertificate &cert, ExtremalMode mode,
                                  int cap = kEnumerationCap);

/// Minimal graphs that are not sub-H-unions: connected graphs of order
/// below |h| that are not induced in h, plus every connected graph of order
/// |h|, with redundant supergraphs removed.
std::vector<Graph> not_sub_h_union_family(const Graph &h, int cap = kEnumerationCap);
/// Complements of not_sub_h_union_family(complement(h)).
std::vector<Graph> not_sub_h_join_family(const Graph &h, int cap = kEnumerationCap);

/// Every connected component of g is a proper induced subgraph of h.
bool is_sub_h_union(const Graph &g, const Graph &h);
/// Every join component of g is a proper induced subgraph of h.
bool is_sub_h_join(const Graph &g, const Graph &h);

}  // namespace advdel
