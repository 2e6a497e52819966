#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "advdel/graph.hpp"

namespace advdel {

inline constexpr int kEnumerationCap = 8;
inline constexpr int kCanonicalCap = 20;

/// Induced embedding: pattern vertex i is sent to host vertex image[i].
struct IsoMapping {
    std::vector<Vertex> image;

    VertexSet image_set() const;
    bool operator==(const IsoMapping &) const = default;
};

/// Canonical induced detection restricted to the host vertices in `active`.
///
/// Among all induced embeddings of `pattern`, returns the one whose image
/// vertex set is lexicographically smallest (as a sorted label list), and
/// among those the lexicographically smallest mapping. Advisors and online
/// algorithms rely on this order to agree on the detected violation.
std::optional<IsoMapping> find_induced(const Graph &pattern, const Graph &host, VertexMask active);
std::optional<IsoMapping> find_induced(const Graph &pattern, const Graph &host);

bool contains_induced(const Graph &pattern, const Graph &host, VertexMask active);
bool contains_induced(const Graph &pattern, const Graph &host);

/// Checks injectivity and that every pattern pair keeps (non-)adjacency.
bool is_induced_embedding(const Graph &pattern, const Graph &host, const IsoMapping &mapping);

/// True iff no member embeds as an induced subgraph of host[active].
bool is_free(const Graph &host, std::span<const Graph> family, VertexMask active);
bool is_free(const Graph &host, std::span<const Graph> family);

/// Upper-triangle adjacency bits of the canonically relabeled graph.
/// Bits are packed most-significant first, so comparing keys compares the
/// bitstrings lexicographically.
struct CanonicalKey {
    int order = 0;
    std::vector<std::uint64_t> bits;

    friend auto operator<=>(const CanonicalKey &, const CanonicalKey &) = default;
};

/// order[i] is the vertex of g placed at canonical position i.
/// Throws CapExceeded above kCanonicalCap vertices.
std::vector<Vertex> canonical_order(const Graph &g);
CanonicalKey canonical_form(const Graph &g);
Graph canonical_graph(const Graph &g);
bool is_isomorphic(const Graph &a, const Graph &b);

/// One canonical representative per isomorphism class of order n, sorted by
/// canonical key. Throws CapExceeded when n > cap.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int cap = kEnumerationCap);

}  // namespace advdel
