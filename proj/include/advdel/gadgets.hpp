#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "advdel/engine.hpp"
#include "advdel/graph.hpp"
#include "advdel/obstruction.hpp"

namespace advdel {

enum class FamilyKind { Connected, Disconnected, Edge, IsolatedPrefix, CliqueJoin, IndependentJoin };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view text);

struct FamilyMember {
    OnlineInstance instance;
    std::vector<int> choice;        // glue vertices, edge indices into h.edges(), or u-set labels
    DeletionSet expected_optimum;
};

/// A lower-bound instance family with the optimum the construction predicts
/// for each member. Members are in lexicographic order of their choice vectors.
struct Family {
    FamilyKind kind;
    ObstructionSet obstruction;
    Graph base;                      // H, or D for the clique/independent join families
    int parameter = 0;               // m, or opt for the join families
    std::size_t optimum_size = 0;
    bool unique_optimum = true;      // whether the construction claims uniqueness
    std::size_t expected_leaves = 0; // |H|^m, ||H||^m or C(opt + c, c)
    std::vector<FamilyMember> members;

    Mode mode() const noexcept
    {
        return kind == FamilyKind::Edge || kind == FamilyKind::IsolatedPrefix ? Mode::Edge : Mode::Node;
    }
};

/// Two copies of h glued at v; the first copy keeps labels 0..|h|-1.
Graph glue_gadget(const Graph &h, Vertex v);
/// glue_gadget plus every edge between the two copies away from v.
/// Label-exact complement of glue_gadget(complement(h), v).
Graph join_gadget(const Graph &h, Vertex v);

/// Disjoint unions of m glue gadgets over every choice of glue vertices.
/// Requires h connected with at least two vertices.
Family connected_lb_family(const Graph &h, int m);
/// Joins of m join gadgets over every choice of glue vertices. Requires h disconnected.
Family disconnected_lb_family(const Graph &h, int m);

/// U_H(e): a second copy of h sharing only the edge e, joined to the first
/// copy everywhere else. The first copy keeps labels 0..|h|-1.
struct EExtension {
    Graph graph;
    Edge edge;
    std::vector<Vertex> second_copy;  // U label of vertex i of the second copy
};

/// Requires h disconnected without isolated vertices and e an edge of h.
/// The axioms are machine-checked before returning; a failure throws std::logic_error.
EExtension e_extension(const Graph &h, Edge e);

/// Joins U_H(e_1) ... U_H(e_m) over every edge choice. Each U block reveals
/// its copy of h before the extension vertices.
Family edge_lb_family(const Graph &h, int m);

/// Prepends the isolated vertices of h as the first reveals of `inner`.
OnlineInstance isolated_prefix(const Graph &h, const OnlineInstance &inner);
/// edge_lb_family of h without its isolated vertices, each member prefixed.
Family isolated_prefix_family(const Graph &h, int m);

/// K_{opt+c} revealed first, then the remaining vertices of D, each joined to
/// all clique vertices except u_set; u_set plays a maximum clique of D.
/// u_set holds c distinct 0-based labels below opt + c.
FamilyMember clique_join_instance(const ObstructionSet &f, const Graph &remainder, int opt,
                                  std::span<const Vertex> u_set);
/// Complement dual of clique_join_instance; `remainder` is a min-edge remainder
/// and u_set indexes its largest independent set.
FamilyMember independent_join_instance(const ObstructionSet &f, const Graph &remainder, int opt,
                                       std::span<const Vertex> u_set);

Family clique_join_family(const ObstructionSet &f, int opt, int cap = kEnumerationCap);
Family independent_join_family(const ObstructionSet &f, int opt, int cap = kEnumerationCap);

/// Complements the graph and every member, keeping labels and reveal order.
/// Node mode only.
std::pair<OnlineInstance, ObstructionSet> duality_transform(const OnlineInstance &instance, const ObstructionSet &f);

}  // namespace advdel
