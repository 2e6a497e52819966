#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "advdel/engine.hpp"
#include "advdel/gadgets.hpp"
#include "advdel/offline.hpp"

namespace advdel {

struct EExtensionCheck {
    bool contains_h = false;           // H embeds in U
    bool e_destroys_all = false;       // H does not embed in U - e
    bool other_edges_keep_h = false;   // H embeds in U - f for every f != e
    std::optional<Edge> failing_edge;  // first f breaking the last property

    bool ok() const noexcept { return contains_h && e_destroys_all && other_edges_keep_h; }
};

EExtensionCheck check_e_extension(const Graph &u, Edge e, const Graph &h);
bool verify_e_extension(const EExtension &ext, const Graph &h);

/// The offline optimum of the instance is exactly {expected}.
bool verify_unique_optimum(const OnlineInstance &instance, const ObstructionSet &f, const DeletionSet &expected);

/// Deletions of the lazy-optimal strategy at each step, keyed by the revealed prefix.
struct ActionToken {
    int step = 0;
    std::vector<std::uint64_t> prefix;  // adjacency rows of the revealed graph, masked to the prefix
    std::vector<Element> deleted;
};

std::vector<ActionToken> forced_action_sequence(const OnlineInstance &instance, const ObstructionSet &f,
                                                const DeletionSet &optimum);

struct MemberCheck {
    std::size_t index = 0;
    std::size_t optimum_size = 0;
    std::size_t optimum_count = 0;
    bool matches_expected = false;  // the unique optimum equals the construction's prediction
};

struct DistinguishabilityReport {
    std::size_t family_size = 0;
    /// Advice strings any optimal algorithm needs on this family: at each
    /// revealed prefix the adversary's branches take the maximum and the
    /// forced action branches add up. Equals the number of distinct action
    /// sequences when every split happens on an identical prefix.
    std::size_t leaves = 0;
    std::size_t distinct_sequences = 0;
    std::size_t lower_bound_bits = 0;  // ceil(log2 leaves)
    int min_divergence_step = 0;       // steps where action branches split
    int max_divergence_step = 0;
    double mean_divergence_step = 0.0;
    /// Every pair of members conflicts: on their longest common prefix, no
    /// deletion set inside both optima makes the prefix F-free.
    bool all_pairs_conflict = false;
    bool optima_ok = false;            // every member's optimum is unique (if claimed) and as predicted
    std::vector<MemberCheck> members;
    std::vector<std::string> failures;

    bool certified(std::size_t expected_leaves) const
    {
        return optima_ok && all_pairs_conflict && leaves == expected_leaves && failures.empty();
    }
};

/// Verifies every member's optimum and builds the distinguishability trie.
/// `jobs` > 1 checks members concurrently; the report is identical either way.
DistinguishabilityReport verify_family(const Family &family, int jobs = 1);

/// Bits read by the run equal the closed-form budget of its strategy.
bool audit_bits(const Trace &trace, std::size_t expected_budget);

}  // namespace advdel
