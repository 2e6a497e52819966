#pragma once

#include <cstddef>
#include <vector>

#include "advdel/engine.hpp"

namespace advdel {

/// Upper bound on candidate deletion sets examined by offline_optimum.
inline constexpr std::size_t kOfflineSearchBudget = 4'000'000;

struct OfflineOptimum {
    std::size_t size = 0;
    std::vector<DeletionSet> solutions;  // every optimum, lexicographic

    bool unique() const noexcept { return solutions.size() == 1; }
    /// Lexicographically smallest optimum.
    const DeletionSet &smallest() const { return solutions.front(); }
};

/// Minimum-cardinality deletion sets making g F-free, by exhaustive search in
/// ascending cardinality. Throws CapExceeded once more than `budget` candidate
/// sets would be examined.
OfflineOptimum offline_optimum(const Graph &g, const ObstructionSet &f, Mode mode,
                               std::size_t budget = kOfflineSearchBudget);

/// Lazy execution of a fixed deletion set: deletes the smallest element of the
/// target that lies in the detected copy. Because F-freeness is hereditary,
/// every detected copy meets an optimum, so this realises any offline optimum online.
class FollowSolution : public OnlineStrategy {
public:
    explicit FollowSolution(DeletionSet target) : target_(std::move(target)) {}

    Element choose(const EngineState &state, const Violation &violation, AdviceReader &advice) override;

private:
    DeletionSet target_;
};

/// Position (0-based) within the violation of the element FollowSolution would delete.
std::size_t follow_position(const DeletionSet &target, const Violation &violation, Mode mode);

}  // namespace advdel
