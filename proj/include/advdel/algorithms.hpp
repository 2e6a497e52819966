#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "advdel/advice.hpp"
#include "advdel/engine.hpp"
#include "advdel/obstruction.hpp"

namespace advdel {

/// Vertices the logarithmic algorithm must keep: pair (round, position) means
/// "in settlement round r, the a-th vertex of W (1-based, by reveal label) survives".
struct FixedPairs {
    std::size_t u = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (r_i, a_i), r_i nondecreasing
};

struct AdvisorOutput {
    AdviceTape tape;
    std::size_t opt = 0;
    std::optional<FixedPairs> fixed;  // log advisor only
};

// Naive strategy: the tape holds opt (self-delimiting) followed by one
// fixed-width index per forced deletion. Node mode indexes W with
// ceil(log2 k) bits, k the largest member order; edge mode indexes the
// detected copy's edge list with ceil(log2 m) bits, m the largest member size.

AdvisorOutput naive_node_advisor(const OnlineInstance &instance, const ObstructionSet &f);
AdvisorOutput naive_edge_advisor(const OnlineInstance &instance, const ObstructionSet &f);

/// Online side of both naive advisors; the index kind follows the run mode.
class NaiveAlgorithm : public OnlineStrategy {
public:
    void start(const ObstructionSet &f, Mode mode, AdviceReader &advice) override;
    Element choose(const EngineState &state, const Violation &violation, AdviceReader &advice) override;

private:
    std::vector<std::size_t> indices_;
    std::size_t next_ = 0;
};

std::size_t naive_index_width(const ObstructionSet &f, Mode mode);
/// Bits written and read by the naive pair: selfdelim(opt) + opt * index width.
std::size_t naive_budget(std::size_t opt, const ObstructionSet &f, Mode mode);

// Logarithmic strategy (node mode, F containing a clique and an independent set).
//
// Tape layout:
//   selfdelim(opt)
//   u in ceil(log2 R) bits
//   R-1 pair slots, each ceil(log2 opt) bits for r-1 then ceil(log2 k) bits for a-1;
//   the first u slots are live, the rest are zero.
//
// The algorithm keeps a fixed set F and a round counter. In each settlement
// round it fixes the vertices named by live pairs for that round, deletes the
// smallest-label vertex of W \ F and advances the round.

AdvisorOutput log_advisor(const OnlineInstance &instance, const ObstructionSet &f, const RamseyCertificate &cert);

class LogAlgorithm : public OnlineStrategy {
public:
    explicit LogAlgorithm(const RamseyCertificate &cert) : bound_(cert.bound) {}

    void start(const ObstructionSet &f, Mode mode, AdviceReader &advice) override;
    Element choose(const EngineState &state, const Violation &violation, AdviceReader &advice) override;

    std::size_t round() const noexcept { return round_; }
    std::size_t deletions() const noexcept { return deletions_; }

private:
    int bound_;
    FixedPairs fixed_;
    VertexMask fixed_mask_ = 0;
    std::size_t round_ = 1;
    std::size_t deletions_ = 0;
};

std::size_t log_budget(std::size_t opt, int ramsey_bound, int max_order);

/// No advice: deletes the smallest label of W (or the smallest copy edge).
class GreedyBaseline : public OnlineStrategy {
public:
    Element choose(const EngineState &state, const Violation &violation, AdviceReader &advice) override;
};

}  // namespace advdel
