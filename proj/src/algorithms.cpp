#include "advdel/algorithms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "advdel/errors.hpp"
#include "advdel/offline.hpp"

namespace advdel {

namespace {

// Follows the lexicographically smallest optimum and records, per forced
// deletion, the position of the deleted element inside the violation.
class RecordingFollower : public OnlineStrategy {
public:
    explicit RecordingFollower(DeletionSet target) : target_(std::move(target)) {}

    Element choose(const EngineState &state, const Violation &violation, AdviceReader &) override
    {
        const std::size_t pos = follow_position(target_, violation, state.mode());
        positions.push_back(pos);
        if (state.mode() == Mode::Node)
            return violation.vertices[pos];
        return violation.edges[pos];
    }

    std::vector<std::size_t> positions;

private:
    DeletionSet target_;
};

AdvisorOutput naive_advisor(const OnlineInstance &instance, const ObstructionSet &f)
{
    const OfflineOptimum optimum = offline_optimum(instance.graph, f, instance.mode);
    RecordingFollower follower(optimum.smallest());
    const Trace trace = run(instance, f, follower);
    if (trace.deletions() != optimum.size || follower.positions.size() != optimum.size)
        throw AdviceError("lazy execution of the optimum deleted " + std::to_string(trace.deletions()) +
                          " elements, expected " + std::to_string(optimum.size));

    AdvisorOutput out;
    out.opt = optimum.size;
    out.tape.write_self_delimiting(out.opt);
    const int width = static_cast<int>(naive_index_width(f, instance.mode));
    for (std::size_t pos : follower.positions)
        out.tape.write_fixed(pos, width);
    return out;
}

}  // namespace

std::size_t naive_index_width(const ObstructionSet &f, Mode mode)
{
    const int range = mode == Mode::Node ? f.max_order() : f.max_edges();
    return static_cast<std::size_t>(ceil_log2(static_cast<std::uint64_t>(range)));
}

std::size_t naive_budget(std::size_t opt, const ObstructionSet &f, Mode mode)
{
    return self_delimiting_length(opt) + opt * naive_index_width(f, mode);
}

AdvisorOutput naive_node_advisor(const OnlineInstance &instance, const ObstructionSet &f)
{
    if (instance.mode != Mode::Node)
        throw std::invalid_argument("naive node advisor needs a node-deletion instance");
    return naive_advisor(instance, f);
}

AdvisorOutput naive_edge_advisor(const OnlineInstance &instance, const ObstructionSet &f)
{
    if (instance.mode != Mode::Edge)
        throw std::invalid_argument("naive edge advisor needs an edge-deletion instance");
    return naive_advisor(instance, f);
}

void NaiveAlgorithm::start(const ObstructionSet &f, Mode mode, AdviceReader &advice)
{
    const std::uint64_t opt = advice.read_self_delimiting();
    const int width = static_cast<int>(naive_index_width(f, mode));
    indices_.clear();
    next_ = 0;
    for (std::uint64_t i = 0; i < opt; ++i)
        indices_.push_back(advice.read_fixed(width));
}

Element NaiveAlgorithm::choose(const EngineState &state, const Violation &violation, AdviceReader &)
{
    if (next_ >= indices_.size())
        throw AdviceError("advice announced " + std::to_string(indices_.size()) + " deletions, more are needed");
    const std::size_t pos = indices_[next_++];
    if (state.mode() == Mode::Node) {
        if (pos >= violation.vertices.size())
            throw AdviceError("advice index outside the detected vertex set");
        return violation.vertices[pos];
    }
    if (pos >= violation.edges.size())
        throw AdviceError("advice index outside the detected edge list");
    return violation.edges[pos];
}

std::size_t log_budget(std::size_t opt, int ramsey_bound, int max_order)
{
    const std::size_t slot = static_cast<std::size_t>(ceil_log2(opt) + ceil_log2(static_cast<std::uint64_t>(max_order)));
    return self_delimiting_length(opt) + static_cast<std::size_t>(ceil_log2(static_cast<std::uint64_t>(ramsey_bound))) +
           static_cast<std::size_t>(ramsey_bound - 1) * slot;
}

namespace {

void check_log_preconditions(const ObstructionSet &f, Mode mode, int bound)
{
    if (mode != Mode::Node)
        throw std::invalid_argument("logarithmic strategy is defined for node deletion only");
    if (!f.contains_clique() || !f.contains_independent_set())
        throw std::invalid_argument("logarithmic strategy needs a clique and an independent set in F");
    if (bound < 1)
        throw std::invalid_argument("Ramsey bound must be positive");
}

// Simulates the logarithmic algorithm against the fixed optimum and records
// which surviving vertices must be fixed, and when.
class FixingAdvisor : public OnlineStrategy {
public:
    explicit FixingAdvisor(const DeletionSet &target) : target_(mask_of(target.vertices)) {}

    Element choose(const EngineState &, const Violation &violation, AdviceReader &) override
    {
        for (std::size_t i = 0; i < violation.vertices.size(); ++i) {
            const Vertex v = violation.vertices[i];
            if (!(target_ & bit(v)) && !(fixed_mask_ & bit(v))) {
                fixed_mask_ |= bit(v);
                fixed.pairs.emplace_back(round_, i + 1);
            }
        }
        for (Vertex v : violation.vertices) {
            if (!(fixed_mask_ & bit(v))) {
                if (!(target_ & bit(v)))
                    throw AdviceError("log advisor: unfixed survivor in W");
                ++round_;
                return v;
            }
        }
        throw AdviceError("log advisor: W contains no vertex of the optimum");
    }

    FixedPairs fixed;

private:
    VertexMask target_;
    VertexMask fixed_mask_ = 0;
    std::size_t round_ = 1;
};

}  // namespace

AdvisorOutput log_advisor(const OnlineInstance &instance, const ObstructionSet &f, const RamseyCertificate &cert)
{
    check_log_preconditions(f, instance.mode, cert.bound);
    const OfflineOptimum optimum = offline_optimum(instance.graph, f, Mode::Node);
    FixingAdvisor advisor(optimum.smallest());
    const Trace trace = run(instance, f, advisor);
    if (trace.deletions() != optimum.size)
        throw AdviceError("log advisor simulation deleted " + std::to_string(trace.deletions()) +
                          " vertices, expected " + std::to_string(optimum.size));

    FixedPairs fixed = std::move(advisor.fixed);
    fixed.u = fixed.pairs.size();
    const std::size_t slots = static_cast<std::size_t>(cert.bound - 1);
    if (fixed.u > slots)
        throw AdviceError("more fixed vertices (" + std::to_string(fixed.u) + ") than R-1 = " + std::to_string(slots));

    const std::size_t opt = optimum.size;
    const int round_width = ceil_log2(opt);
    const int pos_width = ceil_log2(static_cast<std::uint64_t>(f.max_order()));

    AdvisorOutput out;
    out.opt = opt;
    out.tape.write_self_delimiting(opt);
    out.tape.write_fixed(fixed.u, ceil_log2(static_cast<std::uint64_t>(cert.bound)));
    for (std::size_t i = 0; i < slots; ++i) {
        const auto [r, a] = i < fixed.u ? fixed.pairs[i] : std::pair<std::size_t, std::size_t>{1, 1};
        out.tape.write_fixed(r - 1, round_width);
        out.tape.write_fixed(a - 1, pos_width);
    }
    out.fixed = std::move(fixed);
    return out;
}

void LogAlgorithm::start(const ObstructionSet &f, Mode mode, AdviceReader &advice)
{
    check_log_preconditions(f, mode, bound_);
    const std::size_t opt = advice.read_self_delimiting();
    const std::size_t u = advice.read_fixed(ceil_log2(static_cast<std::uint64_t>(bound_)));
    const std::size_t slots = static_cast<std::size_t>(bound_ - 1);
    if (u > slots)
        throw AdviceError("advice announces more fixed vertices than R-1");
    const int round_width = ceil_log2(opt);
    const int pos_width = ceil_log2(static_cast<std::uint64_t>(f.max_order()));
    fixed_ = FixedPairs{u, {}};
    for (std::size_t i = 0; i < slots; ++i) {
        const std::size_t r = advice.read_fixed(round_width) + 1;
        const std::size_t a = advice.read_fixed(pos_width) + 1;
        if (i < u)
            fixed_.pairs.emplace_back(r, a);
    }
    fixed_mask_ = 0;
    round_ = 1;
    deletions_ = 0;
}

Element LogAlgorithm::choose(const EngineState &, const Violation &violation, AdviceReader &)
{
    if (round_ != deletions_ + 1)
        throw AdviceError("round counter out of step with deletions");
    for (const auto &[r, a] : fixed_.pairs) {
        if (r != round_)
            continue;
        if (a > violation.vertices.size())
            throw AdviceError("fixed position beyond the detected vertex set");
        fixed_mask_ |= bit(violation.vertices[a - 1]);
    }
    for (Vertex v : violation.vertices) {
        if (!(fixed_mask_ & bit(v))) {
            ++round_;
            ++deletions_;
            return v;
        }
    }
    throw AdviceError("every vertex of the detected copy is fixed");
}

Element GreedyBaseline::choose(const EngineState &state, const Violation &violation, AdviceReader &)
{
    if (state.mode() == Mode::Node)
        return violation.vertices.front();
    return violation.edges.front();
}

}  // namespace advdel
