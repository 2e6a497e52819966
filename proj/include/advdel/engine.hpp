#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "advdel/advice.hpp"
#include "advdel/graph.hpp"
#include "advdel/obstruction.hpp"

namespace advdel {

enum class Mode { Node, Edge };

std::string_view to_string(Mode mode);
/// Accepts "node" or "edge"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view text);

/// Label i is revealed at step i + 1.
struct OnlineInstance {
    Graph graph;
    Mode mode = Mode::Node;

    bool operator==(const OnlineInstance &) const = default;
};

/// A deletion set S; only the field matching the mode is populated.
struct DeletionSet {
    VertexSet vertices;
    EdgeSet edges;

    std::size_t size() const noexcept { return vertices.size() + edges.size(); }
    friend auto operator<=>(const DeletionSet &, const DeletionSet &) = default;
};

using Element = std::variant<Vertex, Edge>;

struct Violation {
    std::size_t member = 0;  // index into the obstruction set
    VertexSet vertices;      // W, ascending reveal label
    EdgeSet edges;           // edges of the detected copy, lexicographic
};

/// Revealed prefix plus accumulated deletions.
class EngineState {
public:
    EngineState(const Graph &graph, Mode mode);

    void reveal_next();
    void apply(const Element &element);

    int step() const noexcept { return step_; }
    Mode mode() const noexcept { return mode_; }
    const Graph &instance() const noexcept { return *graph_; }
    /// Instance graph with deleted edges removed. Deleted vertices are excluded via active().
    const Graph &current() const noexcept { return current_; }
    VertexMask revealed() const noexcept { return prefix_mask(step_); }
    VertexMask active() const noexcept { return revealed() & ~deleted_mask_; }
    const DeletionSet &deleted() const noexcept { return deleted_; }

    /// True when `element` names a revealed, not yet deleted vertex or edge of the right kind.
    bool deletable(const Element &element) const;

private:
    const Graph *graph_;
    Mode mode_;
    int step_ = 0;
    Graph current_;
    VertexMask deleted_mask_ = 0;
    DeletionSet deleted_;
};

/// Scans members in order and reports the canonical embedding of the first
/// one present in the current graph. Deterministic in the state.
std::optional<Violation> detect_violation(const EngineState &state, const ObstructionSet &f);

/// An online algorithm. One instance per run: strategies keep per-run state.
class OnlineStrategy {
public:
    virtual ~OnlineStrategy() = default;

    /// Called once before the first reveal.
    virtual void start(const ObstructionSet &, Mode, AdviceReader &) {}
    /// Called while a violation exists; must name an element still present.
    virtual Element choose(const EngineState &state, const Violation &violation, AdviceReader &advice) = 0;
};

struct DeletionEvent {
    std::size_t member = 0;
    VertexSet violation;
    Element deleted;

    bool operator==(const DeletionEvent &) const = default;
};

struct TraceStep {
    int step = 0;          // 1-based
    Vertex revealed = 0;   // label revealed at this step
    std::vector<DeletionEvent> events;
    std::size_t bits = 0;  // advice bits consumed during this step

    bool operator==(const TraceStep &) const = default;
};

struct Trace {
    Mode mode = Mode::Node;
    std::size_t initial_bits = 0;  // bits read before the first reveal
    std::vector<TraceStep> steps;
    DeletionSet deleted;           // S_n
    std::size_t total_bits = 0;

    std::size_t deletions() const noexcept { return deleted.size(); }
    /// Elements deleted during the settlement of each step.
    std::vector<std::vector<Element>> deletions_per_step() const;

    bool operator==(const Trace &) const = default;
};

/// Runs the delayed deletion protocol: after each reveal, repeatedly detect a
/// violation and ask the strategy for one deletion until the revealed graph
/// is F-free. Throws EngineError when the strategy names an invalid element
/// or cannot settle within |revealed| (node) or ||revealed|| (edge) deletions,
/// and std::invalid_argument for an edgeless member in edge mode.
Trace run(const OnlineInstance &instance, const ObstructionSet &f, OnlineStrategy &strategy, AdviceReader &advice);
Trace run(const OnlineInstance &instance, const ObstructionSet &f, OnlineStrategy &strategy);

/// Re-executes the recorded deletions and checks that every detection matches.
/// Throws EngineError on divergence.
Trace replay(const OnlineInstance &instance, const ObstructionSet &f, const Trace &trace);

}  // namespace advdel
