#include "advdel/engine.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "advdel/errors.hpp"

namespace advdel {

std::string_view to_string(Mode mode) { return mode == Mode::Node ? "node" : "edge"; }

Mode parse_mode(std::string_view text)
{
    if (text == "node")
        return Mode::Node;
    if (text == "edge")
        return Mode::Edge;
    throw std::invalid_argument("mode must be 'node' or 'edge', got '" + std::string(text) + "'");
}

EngineState::EngineState(const Graph &graph, Mode mode) : graph_(&graph), mode_(mode), current_(graph) {}

void EngineState::reveal_next()
{
    if (step_ >= graph_->order())
        throw EngineError("no vertex left to reveal");
    ++step_;
}

bool EngineState::deletable(const Element &element) const
{
    if (mode_ == Mode::Node) {
        const auto *v = std::get_if<Vertex>(&element);
        return v && *v >= 0 && *v < step_ && !(deleted_mask_ & bit(*v));
    }
    const auto *e = std::get_if<Edge>(&element);
    return e && e->u >= 0 && e->v < step_ && e->u != e->v && current_.adjacent(e->u, e->v);
}

void EngineState::apply(const Element &element)
{
    if (!deletable(element))
        throw EngineError("element is not deletable in the current state");
    if (mode_ == Mode::Node) {
        const Vertex v = std::get<Vertex>(element);
        deleted_mask_ |= bit(v);
        deleted_.vertices.insert(std::upper_bound(deleted_.vertices.begin(), deleted_.vertices.end(), v), v);
    } else {
        const Edge e = std::get<Edge>(element);
        const Edge removed[] = {e};
        current_ = remove_edges(current_, removed);
        deleted_.edges.insert(std::upper_bound(deleted_.edges.begin(), deleted_.edges.end(), e), e);
    }
}

std::optional<Violation> detect_violation(const EngineState &state, const ObstructionSet &f)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (auto mapping = find_induced(f[i], state.current(), state.active())) {
            Violation v;
            v.member = i;
            v.vertices = mapping->image_set();
            v.edges = state.current().edges_within(mask_of(v.vertices));
            return v;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<Element>> Trace::deletions_per_step() const
{
    std::vector<std::vector<Element>> out;
    out.reserve(steps.size());
    for (const TraceStep &s : steps) {
        std::vector<Element> here;
        for (const DeletionEvent &e : s.events)
            here.push_back(e.deleted);
        out.push_back(std::move(here));
    }
    return out;
}

Trace run(const OnlineInstance &instance, const ObstructionSet &f, OnlineStrategy &strategy, AdviceReader &advice)
{
    if (instance.mode == Mode::Edge && !f.valid_for_edge_mode())
        throw std::invalid_argument("edge mode forbids edgeless obstruction members");

    EngineState state(instance.graph, instance.mode);
    Trace trace;
    trace.mode = instance.mode;
    strategy.start(f, instance.mode, advice);
    trace.initial_bits = advice.bits_read();

    for (Vertex label = 0; label < instance.graph.order(); ++label) {
        state.reveal_next();
        const std::size_t bits_before = advice.bits_read();
        TraceStep step;
        step.step = label + 1;
        step.revealed = label;

        const std::size_t limit = instance.mode == Mode::Node
                                      ? static_cast<std::size_t>(std::popcount(state.revealed()))
                                      : static_cast<std::size_t>(state.current().edge_count_within(state.revealed()));
        std::size_t settled = 0;
        while (auto violation = detect_violation(state, f)) {
            if (settled++ >= limit)
                throw EngineError("strategy failed to restore F-freeness at step " + std::to_string(step.step));
            const Element chosen = strategy.choose(state, *violation, advice);
            if (!state.deletable(chosen))
                throw EngineError("strategy chose an absent or already deleted element at step " +
                                  std::to_string(step.step));
            state.apply(chosen);
            step.events.push_back(DeletionEvent{violation->member, std::move(violation->vertices), chosen});
        }
        step.bits = advice.bits_read() - bits_before;
        trace.steps.push_back(std::move(step));
    }
    trace.deleted = state.deleted();
    trace.total_bits = advice.bits_read();
    return trace;
}

Trace run(const OnlineInstance &instance, const ObstructionSet &f, OnlineStrategy &strategy)
{
    const AdviceTape empty;
    AdviceReader reader(empty);
    return run(instance, f, strategy, reader);
}

namespace {

class ReplayStrategy : public OnlineStrategy {
public:
    explicit ReplayStrategy(const Trace &trace) : trace_(trace) {}

    Element choose(const EngineState &state, const Violation &violation, AdviceReader &) override
    {
        const TraceStep &step = trace_.steps.at(static_cast<std::size_t>(state.step() - 1));
        if (cursor_step_ != state.step()) {
            cursor_step_ = state.step();
            cursor_ = 0;
        }
        if (cursor_ >= step.events.size())
            throw EngineError("replay: unexpected violation at step " + std::to_string(state.step()));
        const DeletionEvent &event = step.events[cursor_++];
        if (event.member != violation.member || event.violation != violation.vertices)
            throw EngineError("replay: detection differs at step " + std::to_string(state.step()));
        return event.deleted;
    }

private:
    const Trace &trace_;
    int cursor_step_ = 0;
    std::size_t cursor_ = 0;
};

}  // namespace

Trace replay(const OnlineInstance &instance, const ObstructionSet &f, const Trace &trace)
{
    if (trace.steps.size() != static_cast<std::size_t>(instance.graph.order()))
        throw EngineError("replay: trace length does not match instance");
    ReplayStrategy strategy(trace);
    Trace again = run(instance, f, strategy);
    for (std::size_t i = 0; i < again.steps.size(); ++i)
        if (again.steps[i].events != trace.steps[i].events)
            throw EngineError("replay: deletions differ at step " + std::to_string(i + 1));
    return again;
}

}  // namespace advdel
