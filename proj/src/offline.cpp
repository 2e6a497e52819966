#include "advdel/offline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "advdel/errors.hpp"

namespace advdel {

namespace {

// Saturates at `limit` + 1.
std::size_t binomial(std::size_t n, std::size_t k, std::size_t limit)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > limit)
            return limit + 1;
    }
    return static_cast<std::size_t>(r);
}

// Calls visit(indices) for every k-subset of 0..n-1 in lexicographic order.
template <typename Visit>
void for_each_combination(int n, int k, Visit &&visit)
{
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        visit(std::as_const(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

OfflineOptimum offline_optimum(const Graph &g, const ObstructionSet &f, Mode mode, std::size_t budget)
{
    if (mode == Mode::Edge && !f.valid_for_edge_mode())
        throw std::invalid_argument("edge mode forbids edgeless obstruction members");

    const EdgeSet edges = mode == Mode::Edge ? g.edges() : EdgeSet{};
    const int universe = mode == Mode::Node ? g.order() : static_cast<int>(edges.size());

    OfflineOptimum result;
    std::size_t examined = 0;
    for (int k = 0; k <= universe; ++k) {
        examined += binomial(static_cast<std::size_t>(universe), static_cast<std::size_t>(k), budget);
        if (examined > budget)
            throw CapExceeded("offline search would examine more than " + std::to_string(budget) +
                              " candidate sets (reached cardinality " + std::to_string(k) + ")");
        for_each_combination(universe, k, [&](const std::vector<int> &idx) {
            if (mode == Mode::Node) {
                VertexMask removed = 0;
                for (int v : idx)
                    removed |= bit(v);
                if (is_free(g, f, g.all_vertices() & ~removed))
                    result.solutions.push_back(DeletionSet{VertexSet(idx.begin(), idx.end()), {}});
            } else {
                EdgeSet chosen;
                chosen.reserve(idx.size());
                for (int i : idx)
                    chosen.push_back(edges[i]);
                if (is_free(remove_edges(g, chosen), f))
                    result.solutions.push_back(DeletionSet{{}, std::move(chosen)});
            }
        });
        if (!result.solutions.empty()) {
            result.size = static_cast<std::size_t>(k);
            return result;
        }
    }
    // Edge mode with no edges left and still not free is impossible for valid
    // families; node mode always succeeds by deleting everything.
    throw std::logic_error("no deletion set makes the graph F-free");
}

std::size_t follow_position(const DeletionSet &target, const Violation &violation, Mode mode)
{
    if (mode == Mode::Node) {
        for (std::size_t i = 0; i < violation.vertices.size(); ++i)
            if (std::binary_search(target.vertices.begin(), target.vertices.end(), violation.vertices[i]))
                return i;
    } else {
        for (std::size_t i = 0; i < violation.edges.size(); ++i)
            if (std::binary_search(target.edges.begin(), target.edges.end(), violation.edges[i]))
                return i;
    }
    throw AdviceError("detected copy contains no element of the target solution");
}

Element FollowSolution::choose(const EngineState &state, const Violation &violation, AdviceReader &)
{
    const std::size_t pos = follow_position(target_, violation, state.mode());
    if (state.mode() == Mode::Node)
        return violation.vertices[pos];
    return violation.edges[pos];
}

}  // namespace advdel
