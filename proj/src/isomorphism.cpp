#include "advdel/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>

#include "advdel/errors.hpp"

namespace advdel {

VertexSet IsoMapping::image_set() const
{
    VertexSet s = image;
    std::sort(s.begin(), s.end());
    return s;
}

namespace {

std::vector<int> sorted_degrees(const Graph &g, std::span<const Vertex> vertices, VertexMask within)
{
    std::vector<int> d;
    d.reserve(vertices.size());
    for (Vertex v : vertices)
        d.push_back(std::popcount(g.neighbors(v) & within));
    std::sort(d.begin(), d.end());
    return d;
}

// Combination search over host vertices in ascending label order, so the
// first image set found is the lexicographically smallest one.
class InducedMatcher {
public:
    InducedMatcher(const Graph &pattern, const Graph &host, VertexMask active)
        : pattern_(pattern), host_(host), candidates_(vertices_of(active & host.all_vertices())),
          k_(pattern.order())
    {
        pattern_edges_ = pattern.edge_count();
        pattern_non_edges_ = k_ * (k_ - 1) / 2 - pattern_edges_;
        const VertexSet all = vertices_of(pattern.all_vertices());
        pattern_degrees_ = sorted_degrees(pattern, all, pattern.all_vertices());
        if (k_ > 0) {
            max_degree_ = pattern_degrees_.back();
            max_co_degree_ = k_ - 1 - pattern_degrees_.front();
        }
    }

    std::optional<IsoMapping> run()
    {
        if (k_ == 0)
            return IsoMapping{};
        if (static_cast<int>(candidates_.size()) < k_)
            return std::nullopt;
        chosen_.reserve(k_);
        if (choose(0))
            return result_;
        return std::nullopt;
    }

private:
    bool choose(std::size_t start)
    {
        const int size = static_cast<int>(chosen_.size());
        if (size == k_)
            return map_subset();
        for (std::size_t i = start; i + static_cast<std::size_t>(k_ - size) <= candidates_.size(); ++i) {
            const Vertex v = candidates_[i];
            const int d = std::popcount(host_.neighbors(v) & chosen_mask_);
            const int edges = edges_ + d;
            const int non_edges = size * (size + 1) / 2 - edges;
            if (edges > pattern_edges_ || non_edges > pattern_non_edges_)
                continue;
            if (d > max_degree_ || size - d > max_co_degree_)
                continue;
            const VertexMask next_mask = chosen_mask_ | bit(v);
            bool feasible = true;
            for (Vertex u : chosen_) {
                const int du = std::popcount(host_.neighbors(u) & next_mask);
                if (du > max_degree_ || size - du > max_co_degree_) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible)
                continue;
            chosen_.push_back(v);
            chosen_mask_ = next_mask;
            edges_ = edges;
            if (choose(i + 1))
                return true;
            chosen_.pop_back();
            chosen_mask_ &= ~bit(v);
            edges_ -= d;
        }
        return false;
    }

    bool map_subset()
    {
        if (edges_ != pattern_edges_)
            return false;
        if (sorted_degrees(host_, chosen_, chosen_mask_) != pattern_degrees_)
            return false;
        image_.assign(k_, -1);
        used_ = 0;
        if (!assign(0))
            return false;
        result_ = IsoMapping{image_};
        return true;
    }

    bool assign(int i)
    {
        if (i == k_)
            return true;
        const int want = pattern_.degree(i);
        for (Vertex c : chosen_) {
            if (used_ & bit(c))
                continue;
            if (std::popcount(host_.neighbors(c) & chosen_mask_) != want)
                continue;
            bool consistent = true;
            for (int j = 0; j < i; ++j) {
                if (pattern_.adjacent(i, j) != host_.adjacent(c, image_[j])) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent)
                continue;
            image_[i] = c;
            used_ |= bit(c);
            if (assign(i + 1))
                return true;
            used_ &= ~bit(c);
        }
        return false;
    }

    const Graph &pattern_;
    const Graph &host_;
    VertexSet candidates_;
    int k_;
    int pattern_edges_ = 0;
    int pattern_non_edges_ = 0;
    int max_degree_ = 0;
    int max_co_degree_ = 0;
    std::vector<int> pattern_degrees_;

    std::vector<Vertex> chosen_;
    VertexMask chosen_mask_ = 0;
    int edges_ = 0;

    std::vector<Vertex> image_;
    VertexMask used_ = 0;
    IsoMapping result_;
};

}  // namespace

std::optional<IsoMapping> find_induced(const Graph &pattern, const Graph &host, VertexMask active)
{
    return InducedMatcher(pattern, host, active).run();
}

std::optional<IsoMapping> find_induced(const Graph &pattern, const Graph &host)
{
    return find_induced(pattern, host, host.all_vertices());
}

bool contains_induced(const Graph &pattern, const Graph &host, VertexMask active)
{
    return find_induced(pattern, host, active).has_value();
}

bool contains_induced(const Graph &pattern, const Graph &host)
{
    return contains_induced(pattern, host, host.all_vertices());
}

bool is_induced_embedding(const Graph &pattern, const Graph &host, const IsoMapping &mapping)
{
    if (static_cast<int>(mapping.image.size()) != pattern.order())
        return false;
    VertexMask seen = 0;
    for (Vertex v : mapping.image) {
        if (v < 0 || v >= host.order() || (seen & bit(v)))
            return false;
        seen |= bit(v);
    }
    for (int i = 0; i < pattern.order(); ++i)
        for (int j = i + 1; j < pattern.order(); ++j)
            if (pattern.adjacent(i, j) != host.adjacent(mapping.image[i], mapping.image[j]))
                return false;
    return true;
}

bool is_free(const Graph &host, std::span<const Graph> family, VertexMask active)
{
    return std::none_of(family.begin(), family.end(),
                        [&](const Graph &h) { return contains_induced(h, host, active); });
}

bool is_free(const Graph &host, std::span<const Graph> family)
{
    return is_free(host, family, host.all_vertices());
}

namespace {

using Cells = std::vector<VertexSet>;

// Splits cells by neighbour counts into every cell until stable. The split
// order depends only on the signatures, so the result is isomorphism-invariant.
void refine(const Graph &g, Cells &cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<VertexMask> masks;
        masks.reserve(cells.size());
        for (const VertexSet &c : cells)
            masks.push_back(mask_of(c));

        Cells next;
        next.reserve(g.order());
        for (const VertexSet &cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, Vertex>> signed_vertices;
            for (Vertex v : cell) {
                std::vector<int> sig(masks.size());
                for (std::size_t i = 0; i < masks.size(); ++i)
                    sig[i] = std::popcount(g.neighbors(v) & masks[i]);
                signed_vertices.emplace_back(std::move(sig), v);
            }
            std::sort(signed_vertices.begin(), signed_vertices.end());
            std::size_t begin = 0;
            std::size_t groups = 0;
            for (std::size_t i = 1; i <= signed_vertices.size(); ++i) {
                if (i == signed_vertices.size() || signed_vertices[i].first != signed_vertices[begin].first) {
                    VertexSet part;
                    for (std::size_t j = begin; j < i; ++j)
                        part.push_back(signed_vertices[j].second);
                    std::sort(part.begin(), part.end());
                    next.push_back(std::move(part));
                    begin = i;
                    ++groups;
                }
            }
            changed = changed || groups > 1;
        }
        cells = std::move(next);
    }
}

CanonicalKey key_for_order(const Graph &g, std::span<const Vertex> order)
{
    const int n = g.order();
    CanonicalKey key;
    key.order = n;
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    key.bits.assign((nbits + 63) / 64, 0);
    std::size_t b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (g.adjacent(order[i], order[j]))
                key.bits[b / 64] |= std::uint64_t{1} << (63 - b % 64);
    return key;
}

bool twins(const Graph &g, Vertex a, Vertex b)
{
    return (g.neighbors(a) & ~bit(b)) == (g.neighbors(b) & ~bit(a));
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph &g) : g_(g) {}

    std::vector<Vertex> run()
    {
        Cells cells;
        if (g_.order() > 0)
            cells.push_back(vertices_of(g_.all_vertices()));
        search(std::move(cells));
        return best_order_;
    }

private:
    void search(Cells cells)
    {
        refine(g_, cells);
        auto target = cells.end();
        for (auto it = cells.begin(); it != cells.end(); ++it)
            if (it->size() > 1 && (target == cells.end() || it->size() < target->size()))
                target = it;
        if (target == cells.end()) {
            std::vector<Vertex> order;
            order.reserve(cells.size());
            for (const VertexSet &c : cells)
                order.push_back(c.front());
            CanonicalKey key = key_for_order(g_, order);
            if (!have_best_ || key < best_key_) {
                best_key_ = std::move(key);
                best_order_ = std::move(order);
                have_best_ = true;
            }
            return;
        }
        const std::size_t index = static_cast<std::size_t>(target - cells.begin());
        const VertexSet cell = *target;
        std::vector<Vertex> tried;
        for (Vertex v : cell) {
            // Swapping two twins is an automorphism that fixes the partition.
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g_, t, v); }))
                continue;
            tried.push_back(v);
            Cells next = cells;
            VertexSet rest;
            for (Vertex w : cell)
                if (w != v)
                    rest.push_back(w);
            next[index] = VertexSet{v};
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(index) + 1, std::move(rest));
            search(std::move(next));
        }
    }

    const Graph &g_;
    bool have_best_ = false;
    CanonicalKey best_key_;
    std::vector<Vertex> best_order_;
};

void check_canonical_cap(const Graph &g)
{
    if (g.order() > kCanonicalCap)
        throw CapExceeded("canonical form limited to " + std::to_string(kCanonicalCap) + " vertices, got " +
                          std::to_string(g.order()));
}

}  // namespace

std::vector<Vertex> canonical_order(const Graph &g)
{
    check_canonical_cap(g);
    return CanonicalSearch(g).run();
}

CanonicalKey canonical_form(const Graph &g)
{
    const std::vector<Vertex> order = canonical_order(g);
    return key_for_order(g, order);
}

Graph canonical_graph(const Graph &g)
{
    const std::vector<Vertex> order = canonical_order(g);
    std::vector<Vertex> new_label(g.order());
    for (int i = 0; i < g.order(); ++i)
        new_label[order[i]] = i;
    return relabel(g, new_label);
}

bool is_isomorphic(const Graph &a, const Graph &b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

const std::vector<Graph> &all_graphs_of_order(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;

    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }

    std::vector<Graph> result;
    if (n == 0) {
        result.emplace_back(0);
    } else {
        const std::vector<Graph> &smaller = all_graphs_of_order(n - 1);
        std::map<CanonicalKey, Graph> classes;
        for (const Graph &base : smaller) {
            for (VertexMask nb = 0; nb < (VertexMask{1} << (n - 1)); ++nb) {
                GraphBuilder b(n);
                for (const Edge &e : base.edges())
                    b.add_edge(e.u, e.v);
                for (Vertex v : vertices_of(nb))
                    b.add_edge(v, n - 1);
                const Graph candidate = b.build();
                const std::vector<Vertex> order = canonical_order(candidate);
                CanonicalKey key = key_for_order(candidate, order);
                if (classes.contains(key))
                    continue;
                std::vector<Vertex> new_label(n);
                for (int i = 0; i < n; ++i)
                    new_label[order[i]] = i;
                classes.emplace(std::move(key), relabel(candidate, new_label));
            }
        }
        for (auto &[key, g] : classes)
            result.push_back(std::move(g));
    }

    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int cap)
{
    if (n < 0)
        throw std::invalid_argument("negative order");
    if (n > cap)
        throw CapExceeded("graph enumeration limited to order " + std::to_string(cap) + ", requested " +
                          std::to_string(n));
    const std::vector<Graph> &all = all_graphs_of_order(n);
    if (!connected_only)
        return all;
    std::vector<Graph> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Graph &g) { return is_connected(g); });
    return out;
}

}  // namespace advdel
