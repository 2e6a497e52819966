#include "advdel/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <thread>

#include "advdel/advice.hpp"
#include "advdel/errors.hpp"

namespace advdel {

EExtensionCheck check_e_extension(const Graph &u, Edge e, const Graph &h)
{
    EExtensionCheck check;
    check.contains_h = contains_induced(h, u);
    const Edge only_e[] = {e};
    check.e_destroys_all = u.adjacent(e.u, e.v) && !contains_induced(h, remove_edges(u, only_e));
    check.other_edges_keep_h = true;
    for (const Edge &f : u.edges()) {
        if (f == e)
            continue;
        const Edge only_f[] = {f};
        if (!contains_induced(h, remove_edges(u, only_f))) {
            check.other_edges_keep_h = false;
            check.failing_edge = f;
            break;
        }
    }
    return check;
}

bool verify_e_extension(const EExtension &ext, const Graph &h) { return check_e_extension(ext.graph, ext.edge, h).ok(); }

bool verify_unique_optimum(const OnlineInstance &instance, const ObstructionSet &f, const DeletionSet &expected)
{
    const OfflineOptimum optimum = offline_optimum(instance.graph, f, instance.mode);
    return optimum.unique() && optimum.smallest() == expected;
}

namespace {

std::vector<std::uint64_t> prefix_rows(const Graph &g, int t)
{
    std::vector<std::uint64_t> rows(t);
    for (Vertex v = 0; v < t; ++v)
        rows[v] = g.neighbors(v) & prefix_mask(t);
    return rows;
}

int common_prefix(const Graph &a, const Graph &b)
{
    const int limit = std::min(a.order(), b.order());
    int t = 0;
    // Prefix t+1 matches iff prefix t matches and the new vertex has the same back-edges.
    while (t < limit && (a.neighbors(t) & prefix_mask(t)) == (b.neighbors(t) & prefix_mask(t)))
        ++t;
    return t;
}

// Any algorithm optimal on both must, after step t, have deleted only
// elements common to both unique optima; if even deleting all of those leaves
// the shared prefix with a violation, the two members need different advice.
bool members_conflict(const Graph &a, const DeletionSet &sa, const Graph &b, const DeletionSet &sb,
                      const ObstructionSet &f, Mode mode)
{
    const int t = common_prefix(a, b);
    const VertexMask prefix = prefix_mask(t);
    if (mode == Mode::Node) {
        VertexMask common = 0;
        for (Vertex v : sa.vertices)
            if (v < t && std::binary_search(sb.vertices.begin(), sb.vertices.end(), v))
                common |= bit(v);
        return !is_free(a, f, prefix & ~common);
    }
    EdgeSet common;
    for (const Edge &e : sa.edges)
        if (e.v < t && std::binary_search(sb.edges.begin(), sb.edges.end(), e))
            common.push_back(e);
    return !is_free(remove_edges(a, common), f, prefix);
}

struct TrieNode {
    using PrefixKey = std::pair<int, std::vector<std::uint64_t>>;
    std::map<PrefixKey, std::map<std::vector<Element>, std::unique_ptr<TrieNode>>> next;
};

std::size_t required_strings(const TrieNode &node, std::vector<int> &divergence)
{
    if (node.next.empty())
        return 1;
    std::size_t best = 0;
    for (const auto &[prefix, actions] : node.next) {
        if (actions.size() > 1)
            divergence.push_back(prefix.first);
        std::size_t sum = 0;
        for (const auto &[action, child] : actions)
            sum += required_strings(*child, divergence);
        best = std::max(best, sum);
    }
    return best;
}

std::size_t leaf_nodes(const TrieNode &node)
{
    if (node.next.empty())
        return 1;
    std::size_t total = 0;
    for (const auto &[prefix, actions] : node.next)
        for (const auto &[action, child] : actions)
            total += leaf_nodes(*child);
    return total;
}

struct MemberResult {
    MemberCheck check;
    DeletionSet optimum;
    std::vector<ActionToken> actions;
    std::string failure;
};

MemberResult check_member(const Family &family, std::size_t index)
{
    const FamilyMember &member = family.members[index];
    MemberResult r;
    r.check.index = index;
    try {
        const OfflineOptimum optimum = offline_optimum(member.instance.graph, family.obstruction, family.mode());
        r.check.optimum_size = optimum.size;
        r.check.optimum_count = optimum.solutions.size();
        r.check.matches_expected = optimum.unique() && optimum.smallest() == member.expected_optimum;
        r.optimum = optimum.smallest();
        if (optimum.size != family.optimum_size)
            r.failure = "member " + std::to_string(index) + ": optimum size " + std::to_string(optimum.size) +
                        ", expected " + std::to_string(family.optimum_size);
        else if (family.unique_optimum && !r.check.matches_expected)
            r.failure = "member " + std::to_string(index) + ": optimum not unique or not the predicted set";
        r.actions = forced_action_sequence(member.instance, family.obstruction, r.optimum);
    } catch (const std::exception &ex) {
        r.failure = "member " + std::to_string(index) + ": " + ex.what();
    }
    return r;
}

}  // namespace

std::vector<ActionToken> forced_action_sequence(const OnlineInstance &instance, const ObstructionSet &f,
                                                const DeletionSet &optimum)
{
    FollowSolution follower(optimum);
    const Trace trace = run(instance, f, follower);
    std::vector<ActionToken> tokens;
    tokens.reserve(trace.steps.size());
    for (const TraceStep &s : trace.steps) {
        ActionToken token;
        token.step = s.step;
        token.prefix = prefix_rows(instance.graph, s.step);
        for (const DeletionEvent &e : s.events)
            token.deleted.push_back(e.deleted);
        tokens.push_back(std::move(token));
    }
    return tokens;
}

DistinguishabilityReport verify_family(const Family &family, int jobs)
{
    const std::size_t n = family.members.size();
    std::vector<MemberResult> results(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            results[i] = check_member(family, i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::jthread> workers;
        const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
        for (std::size_t w = 0; w < threads; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = cursor++; i < n; i = cursor++)
                    results[i] = check_member(family, i);
            });
    }

    DistinguishabilityReport report;
    report.family_size = n;
    report.optima_ok = true;
    TrieNode root;
    for (const MemberResult &r : results) {
        report.members.push_back(r.check);
        if (!r.failure.empty()) {
            report.failures.push_back(r.failure);
            report.optima_ok = false;
        }
        TrieNode *node = &root;
        for (const ActionToken &token : r.actions) {
            auto &actions = node->next[{token.step, token.prefix}];
            auto &child = actions[token.deleted];
            if (!child)
                child = std::make_unique<TrieNode>();
            node = child.get();
        }
    }

    std::vector<int> divergence;
    report.leaves = n == 0 ? 0 : required_strings(root, divergence);
    report.distinct_sequences = n == 0 ? 0 : leaf_nodes(root);
    report.lower_bound_bits = static_cast<std::size_t>(ceil_log2(report.leaves));
    if (!divergence.empty()) {
        report.min_divergence_step = *std::min_element(divergence.begin(), divergence.end());
        report.max_divergence_step = *std::max_element(divergence.begin(), divergence.end());
        double sum = 0;
        for (int d : divergence)
            sum += d;
        report.mean_divergence_step = sum / static_cast<double>(divergence.size());
    }

    report.all_pairs_conflict = true;
    for (std::size_t i = 0; i < n && report.all_pairs_conflict; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!members_conflict(family.members[i].instance.graph, results[i].optimum,
                                  family.members[j].instance.graph, results[j].optimum, family.obstruction,
                                  family.mode())) {
                report.all_pairs_conflict = false;
                report.failures.push_back("members " + std::to_string(i) + " and " + std::to_string(j) +
                                          " can share advice");
                break;
            }
        }
    return report;
}

bool audit_bits(const Trace &trace, std::size_t expected_budget) { return trace.total_bits == expected_budget; }

}  // namespace advdel
