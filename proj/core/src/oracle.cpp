#include "dynmatch/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace dynmatch::oracle {

namespace {

void enforce_limits(const DynamicGraph& g, const OracleLimits& limits) {
    if (g.vertex_count() > limits.max_vertices || g.vertex_count() > 64) {
        throw LimitError("oracle refuses " + std::to_string(g.vertex_count()) + " vertices (limit " +
                         std::to_string(std::min<std::size_t>(limits.max_vertices, 64)) + ")");
    }
    if (g.edge_count() > limits.max_edges) {
        throw LimitError("oracle refuses " + std::to_string(g.edge_count()) + " edges (limit " +
                         std::to_string(limits.max_edges) + ")");
    }
}

std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

class BranchAndBound {
public:
    BranchAndBound(std::vector<Edge> edges, bool unit) : edges_(std::move(edges)), unit_(unit) {
        if (unit_) {
            for (auto& e : edges_) {
                e.w = 1;
            }
        }
    }

    ExactMatching solve() {
        chosen_.clear();
        search(0, 0, 0);
        ExactMatching out;
        for (const std::size_t i : best_set_) {
            out.edges.push_back(edges_[i]);
        }
        out.weight = best_weight_;
        return out;
    }

private:
    Weight bound(std::size_t from, std::uint64_t used) const {
        Weight sum = 0;
        std::size_t count = 0;
        std::uint64_t touched = 0;
        for (std::size_t j = from; j < edges_.size(); ++j) {
            const auto& e = edges_[j];
            if (!(used & (bit(e.u) | bit(e.v)))) {
                sum += e.w;
                ++count;
                touched |= bit(e.u) | bit(e.v);
            }
        }
        if (unit_) {
            const auto pairs = static_cast<std::size_t>(__builtin_popcountll(touched) / 2);
            return static_cast<Weight>(std::min(count, pairs));
        }
        return sum;
    }

    void search(std::size_t i, std::uint64_t used, Weight weight) {
        if (weight > best_weight_) {
            best_weight_ = weight;
            best_set_ = chosen_;
        }
        if (i == edges_.size() || weight + bound(i, used) <= best_weight_) {
            return;
        }
        const auto& e = edges_[i];
        const std::uint64_t ends = bit(e.u) | bit(e.v);
        if (!(used & ends)) {
            chosen_.push_back(i);
            search(i + 1, used | ends, weight + e.w);
            chosen_.pop_back();
        }
        search(i + 1, used, weight);
    }

    std::vector<Edge> edges_;
    bool unit_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_set_;
    Weight best_weight_ = 0;
};

} // namespace

ExactMatching exact_mwm(const DynamicGraph& g, const OracleLimits& limits) {
    enforce_limits(g, limits);
    return BranchAndBound(g.edges(), false).solve();
}

ExactMatching exact_mcm_matching(const DynamicGraph& g, const OracleLimits& limits) {
    enforce_limits(g, limits);
    return BranchAndBound(g.edges(), true).solve();
}

std::size_t exact_mcm(const DynamicGraph& g, const OracleLimits& limits) {
    return exact_mcm_matching(g, limits).edges.size();
}

ExactMatching exact_mwm_enumerate(const DynamicGraph& g) {
    enforce_limits(g, OracleLimits{64, 24});
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    ExactMatching best;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::uint64_t used = 0;
        Weight w = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if (mask >> i & 1) {
                const std::uint64_t ends = bit(edges[i].u) | bit(edges[i].v);
                ok = !(used & ends);
                used |= ends;
                w += edges[i].w;
            }
        }
        if (ok && w > best.weight) {
            best.weight = w;
            best_mask = mask;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (best_mask >> i & 1) {
            best.edges.push_back(edges[i]);
        }
    }
    return best;
}

namespace {

/// Depth-first enumeration of simple alternating paths with exactly
/// `target` non-matching edges.
class AlternatingPathSearch {
public:
    AlternatingPathSearch(const DynamicGraph& g, const MatchingState& st) : g_(g), st_(st) {
        sorted_.resize(g.vertex_count());
        for (const auto& e : g.edges()) {
            sorted_[e.u].push_back({e.v, e.w});
            sorted_[e.v].push_back({e.u, e.w});
        }
    }

    std::optional<AugmentingPath> find(std::size_t target, bool closed) {
        target_ = target;
        closed_ = closed;
        for (VertexId s = 0; s < g_.vertex_count(); ++s) {
            path_ = {};
            path_.nodes.push_back(s);
            const std::uint64_t used = bit(s);
            // A path may open with s's matched edge, or with a free edge if s is free.
            if (st_.is_matched(s) && step_matched(s, used)) {
                return found_;
            }
            if (st_.is_free(s) && step_free(s, used)) {
                return found_;
            }
        }
        return std::nullopt;
    }

private:
    bool accept() {
        const auto& e = path_.edges.back();
        const bool last_matched = st_.mate(e.u) == e.v;
        if (!last_matched && st_.is_matched(path_.nodes.back())) {
            return false;
        }
        if (path_.free_edges == target_ && path_.gain > 0) {
            found_ = path_;
            return true;
        }
        return false;
    }

    bool step_matched(VertexId x, std::uint64_t used) {
        const auto m = st_.mate(x);
        if (!m || (used & bit(*m))) {
            return false;
        }
        const Weight w = st_.mate_weight(x);
        push(x, *m, w, -w);
        const bool hit = accept() || step_free(*m, used | bit(*m));
        pop(-w);
        return hit;
    }

    bool step_free(VertexId x, std::uint64_t used) {
        if (path_.free_edges == target_) {
            return false;
        }
        const auto m = st_.mate(x);
        for (const auto& nb : sorted_[x]) {
            if (closes_cycle(nb.v)) {
                ++path_.free_edges;
                push(x, nb.v, nb.w, nb.w);
                const bool hit = path_.free_edges == target_ && path_.gain > 0;
                if (hit) {
                    path_.closed = true;
                    found_ = path_;
                }
                pop(nb.w);
                --path_.free_edges;
                if (hit) {
                    return true;
                }
                continue;
            }
            if ((used & bit(nb.v)) || m == nb.v) {
                continue;
            }
            ++path_.free_edges;
            push(x, nb.v, nb.w, nb.w);
            const bool hit = accept() || step_matched(nb.v, used | bit(nb.v));
            pop(nb.w);
            --path_.free_edges;
            if (hit) {
                return true;
            }
        }
        return false;
    }

    // A free edge back to the start closes an alternating cycle when the walk
    // opened with the start's matched edge.
    bool closes_cycle(VertexId y) const {
        const VertexId s = path_.nodes.front();
        return closed_ && y == s && path_.edges.size() >= 3 && st_.mate(s) == path_.nodes[1];
    }

    void push(VertexId a, VertexId b, Weight w, Weight delta) {
        path_.edges.push_back({a, b, w});
        path_.nodes.push_back(b);
        path_.gain += delta;
    }

    void pop(Weight delta) {
        path_.edges.pop_back();
        path_.nodes.pop_back();
        path_.gain -= delta;
    }

    const DynamicGraph& g_;
    const MatchingState& st_;
    std::vector<std::vector<Neighbor>> sorted_;
    std::size_t target_ = 0;
    bool closed_ = true;
    AugmentingPath path_;
    AugmentingPath found_;
};

} // namespace

std::optional<AugmentingPath> find_weight_augmenting_kpath(const DynamicGraph& g, const MatchingState& st,
                                                           std::size_t k_max, const OracleLimits& limits,
                                                           PathShapes shapes) {
    enforce_limits(g, limits);
    AlternatingPathSearch search(g, st);
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (auto p = search.find(k, shapes == PathShapes::open_and_closed)) {
            return p;
        }
    }
    return std::nullopt;
}

bool verify_short_path_bound(const DynamicGraph& g, const MatchingState& st, std::size_t k,
                         const OracleLimits& limits, PathShapes shapes) {
    if (k == 0) {
        throw PreconditionError("k must be at least 1");
    }
    if (k > 1 && find_weight_augmenting_kpath(g, st, k - 1, limits, shapes)) {
        throw PreconditionError("a weight-augmenting path with fewer than k free edges exists");
    }
    const Weight opt = exact_mwm(g, limits).weight;
    const double ratio = static_cast<double>(k - 1) / static_cast<double>(k);
    return st.total_weight() >= ratio * opt - 1e-9 * std::max<Weight>(1, opt);
}

} // namespace dynmatch::oracle
