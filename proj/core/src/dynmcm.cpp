#include "dynmatch/dynmcm.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace dynmatch {

void McmConfig::validate() const {
    if (!(epsilon > 0)) {
        throw InputError("MCM epsilon must be positive");
    }
    if (repetitions == 0) {
        throw InputError("MCM repetitions must be at least 1");
    }
}

std::size_t McmConfig::depth() const {
    const double d = std::ceil(2.0 / epsilon - 1.0 - 1e-9);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::max(d, 1.0)));
}

std::size_t maximality_walk_count(std::size_t max_degree, std::size_t n, double epsilon) {
    constexpr double kCap = 1099511627776.0;
    const double exponent = std::max(2.0 / epsilon - 1.0, 1.0);
    const double base = static_cast<double>(std::max<std::size_t>(max_degree, 1));
    const double log_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
    const double reps = std::min(kCap, std::ceil(std::pow(base, exponent) * log_n));
    return std::max<std::size_t>(1, static_cast<std::size_t>(reps));
}

DynMcm::DynMcm(const DynamicGraph& g, McmConfig cfg, std::uint64_t seed)
    : graph_(g),
      cfg_(cfg),
      rng_(seed),
      matching_(g.vertex_count()),
      seen_(g.vertex_count(), 0),
      parent_(g.vertex_count(), kNoVertex),
      dist_(g.vertex_count(), 0),
      updates_since_search_(g.vertex_count(), 0),
      searched_(g.vertex_count(), 0) {
    cfg_.validate();
    matching_.set_journal(&journal_);
}

std::vector<MatchChange> DynMcm::drain_changes() {
    std::vector<MatchChange> out;
    out.swap(journal_);
    return out;
}

void DynMcm::rollback(std::size_t mark) {
    matching_.set_journal(nullptr);
    while (journal_.size() > mark) {
        const MatchChange c = journal_.back();
        journal_.pop_back();
        if (c.matched) {
            matching_.unmatch(c.u);
        } else {
            matching_.match_edge(c.u, c.v, c.w);
        }
    }
    matching_.set_journal(&journal_);
}

std::uint32_t DynMcm::next_stamp() {
    if (++stamp_ == 0) {
        std::fill(seen_.begin(), seen_.end(), 0);
        stamp_ = 1;
    }
    return stamp_;
}

bool DynMcm::settle(VertexId x) {
    for (const auto& nb : graph_.neighbors(x)) {
        if (matching_.is_free(nb.v)) {
            matching_.match_edge(x, nb.v, 1);
            return true;
        }
    }
    return false;
}

std::optional<VertexId> DynMcm::random_neighbor_except(VertexId x, VertexId excluded) {
    const auto nb = graph_.neighbors(x);
    if (excluded == kNoVertex) {
        return graph_.random_neighbor(x, rng_);
    }
    if (nb.size() <= 1) {
        return nb.empty() || nb[0].v == excluded ? std::nullopt : std::optional<VertexId>(nb[0].v);
    }
    const VertexId pick = nb[rng_.below(nb.size() - 1)].v;
    return pick == excluded ? nb.back().v : pick;
}

bool DynMcm::walk_once(VertexId start) {
    const std::size_t mark = journal_.size();
    VertexId x = start;
    VertexId arrived_from = kNoVertex;  // new mate of x's old partner; stepping back undoes the last swap
    for (std::size_t step = 0; step < cfg_.depth(); ++step) {
        if (cfg_.delta_settling && settle(x)) {
            return true;
        }
        const auto w = random_neighbor_except(x, arrived_from);
        if (!w) {
            break;
        }
        if (matching_.is_free(*w)) {
            matching_.match_edge(x, *w, 1);
            return true;
        }
        const VertexId previous_mate = *matching_.mate(*w);
        matching_.unmatch(*w);
        matching_.match_edge(x, *w, 1);
        arrived_from = *w;
        x = previous_mate;
    }
    if (cfg_.delta_settling && settle(x)) {
        return true;
    }
    rollback(mark);
    return false;
}

bool DynMcm::augmenting_walk(VertexId start) {
    if (matching_.is_matched(start)) {
        throw PreconditionError("augmenting walk must start at a free vertex");
    }
    for (std::size_t rep = 0; rep < cfg_.repetitions; ++rep) {
        if (walk_once(start)) {
            return true;
        }
    }
    return false;
}

bool DynMcm::bfs_augment(VertexId start) {
    if (matching_.is_matched(start)) {
        throw PreconditionError("augmenting search must start at a free vertex");
    }
    const std::size_t limit =
        cfg_.depth_bounded ? cfg_.depth() : std::numeric_limits<std::size_t>::max() / 4;
    const std::uint32_t stamp = next_stamp();
    std::deque<VertexId> queue{start};
    seen_[start] = stamp;
    dist_[start] = 0;
    parent_[start] = kNoVertex;
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        const std::size_t d = dist_[x];
        if (d + 1 > limit) {
            continue;
        }
        for (const auto& nb : graph_.neighbors(x)) {
            const VertexId y = nb.v;
            if (seen_[y] == stamp) {
                continue;
            }
            if (matching_.is_free(y)) {
                // Flip the alternating path start ... x, y.
                VertexId even = x;
                VertexId target = y;
                while (true) {
                    const auto odd = matching_.mate(even);
                    if (odd) {
                        matching_.unmatch(even);
                    }
                    matching_.match_edge(even, target, 1);
                    if (!odd) {
                        break;
                    }
                    target = *odd;
                    even = parent_[*odd];
                }
                return true;
            }
            const VertexId z = *matching_.mate(y);
            if (seen_[z] == stamp) {
                continue;
            }
            seen_[y] = stamp;
            parent_[y] = x;
            if (d + 3 <= limit) {
                seen_[z] = stamp;
                dist_[z] = d + 2;
                queue.push_back(z);
            }
        }
    }
    return false;
}

bool DynMcm::augment_from(VertexId start) {
    return cfg_.kind == McmKind::bfs ? bfs_augment(start) : augmenting_walk(start);
}

std::vector<VertexId> DynMcm::reachable_free_vertices(VertexId u) {
    std::vector<VertexId> found;
    const auto mate_u = matching_.mate(u);
    if (!mate_u) {
        return found;
    }
    const std::uint32_t stamp = next_stamp();
    seen_[u] = stamp;
    seen_[*mate_u] = stamp;
    std::deque<VertexId> queue{*mate_u};
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (const auto& nb : graph_.neighbors(x)) {
            const VertexId y = nb.v;
            if (seen_[y] == stamp) {
                continue;
            }
            seen_[y] = stamp;
            const auto z = matching_.mate(y);
            if (!z) {
                found.push_back(y);
            } else if (seen_[*z] != stamp) {
                seen_[*z] = stamp;
                queue.push_back(*z);
            }
        }
    }
    return found;
}

void DynMcm::touch(VertexId u) {
    ++updates_since_search_[u];
}

bool DynMcm::lazy_allows(VertexId u) const {
    return cfg_.lazy_threshold == 0 || !searched_[u] || updates_since_search_[u] >= cfg_.lazy_threshold;
}

void DynMcm::note_search(VertexId u) {
    searched_[u] = 1;
    updates_since_search_[u] = 0;
}

void DynMcm::handle_insert(VertexId u, VertexId v) {
    insert_impl(u, v);
    if (!keep_changes_) {
        journal_.clear();
    }
}

void DynMcm::insert_impl(VertexId u, VertexId v) {
    touch(u);
    touch(v);
    const bool u_free = matching_.is_free(u);
    const bool v_free = matching_.is_free(v);
    if (u_free && v_free) {
        matching_.match_edge(u, v, 1);
        return;
    }
    if (!u_free && !v_free) {
        if (!cfg_.safe_mode) {
            return;
        }
        // A new augmenting path must run through {u, v}; its free end on
        // u's side is reachable from u, and symmetrically for v.
        for (const VertexId side : {u, v}) {
            const auto reachable = reachable_free_vertices(side);
            if (!reachable.empty() && augment_from(reachable.front())) {
                return;
            }
        }
        return;
    }
    const VertexId matched = u_free ? v : u;
    const VertexId free = u_free ? u : v;
    const std::size_t mark = journal_.size();
    const VertexId old_mate = *matching_.mate(matched);
    matching_.unmatch(matched);
    matching_.match_edge(matched, free, 1);
    if (!augment_from(old_mate)) {
        rollback(mark);
    }
}

void DynMcm::handle_delete(VertexId u, VertexId v) {
    touch(u);
    touch(v);
    if (matching_.mate(u) == v) {
        matching_.unmatch(u);
    }
    for (const VertexId x : {u, v}) {
        if (matching_.is_free(x) && lazy_allows(x)) {
            note_search(x);
            augment_from(x);
        }
    }
    if (!keep_changes_) {
        journal_.clear();
    }
}

} // namespace dynmatch
