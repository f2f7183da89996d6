#include "dynmatch/matching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dynmatch {

MatchingState::MatchingState(std::size_t n) : mate_(n, kNoVertex), mate_weight_(n, 0) {}

Weight MatchingState::mate_weight(VertexId u) const {
    if (is_free(u)) {
        throw PreconditionError("vertex " + std::to_string(u) + " is free");
    }
    return mate_weight_[u];
}

void MatchingState::match_edge(VertexId u, VertexId v, Weight w) {
    if (u == v) {
        throw PreconditionError("cannot match vertex " + std::to_string(u) + " with itself");
    }
    if (is_matched(u) || is_matched(v)) {
        throw PreconditionError("cannot match {" + std::to_string(u) + ", " + std::to_string(v) +
                                "}: endpoint already matched");
    }
    mate_[u] = v;
    mate_[v] = u;
    mate_weight_[u] = w;
    mate_weight_[v] = w;
    total_weight_ += w;
    ++cardinality_;
    if (journal_) {
        journal_->push_back({u, v, w, true});
    }
}

Weight MatchingState::unmatch(VertexId u) {
    const VertexId v = mate_.at(u);
    if (v == kNoVertex) {
        throw PreconditionError("cannot unmatch free vertex " + std::to_string(u));
    }
    const Weight w = mate_weight_[u];
    mate_[u] = kNoVertex;
    mate_[v] = kNoVertex;
    mate_weight_[u] = 0;
    mate_weight_[v] = 0;
    total_weight_ -= w;
    --cardinality_;
    if (cardinality_ == 0) {
        total_weight_ = 0;
    }
    if (journal_) {
        journal_->push_back({u, v, w, false});
    }
    return w;
}

void MatchingState::apply_path_matching(const WalkPath& path, std::span<const std::size_t> selected) {
    const std::size_t k = path.edges.size();
    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (selected[i] >= k) {
            throw PreconditionError("selected edge index out of range");
        }
        if (i > 0 && selected[i] <= selected[i - 1] + 1) {
            throw PreconditionError("selected path edges are not independent");
        }
    }
    for (const auto& e : path.edges) {
        if (e.was_matched != (mate_.at(e.u) == e.v)) {
            throw PreconditionError("path matched flags are stale");
        }
    }
    // A selected endpoint must be free or about to be freed by the path.
    const auto freed = [&](VertexId x) {
        return std::ranges::any_of(path.edges, [x](const PathEdge& e) { return e.was_matched && (e.u == x || e.v == x); });
    };
    for (const std::size_t i : selected) {
        const auto& e = path.edges[i];
        if ((is_matched(e.u) && !freed(e.u)) || (is_matched(e.v) && !freed(e.v))) {
            throw PreconditionError("selected path edge touches a matched edge off the path");
        }
    }
    for (const auto& e : path.edges) {
        if (e.was_matched) {
            unmatch(e.u);
        }
    }
    for (const std::size_t i : selected) {
        const auto& e = path.edges[i];
        match_edge(e.u, e.v, e.w);
    }
}

std::vector<Edge> MatchingState::matched_edges() const {
    std::vector<Edge> out;
    out.reserve(cardinality_);
    for (VertexId u = 0; u < mate_.size(); ++u) {
        if (mate_[u] != kNoVertex && u < mate_[u]) {
            out.push_back({u, mate_[u], mate_weight_[u]});
        }
    }
    return out;
}

void MatchingState::clear() {
    std::fill(mate_.begin(), mate_.end(), kNoVertex);
    std::fill(mate_weight_.begin(), mate_weight_.end(), 0);
    total_weight_ = 0;
    cardinality_ = 0;
}

namespace {

// Weight of edge {u, v} or nullopt, with a single hash lookup.
std::optional<Weight> edge_weight(const DynamicGraph& g, VertexId u, VertexId v) {
    const auto pos = g.position(u, v);
    if (!pos) {
        return std::nullopt;
    }
    return g.neighbors(u)[*pos].w;
}

} // namespace

Weight matching_weight_recompute(const MatchingState& st, const DynamicGraph& g) {
    if (st.vertex_count() != g.vertex_count()) {
        throw CorruptionError("matching and graph vertex counts differ");
    }
    Weight sum = 0;
    for (const auto& e : st.matched_edges()) {
        const auto w = edge_weight(g, e.u, e.v);
        if (!w) {
            throw CorruptionError("matched pair {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  "} is not an edge");
        }
        sum += *w;
    }
    return sum;
}

void check_matching(const MatchingState& st, const DynamicGraph& g) {
    const std::size_t n = st.vertex_count();
    if (n != g.vertex_count()) {
        throw CorruptionError("matching and graph vertex counts differ");
    }
    std::size_t pairs = 0;
    Weight recomputed = 0;
    for (VertexId u = 0; u < n; ++u) {
        const auto m = st.mate(u);
        if (!m) {
            continue;
        }
        if (*m >= n || *m == u || st.mate(*m) != u) {
            throw CorruptionError("mate symmetry broken at vertex " + std::to_string(u));
        }
        if (u > *m) {
            continue;
        }
        ++pairs;
        const auto w = edge_weight(g, u, *m);
        if (!w) {
            throw CorruptionError("matched pair {" + std::to_string(u) + ", " + std::to_string(*m) +
                                  "} is not an edge");
        }
        if (*w != st.mate_weight(u) || *w != st.mate_weight(*m)) {
            throw CorruptionError("stored weight differs from graph weight at vertex " + std::to_string(u));
        }
        recomputed += *w;
    }
    if (pairs != st.cardinality()) {
        throw CorruptionError("cardinality counter out of sync");
    }
    if (std::abs(recomputed - st.total_weight()) > 1e-9 * std::max<Weight>(1, std::abs(recomputed))) {
        throw CorruptionError("maintained weight " + std::to_string(st.total_weight()) +
                              " differs from recomputed " + std::to_string(recomputed));
    }
}

} // namespace dynmatch
