#include "dynmatch/path_engine.hpp"

#include <algorithm>
#include <cmath>

namespace dynmatch {

std::size_t walk_length_for(double epsilon) {
    if (!(epsilon > 0)) {
        throw InputError("epsilon must be positive");
    }
    // Absorb representation error so that e.g. eps = 1e-3 gives 2003, not 2004.
    return static_cast<std::size_t>(std::ceil(2.0 / epsilon + 3.0 - 1e-9));
}

bool EligibilityArray::all_eligible() const {
    return std::all_of(eligible_.begin(), eligible_.end(), [](unsigned char e) { return e != 0; });
}

void start_path(WalkPath& path, VertexId start, EligibilityArray& elig) {
    path.nodes.push_back(start);
    path.visited.push_back(start);
    elig.mark(start);
}

void append_to_path(WalkPath& path, VertexId to, Weight w, bool matched, EligibilityArray& elig) {
    const VertexId from = path.nodes.back();
    path.edges.push_back({from, to, w, matched});
    path.nodes.push_back(to);
    path.visited.push_back(to);
    elig.mark(to);
}

void extend_walk(const DynamicGraph& g, const MatchingState& st, WalkPath& path, VertexId current,
                 std::size_t max_len, EligibilityArray& elig, Rng& rng) {
    if (path.nodes.empty()) {
        start_path(path, current, elig);
    }
    while (path.edges.size() < max_len) {
        const auto mate = st.mate(current);
        if (mate && elig.eligible(*mate)) {
            append_to_path(path, *mate, st.mate_weight(current), true, elig);
            current = *mate;
            continue;
        }
        std::optional<VertexId> next;
        for (int attempt = 0; attempt < kNeighborRetries; ++attempt) {
            const auto candidate = g.random_neighbor(current, rng);
            if (!candidate) {
                break;
            }
            if (elig.eligible(*candidate)) {
                next = candidate;
                break;
            }
        }
        if (!next) {
            break;
        }
        append_to_path(path, *next, g.weight(current, *next), false, elig);
        current = *next;
    }
    // Ran out of budget right before a matched edge: that edge cannot join the
    // path, so the free edge leading to it has to go.
    if (!path.edges.empty() && !path.edges.back().was_matched && st.is_matched(path.nodes.back())) {
        path.edges.pop_back();
        path.nodes.pop_back();
    }
}

PathMatching mwm_on_path(std::span<const PathEdge> edges) {
    const std::size_t k = edges.size();
    PathMatching result;
    if (k == 0) {
        return result;
    }
    std::vector<Weight> best(k + 1, 0);
    std::vector<char> take(k + 1, 0);
    best[1] = edges[0].w;
    take[1] = 1;
    for (std::size_t i = 2; i <= k; ++i) {
        const Weight with = edges[i - 1].w + best[i - 2];
        if (with > best[i - 1]) {
            best[i] = with;
            take[i] = 1;
        } else {
            best[i] = best[i - 1];
        }
    }
    for (std::size_t i = k; i >= 1;) {
        if (take[i]) {
            result.selected.push_back(i - 1);
            i = i >= 2 ? i - 2 : 0;
        } else {
            --i;
        }
    }
    std::reverse(result.selected.begin(), result.selected.end());
    result.weight = best[k];
    return result;
}

bool improve_along_path(MatchingState& st, const WalkPath& path) {
    if (path.empty()) {
        return false;
    }
    const PathMatching best = mwm_on_path(path.edges);
    if (!(best.weight > path.matched_weight())) {
        return false;
    }
    st.apply_path_matching(path, best.selected);
    return true;
}

} // namespace dynmatch
