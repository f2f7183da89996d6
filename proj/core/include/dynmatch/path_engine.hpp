#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/random.hpp"
#include "dynmatch/walk_path.hpp"

namespace dynmatch {

/// Unsuccessful neighbor draws tolerated before a walk gives up.
inline constexpr int kNeighborRetries = 5;

/// Edges per walk for a given epsilon: ceil(2/eps + 3).
std::size_t walk_length_for(double epsilon);

/// Per-vertex "may still join the current path" flags, shared by many walks.
/// Between walks every flag is true; a walk resets exactly what it marked.
class EligibilityArray {
public:
    explicit EligibilityArray(std::size_t n = 0) : eligible_(n, 1) {}

    bool eligible(VertexId u) const { return eligible_[u] != 0; }
    void mark(VertexId u) { eligible_[u] = 0; }

    void reset(std::span<const VertexId> visited) {
        for (const VertexId u : visited) {
            eligible_[u] = 1;
        }
    }

    bool all_eligible() const;
    std::size_t size() const noexcept { return eligible_.size(); }

private:
    std::vector<unsigned char> eligible_;
};

/// Appends `to` to the path over edge {path.nodes.back(), to}.
void append_to_path(WalkPath& path, VertexId to, Weight w, bool matched, EligibilityArray& elig);

/// Starts an empty path at `start`.
void start_path(WalkPath& path, VertexId start, EligibilityArray& elig);

/// Grows `path` from its last node `current` until it holds `max_len` edges
/// or no continuation exists. A matched node whose mate is eligible continues
/// over its matched edge; any other node draws up to kNeighborRetries random
/// neighbors looking for an eligible one. If the walk ends on a non-matching
/// edge into a matched vertex, that edge is dropped so that every matched edge
/// touching the path lies on it.
void extend_walk(const DynamicGraph& g, const MatchingState& st, WalkPath& path, VertexId current,
                 std::size_t max_len, EligibilityArray& elig, Rng& rng);

struct PathMatching {
    std::vector<std::size_t> selected;  ///< ascending indices into the edge list
    Weight weight = 0;
};

/// Maximum-weight matching on a chain of edges by the classic two-term
/// recurrence W[i] = max(W[i-1], w(e_i) + W[i-2]); ties keep W[i-1].
PathMatching mwm_on_path(std::span<const PathEdge> edges);

/// Replaces the matching on `path` by its optimum if that is strictly heavier.
/// Returns whether the matching changed.
bool improve_along_path(MatchingState& st, const WalkPath& path);

} // namespace dynmatch
