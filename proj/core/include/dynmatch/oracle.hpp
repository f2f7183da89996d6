#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"

namespace dynmatch::oracle {

/// Guards for the exponential searches below.
struct OracleLimits {
    std::size_t max_vertices = 20;
    std::size_t max_edges = 24;
};

struct ExactMatching {
    std::vector<Edge> edges;  ///< ascending by (u, v), u < v
    Weight weight = 0;
};

/// Maximum-weight matching by branch and bound over edge inclusion, edges
/// taken in (u, v) order with inclusion tried first. Ties resolve to the first
/// optimum met in that order. Throws LimitError beyond `limits`.
ExactMatching exact_mwm(const DynamicGraph& g, const OracleLimits& limits = {});

/// Maximum-weight matching by plain enumeration of all 2^m edge subsets.
/// Independent cross-check for exact_mwm; refuses more than 24 edges.
ExactMatching exact_mwm_enumerate(const DynamicGraph& g);

/// Maximum-cardinality matching (all weights treated as 1).
ExactMatching exact_mcm_matching(const DynamicGraph& g, const OracleLimits& limits = {});
std::size_t exact_mcm(const DynamicGraph& g, const OracleLimits& limits = {});

struct AugmentingPath {
    std::vector<VertexId> nodes;  ///< a closed path repeats its first node at the end
    std::vector<Edge> edges;      ///< edges[i] joins nodes[i], nodes[i + 1]
    std::size_t free_edges = 0;   ///< k: edges outside the matching
    Weight gain = 0;
    bool closed = false;          ///< alternating cycle of 2k edges
};

enum class PathShapes {
    open_only,
    /// Also alternating cycles. Without them a short cycle can hide an
    /// improvement that no open path with few free edges exposes, e.g. the
    /// 4-cycle M = {02: 90, 13: 5}, free {01: 87, 23: 74} with k = 3.
    open_and_closed,
};

/// Searches alternating paths P with w(M xor P) > w(M) and at most `k_max`
/// non-matching edges; returns one with the fewest non-matching edges.
/// Open paths end at a free vertex or with a matched edge, so M xor P is
/// always a matching.
std::optional<AugmentingPath> find_weight_augmenting_kpath(const DynamicGraph& g, const MatchingState& st,
                                                           std::size_t k_max, const OracleLimits& limits = {},
                                                           PathShapes shapes = PathShapes::open_and_closed);

/// Checks w(M) >= (k-1)/k * w(M*). Requires that no weight-augmenting path
/// with at most k-1 non-matching edges exists; throws PreconditionError
/// otherwise.
bool verify_short_path_bound(const DynamicGraph& g, const MatchingState& st, std::size_t k,
                         const OracleLimits& limits = {}, PathShapes shapes = PathShapes::open_and_closed);

} // namespace dynmatch::oracle
