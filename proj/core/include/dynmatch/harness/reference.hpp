#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/oracle.hpp"

namespace dynmatch::harness {

/// Maximum-weight matching by the O(n^3) primal-dual blossom algorithm.
/// Exact for integral weights; doubles otherwise.
oracle::ExactMatching blossom_mwm(const DynamicGraph& g);

/// Optimum weight of the current graph: the branch-and-bound oracle within
/// `limits`, the blossom solver beyond.
Weight optimum_weight(const DynamicGraph& g, const oracle::OracleLimits& limits = {});

/// Sidecar file with one `instance weight` pair per line ('#' comments).
std::unordered_map<std::string, Weight> read_opt_sidecar(const std::string& path);

} // namespace dynmatch::harness
