#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dynmatch/harness/stream.hpp"
#include "dynmatch/random.hpp"

namespace dynmatch::harness {

// Unweighted random graph families for desk-scale experiments. All return
// cleaned simple graphs with edges in generation order.

StaticGraphData gnm_graph(std::size_t n, std::size_t m, Rng& rng);

/// Points in the unit square joined when closer than the radius giving the
/// requested expected average degree.
StaticGraphData geometric_graph(std::size_t n, double avg_degree, Rng& rng);

/// Preferential attachment: each new vertex links to `per_vertex` distinct
/// earlier vertices chosen proportionally to degree.
StaticGraphData preferential_graph(std::size_t n, std::size_t per_vertex, Rng& rng);

/// Up to `m` random edges, never letting a degree exceed `max_degree`.
StaticGraphData bounded_degree_graph(std::size_t n, std::size_t m, std::size_t max_degree, Rng& rng);

/// Random bipartite graph with sides [0, left) and [left, left + right).
StaticGraphData bipartite_graph(std::size_t left, std::size_t right, std::size_t m, Rng& rng);

/// Fixed mix of the families above with n uniform in [n_min, n_max].
std::vector<StaticGraphData> desk_suite(std::size_t count, std::uint64_t seed, std::size_t n_min = 200,
                                        std::size_t n_max = 1000);

} // namespace dynmatch::harness
