#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dynmatch/random.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

struct Neighbor {
    VertexId v;
    Weight w;
};

/// Undirected weighted simple graph on a fixed vertex set.
///
/// Each vertex u keeps its neighbors in a vector L_u plus a hash index
/// H_u : neighbor -> position in L_u. Insertion appends, deletion swaps the
/// victim with the last element and pops, so both run in expected O(1), and a
/// uniformly random neighbor is a single index draw.
class DynamicGraph {
public:
    explicit DynamicGraph(std::size_t n = 0);

    /// Returns false (and leaves the graph untouched) if the edge exists.
    /// Throws InputError on self-loops, out-of-range ids or w <= 0.
    bool insert_edge(VertexId u, VertexId v, Weight w);

    /// Returns false if the edge is absent. Throws InputError on bad ids.
    bool delete_edge(VertexId u, VertexId v);

    std::optional<VertexId> random_neighbor(VertexId u, Rng& rng) const;

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t max_degree_seen() const noexcept { return max_degree_seen_; }

    std::size_t degree(VertexId u) const;
    bool has_edge(VertexId u, VertexId v) const;

    /// Throws AbsentEdgeError if {u, v} is not an edge.
    Weight weight(VertexId u, VertexId v) const;

    std::span<const Neighbor> neighbors(VertexId u) const;

    /// H_u(v), or nullopt if v is not a neighbor of u.
    std::optional<std::size_t> position(VertexId u, VertexId v) const;

    /// All edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Throws CorruptionError if symmetry, position coherence or counters
    /// are violated. O(n + m).
    void check_invariants() const;

private:
    void check_vertex(VertexId u) const {
        if (u >= adjacency_.size()) [[unlikely]] {
            throw_out_of_range(u);
        }
    }
    [[noreturn]] void throw_out_of_range(VertexId u) const;

    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<std::unordered_map<VertexId, std::uint32_t>> position_;
    std::size_t edge_count_ = 0;
    std::size_t max_degree_seen_ = 0;
};

} // namespace dynmatch
