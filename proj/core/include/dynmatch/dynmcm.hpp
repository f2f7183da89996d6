#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/random.hpp"

namespace dynmatch {

enum class McmKind { random_walk, bfs };

struct McmConfig {
    McmKind kind = McmKind::random_walk;
    double epsilon = 1.0;          ///< search depth ceil(2/eps - 1)
    std::size_t repetitions = 1;   ///< random-walk attempts per augmentation
    bool delta_settling = false;   ///< scan visited vertices for a free neighbor
    std::size_t lazy_threshold = 0;
    bool safe_mode = false;        ///< handle inserts between two matched vertices
    bool depth_bounded = true;

    void validate() const;
    /// Steps of a walk / edges of a BFS augmenting path.
    std::size_t depth() const;
};

/// Walk repetitions used by the cardinality guarantee: Delta^(2/eps-1) * ln n.
std::size_t maximality_walk_count(std::size_t max_degree, std::size_t n, double epsilon);

/// Dynamic maximum-cardinality matching on one (unit-weight) graph.
///
/// Failed augmentation attempts are rolled back through a match/unmatch
/// journal, so they leave the matching exactly as they found it.
///
/// The BFS search labels vertices even/odd but never contracts blossoms: it is
/// exact on bipartite graphs and may miss augmenting paths through odd cycles.
class DynMcm {
public:
    DynMcm(const DynamicGraph& g, McmConfig cfg, std::uint64_t seed);

    DynMcm(const DynMcm&) = delete;
    DynMcm& operator=(const DynMcm&) = delete;

    /// Random alternating walk from free `start`; up to cfg.repetitions attempts.
    /// Throws PreconditionError if start is matched.
    bool augmenting_walk(VertexId start);

    /// Alternating BFS from free `start`; augments along the first path found.
    /// Throws PreconditionError if start is matched.
    bool bfs_augment(VertexId start);

    /// Dispatches to the configured search kind.
    bool augment_from(VertexId start);

    /// Call after the edge was inserted into the graph.
    void handle_insert(VertexId u, VertexId v);
    /// Call after the edge was removed from the graph.
    void handle_delete(VertexId u, VertexId v);

    const MatchingState& matching() const noexcept { return matching_; }
    MatchingState& matching() noexcept { return matching_; }
    const McmConfig& config() const noexcept { return cfg_; }

    /// Net match/unmatch events since the last call (rolled-back attempts
    /// leave no trace). Only recorded across handlers while keep_changes is on.
    std::vector<MatchChange> drain_changes();
    void keep_changes(bool on) noexcept { keep_changes_ = on; }

    /// Free vertices reachable from matched `u` by an alternating path that
    /// starts with u's matched edge, in BFS order.
    std::vector<VertexId> reachable_free_vertices(VertexId u);

private:
    void insert_impl(VertexId u, VertexId v);
    bool walk_once(VertexId start);
    /// Uniform neighbor of x other than `excluded`.
    std::optional<VertexId> random_neighbor_except(VertexId x, VertexId excluded);
    bool settle(VertexId x);
    void rollback(std::size_t mark);
    bool lazy_allows(VertexId u) const;
    void note_search(VertexId u);
    void touch(VertexId u);
    std::uint32_t next_stamp();

    const DynamicGraph& graph_;
    McmConfig cfg_;
    Rng rng_;
    MatchingState matching_;
    std::vector<MatchChange> journal_;
    bool keep_changes_ = false;

    // BFS scratch, invalidated by bumping stamp_.
    std::vector<std::uint32_t> seen_;
    std::vector<VertexId> parent_;
    std::vector<std::size_t> dist_;
    std::uint32_t stamp_ = 0;

    std::vector<std::size_t> updates_since_search_;
    std::vector<unsigned char> searched_;
};

} // namespace dynmatch
