#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/dynmcm.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/oracle.hpp"

namespace dynmatch {

enum class LevelMcmKind {
    random_walk,
    bfs,
    exact,  ///< recompute a maximum matching per level with the oracle (small graphs only)
};

struct LevelConfig {
    double epsilon = 1.0;
    LevelMcmKind mcm_kind = LevelMcmKind::random_walk;
    McmConfig mcm;                 ///< kind field is overridden by mcm_kind
    /// Weights are divided by this before bucketing; must not exceed the
    /// smallest weight that will ever be inserted.
    Weight weight_scale = 1.0;
    /// Epsilon below 0.1 multiplies the level count and is refused unless set.
    bool allow_small_epsilon = false;
    oracle::OracleLimits exact_limits{64, 4096};

    void validate() const;
};

/// Highest level holding an edge of weight w: floor(log_{1+eps} w).
/// Throws InputError if w < 1.
int level_index(Weight w, double epsilon);

using VertexPair = std::pair<VertexId, VertexId>;

/// Greedy merge: take the levels from highest to lowest (the span is already
/// in that order), and within a level the pairs in ascending order; keep a
/// pair unless it touches an already kept one. Weights are read from master.
MatchingState merge_levels(const DynamicGraph& master, std::span<const std::set<VertexPair>> high_to_low);

/// Weighted matching from per-level cardinality matchings on the geometric
/// weight classes (1+eps)^i. The master graph is owned by the caller and
/// updated before each handler call.
class DynMwmLevel {
public:
    DynMwmLevel(const DynamicGraph& master, LevelConfig cfg, std::uint64_t seed);
    ~DynMwmLevel();

    DynMwmLevel(const DynMwmLevel&) = delete;
    DynMwmLevel& operator=(const DynMwmLevel&) = delete;

    void handle_insert(VertexId u, VertexId v, Weight w);
    void handle_delete(VertexId u, VertexId v);

    /// The merged output matching.
    const MatchingState& matching() const noexcept { return merged_; }

    std::size_t level_count() const noexcept { return levels_.size(); }
    const DynamicGraph& level_graph(std::size_t i) const;
    const MatchingState& level_matching(std::size_t i) const;
    const std::set<VertexPair>& level_pairs(std::size_t i) const;
    const LevelConfig& config() const noexcept { return cfg_; }

    /// Throws CorruptionError if a level matching is invalid for its level
    /// graph or the merged matching is invalid for the master graph. With
    /// `membership`, also rebuilds every level's edge set from the master
    /// graph and compares (O(m * levels)).
    void audit(bool membership = false) const;

private:
    struct Level;

    Level& ensure_level(std::size_t i);
    void sync_pairs(Level& level);
    void refresh_exact(Level& level);
    void remerge();

    const DynamicGraph& master_;
    LevelConfig cfg_;
    std::uint64_t seed_;
    std::vector<std::unique_ptr<Level>> levels_;
    MatchingState merged_;
};

} // namespace dynmatch
