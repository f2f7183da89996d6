#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/dynmwm_level.hpp"
#include "dynmatch/dynmwm_random.hpp"
#include "dynmatch/harness/stream.hpp"
#include "dynmatch/matching.hpp"

namespace dynmatch::harness {

enum class AlgoKind {
    random,      ///< DynMwmRandom
    level_walk,  ///< DynMwmLevel over random-walk MCM
    level_bfs,   ///< DynMwmLevel over BFS MCM
    oracle,      ///< static optimum of the final graph
};

/// Accepts the CLI names random, level-walk, level-bfs and oracle.
AlgoKind parse_algo(std::string_view name);
std::string_view algo_name(AlgoKind kind);

struct AlgoSpec {
    AlgoKind kind = AlgoKind::random;
    RandomConfig random;
    LevelConfig level;  ///< mcm_kind is taken from kind
    std::string label;  ///< defaults to algo_name(kind)

    std::string display_label() const;
    /// Compact key=value list of the settings that apply to kind.
    std::string config_string() const;
};

/// Common driver interface over the matching algorithms.
class Matcher {
public:
    virtual ~Matcher() = default;
    virtual void on_insert(VertexId u, VertexId v, Weight w) = 0;
    virtual void on_delete(VertexId u, VertexId v) = 0;
    virtual const MatchingState& matching() const = 0;
    /// Algorithm-specific consistency checks; throws CorruptionError.
    virtual void audit() const {}
    /// Called once after the last update (inside the timed region).
    virtual void finish() {}
    virtual CampaignStats walk_stats() const { return {}; }
};

std::unique_ptr<Matcher> make_matcher(const DynamicGraph& g, const AlgoSpec& spec, std::uint64_t seed);

struct ReplayOptions {
    /// Check the matching invariants after every update.
    bool audit = false;
    /// Known optimum of the final graph; computed when absent and compute_opt is set.
    std::optional<Weight> opt;
    bool compute_opt = true;
};

struct RunResult {
    std::string instance;
    std::string algorithm;
    std::string config;
    std::size_t rep = 0;
    std::uint64_t seed = 0;
    std::size_t updates = 0;
    Weight final_weight = 0;
    std::optional<Weight> opt;
    double total_seconds = 0;
    double mean_update_us = 0;
    double max_update_us = 0;
    std::size_t walks = 0;
    std::size_t successes = 0;
    std::vector<Edge> final_matching;
};

/// Replays `stream` from the empty graph. The stream is validated first
/// (ReplayError names the offending op). In audit mode an invariant violation
/// raises CorruptionError naming the op after which it was detected. Level
/// algorithms get their weight scale lowered to the smallest inserted weight
/// when that is below the configured scale.
RunResult replay(const UpdateStream& stream, const AlgoSpec& spec, std::uint64_t seed,
                 const ReplayOptions& options = {});

/// `reps` replays with seeds Rng::derive(base_seed, rep). OPT is computed once.
std::vector<RunResult> run_repetitions(const UpdateStream& stream, const AlgoSpec& spec, std::uint64_t base_seed,
                                       std::size_t reps, ReplayOptions options = {});

/// Geometric mean of non-negative values (0 if any value is 0, NaN if empty).
double geometric_mean(std::span<const double> values);

/// Final graph of a stream.
DynamicGraph final_graph(const UpdateStream& stream);

} // namespace dynmatch::harness
