#pragma once

#include <cstddef>
#include <cstdint>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/matching.hpp"
#include "dynmatch/path_engine.hpp"
#include "dynmatch/random.hpp"

namespace dynmatch {

struct RandomConfig {
    double epsilon = 1.0;       ///< walk length ceil(2/eps + 3)
    std::size_t num_walks = 1;  ///< walks per campaign
    bool stop_early = false;
    std::size_t beta = 5;       ///< consecutive failures that end a campaign
    /// Use ceil(Delta^(2/eps+3) * ln n) walks per campaign instead of num_walks.
    bool theorem_mode = false;

    /// Throws InputError on eps <= 0, num_walks == 0 or beta == 0.
    void validate() const;
    std::size_t walk_length() const { return walk_length_for(epsilon); }
};

struct CampaignStats {
    std::size_t walks = 0;
    std::size_t successes = 0;

    CampaignStats& operator+=(const CampaignStats& o) {
        walks += o.walks;
        successes += o.successes;
        return *this;
    }
};

/// Walk count that the approximation guarantee asks for, saturated at 2^40.
std::size_t guarantee_walk_count(std::size_t max_degree, std::size_t n, double epsilon);

/// Dynamic weighted matching by random alternating walks plus path DP.
///
/// The graph is owned by the caller, who applies each update to it before
/// invoking the matching handler.
class DynMwmRandom {
public:
    DynMwmRandom(const DynamicGraph& g, RandomConfig cfg, std::uint64_t seed);

    /// Call after {u, v, w} has been inserted into the graph.
    void handle_insert(VertexId u, VertexId v, Weight w);

    /// Call after {u, v} has been removed from the graph.
    void handle_delete(VertexId u, VertexId v);

    /// Runs up to repetitions() walks, each seeded by `seed(path, elig)`
    /// which must build the mandatory prefix and return the node to continue
    /// from. Stops after beta consecutive failures when stop_early is set.
    template <typename SeedBuilder>
    CampaignStats run_walk_campaign(SeedBuilder&& seed);

    /// One walk anchored at `start`, followed by the path DP.
    bool anchored_walk(VertexId start);

    std::size_t repetitions() const;

    const MatchingState& matching() const noexcept { return matching_; }
    MatchingState& matching() noexcept { return matching_; }
    const RandomConfig& config() const noexcept { return cfg_; }
    const EligibilityArray& eligibility() const noexcept { return elig_; }
    const CampaignStats& totals() const noexcept { return totals_; }

private:
    bool finish_walk(VertexId current);
    void seed_insert(VertexId u, VertexId v, Weight w);

    const DynamicGraph& graph_;
    RandomConfig cfg_;
    Rng rng_;
    MatchingState matching_;
    EligibilityArray elig_;
    WalkPath path_;
    CampaignStats totals_;
};

template <typename SeedBuilder>
CampaignStats DynMwmRandom::run_walk_campaign(SeedBuilder&& seed) {
    CampaignStats stats;
    const std::size_t budget = repetitions();
    std::size_t consecutive_failures = 0;
    while (stats.walks < budget) {
        path_.clear();
        const VertexId current = seed(path_, elig_);
        const bool success = finish_walk(current);
        ++stats.walks;
        if (success) {
            ++stats.successes;
            consecutive_failures = 0;
        } else if (++consecutive_failures >= cfg_.beta && cfg_.stop_early) {
            break;
        }
    }
    totals_ += stats;
    return stats;
}

} // namespace dynmatch
