#include "dynmatch/dynmwm_level.hpp"

#include <cmath>
#include <ranges>
#include <string>

#include "dynmatch/random.hpp"

namespace dynmatch {

void LevelConfig::validate() const {
    if (!(epsilon > 0)) {
        throw InputError("level epsilon must be positive");
    }
    if (epsilon < 0.1 && !allow_small_epsilon) {
        throw InputError("level epsilon below 0.1 needs allow_small_epsilon (level count grows as 1/eps)");
    }
    if (!(weight_scale > 0)) {
        throw InputError("weight scale must be positive");
    }
    mcm.validate();
}

int level_index(Weight w, double epsilon) {
    if (!(w >= 1)) {
        throw InputError("level_index needs a weight >= 1 (normalize first)");
    }
    if (!(epsilon > 0)) {
        throw InputError("epsilon must be positive");
    }
    const double base = 1.0 + epsilon;
    auto i = static_cast<int>(std::floor(std::log(w) / std::log1p(epsilon)));
    // Repair rounding at exact powers, e.g. w = 8, eps = 1.
    while (std::pow(base, i + 1) <= w) {
        ++i;
    }
    while (i > 0 && std::pow(base, i) > w) {
        --i;
    }
    return i;
}

namespace {

template <typename LevelRange>
void greedy_merge(MatchingState& out, const DynamicGraph& master, const LevelRange& levels_high_to_low) {
    for (const std::set<VertexPair>& pairs : levels_high_to_low) {
        for (const auto& [u, v] : pairs) {
            if (out.is_free(u) && out.is_free(v)) {
                out.match_edge(u, v, master.weight(u, v));
            }
        }
    }
}

VertexPair ordered(VertexId u, VertexId v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

} // namespace

MatchingState merge_levels(const DynamicGraph& master, std::span<const std::set<VertexPair>> high_to_low) {
    MatchingState out(master.vertex_count());
    greedy_merge(out, master, high_to_low);
    return out;
}

struct DynMwmLevel::Level {
    explicit Level(std::size_t n) : graph(n), exact(n) {}

    DynamicGraph graph;
    std::unique_ptr<DynMcm> mcm;
    MatchingState exact;
    std::set<VertexPair> pairs;

    const MatchingState& matching() const { return mcm ? mcm->matching() : exact; }
};

DynMwmLevel::DynMwmLevel(const DynamicGraph& master, LevelConfig cfg, std::uint64_t seed)
    : master_(master), cfg_(cfg), seed_(seed), merged_(master.vertex_count()) {
    cfg_.validate();
    if (cfg_.mcm_kind == LevelMcmKind::bfs) {
        cfg_.mcm.kind = McmKind::bfs;
    } else if (cfg_.mcm_kind == LevelMcmKind::random_walk) {
        cfg_.mcm.kind = McmKind::random_walk;
    }
}

DynMwmLevel::~DynMwmLevel() = default;

DynMwmLevel::Level& DynMwmLevel::ensure_level(std::size_t i) {
    while (levels_.size() <= i) {
        const std::size_t index = levels_.size();
        auto level = std::make_unique<Level>(master_.vertex_count());
        if (cfg_.mcm_kind != LevelMcmKind::exact) {
            level->mcm = std::make_unique<DynMcm>(level->graph, cfg_.mcm, Rng::derive(seed_, index));
            level->mcm->keep_changes(true);
        }
        levels_.push_back(std::move(level));
    }
    return *levels_[i];
}

const DynamicGraph& DynMwmLevel::level_graph(std::size_t i) const { return levels_.at(i)->graph; }

const MatchingState& DynMwmLevel::level_matching(std::size_t i) const { return levels_.at(i)->matching(); }

const std::set<VertexPair>& DynMwmLevel::level_pairs(std::size_t i) const { return levels_.at(i)->pairs; }

void DynMwmLevel::sync_pairs(Level& level) {
    for (const auto& c : level.mcm->drain_changes()) {
        if (c.matched) {
            level.pairs.insert(ordered(c.u, c.v));
        } else {
            level.pairs.erase(ordered(c.u, c.v));
        }
    }
}

void DynMwmLevel::refresh_exact(Level& level) {
    const auto best = oracle::exact_mcm_matching(level.graph, cfg_.exact_limits);
    level.exact.clear();
    level.pairs.clear();
    for (const auto& e : best.edges) {
        level.exact.match_edge(e.u, e.v, 1);
        level.pairs.insert(ordered(e.u, e.v));
    }
}

void DynMwmLevel::remerge() {
    merged_.clear();
    greedy_merge(merged_, master_,
                 levels_ | std::views::reverse |
                     std::views::transform([](const auto& level) -> const std::set<VertexPair>& {
                         return level->pairs;
                     }));
}

void DynMwmLevel::handle_insert(VertexId u, VertexId v, Weight w) {
    const int top = level_index(w / cfg_.weight_scale, cfg_.epsilon);
    ensure_level(static_cast<std::size_t>(top));
    for (int i = top; i >= 0; --i) {
        Level& level = *levels_[static_cast<std::size_t>(i)];
        level.graph.insert_edge(u, v, 1);
        if (level.mcm) {
            level.mcm->handle_insert(u, v);
            sync_pairs(level);
        } else {
            refresh_exact(level);
        }
    }
    remerge();
}

void DynMwmLevel::handle_delete(VertexId u, VertexId v) {
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
        Level& level = **it;
        if (!level.graph.delete_edge(u, v)) {
            continue;
        }
        if (level.mcm) {
            level.mcm->handle_delete(u, v);
            sync_pairs(level);
        } else {
            refresh_exact(level);
        }
    }
    remerge();
}

void DynMwmLevel::audit(bool membership) const {
    const auto master_edges = membership ? master_.edges() : std::vector<Edge>{};
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const Level& level = *levels_[i];
        check_matching(level.matching(), level.graph);
        if (level.pairs.size() != level.matching().cardinality()) {
            throw CorruptionError("level " + std::to_string(i) + " pair index out of sync");
        }
        for (const auto& [a, b] : level.pairs) {
            if (level.matching().mate(a) != b) {
                throw CorruptionError("level " + std::to_string(i) + " pair index out of sync");
            }
        }
        if (!membership) {
            continue;
        }
        const double threshold = std::pow(1.0 + cfg_.epsilon, static_cast<double>(i));
        std::size_t expected = 0;
        for (const auto& e : master_edges) {
            const bool member = level_index(e.w / cfg_.weight_scale, cfg_.epsilon) >= static_cast<int>(i);
            if (member != level.graph.has_edge(e.u, e.v)) {
                throw CorruptionError("level " + std::to_string(i) + " (threshold " + std::to_string(threshold) +
                                      ") membership wrong for edge {" + std::to_string(e.u) + ", " +
                                      std::to_string(e.v) + "}");
            }
            expected += member ? 1 : 0;
        }
        if (expected != level.graph.edge_count()) {
            throw CorruptionError("level " + std::to_string(i) + " holds edges absent from the master graph");
        }
    }
    check_matching(merged_, master_);
}

} // namespace dynmatch
