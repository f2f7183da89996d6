#include "dynmatch/dynmwm_random.hpp"

#include <algorithm>
#include <cmath>

namespace dynmatch {

void RandomConfig::validate() const {
    if (!(epsilon > 0)) {
        throw InputError("epsilon must be positive");
    }
    if (num_walks == 0) {
        throw InputError("number of walks must be at least 1");
    }
    if (beta == 0) {
        throw InputError("beta must be at least 1");
    }
}

std::size_t guarantee_walk_count(std::size_t max_degree, std::size_t n, double epsilon) {
    constexpr double kCap = 1099511627776.0;  // 2^40
    const double exponent = 2.0 / epsilon + 3.0;
    const double base = static_cast<double>(std::max<std::size_t>(max_degree, 1));
    const double log_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
    const double reps = std::min(kCap, std::ceil(std::pow(base, exponent) * log_n));
    return std::max<std::size_t>(1, static_cast<std::size_t>(reps));
}

DynMwmRandom::DynMwmRandom(const DynamicGraph& g, RandomConfig cfg, std::uint64_t seed)
    : graph_(g), cfg_(cfg), rng_(seed), matching_(g.vertex_count()), elig_(g.vertex_count()) {
    cfg_.validate();
}

std::size_t DynMwmRandom::repetitions() const {
    if (cfg_.theorem_mode) {
        return guarantee_walk_count(graph_.max_degree_seen(), graph_.vertex_count(), cfg_.epsilon);
    }
    return cfg_.num_walks;
}

bool DynMwmRandom::finish_walk(VertexId current) {
    extend_walk(graph_, matching_, path_, current, cfg_.walk_length(), elig_, rng_);
    const bool success = improve_along_path(matching_, path_);
    elig_.reset(path_.visited);
    return success;
}

bool DynMwmRandom::anchored_walk(VertexId start) {
    path_.clear();
    start_path(path_, start, elig_);
    return finish_walk(start);
}

void DynMwmRandom::seed_insert(VertexId u, VertexId v, Weight w) {
    run_walk_campaign([&](WalkPath& path, EligibilityArray& elig) -> VertexId {
        const auto mate_u = matching_.mate(u);
        const auto mate_v = matching_.mate(v);
        if (mate_u == v) {
            // An earlier walk of this campaign already matched the new edge.
            const bool flip = rng_.coin();
            const VertexId s = flip ? v : u;
            const VertexId t = flip ? u : v;
            start_path(path, s, elig);
            append_to_path(path, t, w, true, elig);
            return t;
        }
        if (!mate_u && !mate_v) {
            const bool flip = rng_.coin();
            const VertexId s = flip ? v : u;
            const VertexId t = flip ? u : v;
            start_path(path, s, elig);
            append_to_path(path, t, w, false, elig);
            return t;
        }
        if (mate_u && mate_v) {
            start_path(path, *mate_u, elig);
            append_to_path(path, u, matching_.mate_weight(u), true, elig);
            append_to_path(path, v, w, false, elig);
            append_to_path(path, *mate_v, matching_.mate_weight(v), true, elig);
            return *mate_v;
        }
        const VertexId matched = mate_u ? u : v;
        const VertexId free = mate_u ? v : u;
        start_path(path, *matching_.mate(matched), elig);
        append_to_path(path, matched, matching_.mate_weight(matched), true, elig);
        append_to_path(path, free, w, false, elig);
        return free;
    });
}

void DynMwmRandom::handle_insert(VertexId u, VertexId v, Weight w) {
    seed_insert(u, v, w);
}

void DynMwmRandom::handle_delete(VertexId u, VertexId v) {
    if (matching_.mate(u) == v) {
        matching_.unmatch(u);
    }
    for (const VertexId anchor : {u, v}) {
        run_walk_campaign([&](WalkPath& path, EligibilityArray& elig) -> VertexId {
            start_path(path, anchor, elig);
            return anchor;
        });
    }
}

} // namespace dynmatch
