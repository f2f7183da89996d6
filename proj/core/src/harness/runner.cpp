#include "dynmatch/harness/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "dynmatch/harness/reference.hpp"

namespace dynmatch::harness {

namespace {

class RandomMatcher final : public Matcher {
public:
    RandomMatcher(const DynamicGraph& g, const RandomConfig& cfg, std::uint64_t seed) : algo_(g, cfg, seed) {}

    void on_insert(VertexId u, VertexId v, Weight w) override { algo_.handle_insert(u, v, w); }
    void on_delete(VertexId u, VertexId v) override { algo_.handle_delete(u, v); }
    const MatchingState& matching() const override { return algo_.matching(); }
    void audit() const override {
        if (!algo_.eligibility().all_eligible()) {
            throw CorruptionError("eligibility array not reset after a walk");
        }
    }
    CampaignStats walk_stats() const override { return algo_.totals(); }

private:
    DynMwmRandom algo_;
};

class LevelMatcher final : public Matcher {
public:
    LevelMatcher(const DynamicGraph& g, const LevelConfig& cfg, std::uint64_t seed) : algo_(g, cfg, seed) {}

    void on_insert(VertexId u, VertexId v, Weight w) override { algo_.handle_insert(u, v, w); }
    void on_delete(VertexId u, VertexId v) override { algo_.handle_delete(u, v); }
    const MatchingState& matching() const override { return algo_.matching(); }
    void audit() const override { algo_.audit(); }

private:
    DynMwmLevel algo_;
};

class OracleMatcher final : public Matcher {
public:
    explicit OracleMatcher(const DynamicGraph& g) : graph_(g), matching_(g.vertex_count()) {}

    void on_insert(VertexId, VertexId, Weight) override { matching_.clear(); }
    void on_delete(VertexId, VertexId) override { matching_.clear(); }
    const MatchingState& matching() const override { return matching_; }
    void finish() override {
        matching_.clear();
        for (const auto& e : blossom_mwm(graph_).edges) {
            matching_.match_edge(e.u, e.v, e.w);
        }
    }

private:
    const DynamicGraph& graph_;
    MatchingState matching_;
};

std::string describe(const UpdateOp& op) {
    return std::string(op.kind == OpKind::insert ? "insert" : "delete") + " {" + std::to_string(op.u) + ", " +
           std::to_string(op.v) + "} (op #" + std::to_string(op.seq) + ")";
}

} // namespace

AlgoKind parse_algo(std::string_view name) {
    if (name == "random") {
        return AlgoKind::random;
    }
    if (name == "level-walk") {
        return AlgoKind::level_walk;
    }
    if (name == "level-bfs") {
        return AlgoKind::level_bfs;
    }
    if (name == "oracle") {
        return AlgoKind::oracle;
    }
    throw InputError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algo_name(AlgoKind kind) {
    switch (kind) {
    case AlgoKind::random:
        return "random";
    case AlgoKind::level_walk:
        return "level-walk";
    case AlgoKind::level_bfs:
        return "level-bfs";
    case AlgoKind::oracle:
        return "oracle";
    }
    return "unknown";
}

std::string AlgoSpec::display_label() const { return label.empty() ? std::string(algo_name(kind)) : label; }

std::string AlgoSpec::config_string() const {
    std::ostringstream out;
    switch (kind) {
    case AlgoKind::random:
        out << "eps=" << random.epsilon << ";walks=" << random.num_walks << ";stop_early=" << random.stop_early
            << ";beta=" << random.beta << ";theorem=" << random.theorem_mode;
        break;
    case AlgoKind::level_walk:
    case AlgoKind::level_bfs:
        out << "eps=" << level.epsilon << ";mcm_eps=" << level.mcm.epsilon << ";mcm_reps=" << level.mcm.repetitions
            << ";settle=" << level.mcm.delta_settling << ";lazy=" << level.mcm.lazy_threshold
            << ";safe=" << level.mcm.safe_mode << ";bounded=" << level.mcm.depth_bounded;
        break;
    case AlgoKind::oracle:
        break;
    }
    return out.str();
}

std::unique_ptr<Matcher> make_matcher(const DynamicGraph& g, const AlgoSpec& spec, std::uint64_t seed) {
    switch (spec.kind) {
    case AlgoKind::random:
        return std::make_unique<RandomMatcher>(g, spec.random, seed);
    case AlgoKind::level_walk:
    case AlgoKind::level_bfs: {
        LevelConfig cfg = spec.level;
        cfg.mcm_kind = spec.kind == AlgoKind::level_walk ? LevelMcmKind::random_walk : LevelMcmKind::bfs;
        return std::make_unique<LevelMatcher>(g, cfg, seed);
    }
    case AlgoKind::oracle:
        return std::make_unique<OracleMatcher>(g);
    }
    throw InputError("unknown algorithm");
}

DynamicGraph final_graph(const UpdateStream& stream) {
    DynamicGraph g(stream.n);
    for (const auto& op : stream.ops) {
        if (op.kind == OpKind::insert) {
            g.insert_edge(op.u, op.v, op.w);
        } else {
            g.delete_edge(op.u, op.v);
        }
    }
    return g;
}

RunResult replay(const UpdateStream& stream, const AlgoSpec& spec, std::uint64_t seed, const ReplayOptions& options) {
    validate_stream(stream);

    AlgoSpec effective = spec;
    if (effective.kind == AlgoKind::level_walk || effective.kind == AlgoKind::level_bfs) {
        if (const auto lightest = min_insert_weight(stream); lightest && *lightest < effective.level.weight_scale) {
            effective.level.weight_scale = *lightest;
        }
    }

    DynamicGraph g(stream.n);
    auto matcher = make_matcher(g, effective, seed);

    using Clock = std::chrono::steady_clock;
    double total = 0;
    double worst = 0;
    for (std::size_t i = 0; i < stream.ops.size(); ++i) {
        const auto& op = stream.ops[i];
        const auto start = Clock::now();
        if (op.kind == OpKind::insert) {
            g.insert_edge(op.u, op.v, op.w);
            matcher->on_insert(op.u, op.v, op.w);
        } else {
            g.delete_edge(op.u, op.v);
            matcher->on_delete(op.u, op.v);
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        total += elapsed;
        worst = std::max(worst, elapsed);
        if (options.audit) {
            try {
                check_matching(matcher->matching(), g);
                matcher->audit();
            } catch (const CorruptionError& e) {
                throw CorruptionError("after " + describe(op) + ": " + e.what());
            }
        }
    }
    const auto start = Clock::now();
    matcher->finish();
    total += std::chrono::duration<double>(Clock::now() - start).count();
    if (options.audit) {
        check_matching(matcher->matching(), g);
    }

    RunResult r;
    r.instance = stream.provenance.source;
    r.algorithm = spec.display_label();
    r.config = spec.config_string();
    r.seed = seed;
    r.updates = stream.ops.size();
    r.final_weight = matcher->matching().total_weight();
    r.total_seconds = total;
    r.mean_update_us = stream.ops.empty() ? 0 : total * 1e6 / static_cast<double>(stream.ops.size());
    r.max_update_us = worst * 1e6;
    const auto stats = matcher->walk_stats();
    r.walks = stats.walks;
    r.successes = stats.successes;
    r.final_matching = matcher->matching().matched_edges();
    if (options.opt) {
        r.opt = options.opt;
    } else if (options.compute_opt) {
        r.opt = optimum_weight(g);
    }
    return r;
}

std::vector<RunResult> run_repetitions(const UpdateStream& stream, const AlgoSpec& spec, std::uint64_t base_seed,
                                       std::size_t reps, ReplayOptions options) {
    if (!options.opt && options.compute_opt) {
        validate_stream(stream);
        options.opt = optimum_weight(final_graph(stream));
    }
    std::vector<RunResult> out;
    out.reserve(reps);
    for (std::size_t rep = 0; rep < reps; ++rep) {
        auto r = replay(stream, spec, Rng::derive(base_seed, rep), options);
        r.rep = rep;
        out.push_back(std::move(r));
    }
    return out;
}

double geometric_mean(std::span<const double> values) {
    if (values.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    // Running product kept as mantissa * 2^exponent so it neither overflows
    // nor underflows.
    double mantissa = 1;
    long long exponent = 0;
    for (const double v : values) {
        if (v < 0) {
            throw InputError("geometric mean of a negative value");
        }
        if (v == 0) {
            return 0;
        }
        int e = 0;
        mantissa = std::frexp(mantissa * v, &e);
        exponent += e;
    }
    const double n = static_cast<double>(values.size());
    return std::pow(mantissa, 1 / n) * std::exp2(static_cast<double>(exponent) / n);
}

} // namespace dynmatch::harness
