// dynmatch: replay update streams through the dynamic matching algorithms,
// generate streams, and build performance profiles from result files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dynmatch/harness/generators.hpp"
#include "dynmatch/harness/io.hpp"
#include "dynmatch/harness/profile.hpp"
#include "dynmatch/harness/reference.hpp"
#include "dynmatch/harness/runner.hpp"

namespace dh = dynmatch::harness;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DYNMATCH_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed DYNMATCH_SEED '" << env << "'\n";
        }
    }
    return 1;
}

struct RunOptions {
    std::string algo = "random";
    std::string input;
    std::string temporal;
    std::string name;
    std::uint64_t seed = 1;
    std::size_t reps = 10;
    double undo_percent = 0;
    bool audit = false;
    bool random_weights = false;
    std::string results;
    std::string opt_file;
    std::string label;

    double epsilon = 1.0;
    std::size_t walks = 1;
    bool stop_early = false;
    std::size_t beta = 5;
    bool theorem_mode = false;

    double level_epsilon = 1.0;
    std::string mcm;
    double mcm_epsilon = 1.0;
    std::size_t mcm_reps = 1;
    bool delta_settling = false;
    std::size_t lazy_threshold = 0;
    bool safe = false;
    bool unbounded = false;
    bool allow_small_epsilon = false;
};

struct GenOptions {
    std::string input;
    std::string out;
    std::uint64_t seed = 1;
    double undo_percent = 0;
    std::size_t mixed_n = 0;
    std::size_t mixed_ops = 0;
    std::size_t mixed_edges = 0;
};

struct ProfileOptions {
    std::string results;
    std::string tau_grid = "0.80:1.00:0.005";
    std::string out;
};

dh::UpdateStream load_stream(const RunOptions& o) {
    dh::UpdateStream stream;
    if (!o.temporal.empty()) {
        auto data = dh::parse_temporal(dh::read_file(o.temporal));
        if (data.dropped_self_loops + data.dropped_duplicates + data.dropped_absent > 0) {
            std::cerr << "note: dropped " << data.dropped_self_loops << " self-loops, " << data.dropped_duplicates
                      << " duplicate inserts, " << data.dropped_absent << " deletes of absent edges\n";
        }
        stream = std::move(data.stream);
        if (!data.weighted || o.random_weights) {
            dh::assign_random_weights(stream, o.seed);
        }
        stream.provenance.source = o.temporal;
        stream.provenance.seed = o.seed;
    } else {
        auto data = dh::parse_static_edgelist(dh::read_file(o.input));
        if (data.dropped_self_loops + data.dropped_duplicates > 0) {
            std::cerr << "note: dropped " << data.dropped_self_loops << " self-loops, " << data.dropped_duplicates
                      << " duplicate edges\n";
        }
        if (o.random_weights) {
            for (auto& e : data.edges) {
                e.w.reset();
            }
        }
        data.name = o.input;
        stream = dh::gen_insertion_stream(data, o.seed);
    }
    if (o.undo_percent > 0) {
        stream = dh::gen_undo_suffix(std::move(stream), o.undo_percent, dynmatch::Rng::derive(o.seed, 0x756e646f));
    }
    if (!o.name.empty()) {
        stream.provenance.source = o.name;
    }
    return stream;
}

dh::AlgoSpec make_spec(const RunOptions& o) {
    dh::AlgoSpec spec;
    std::string algo = o.algo;
    if (algo == "level") {
        algo = o.mcm == "bfs" ? "level-bfs" : "level-walk";
    } else if (!o.mcm.empty() && algo != "level-" + o.mcm) {
        throw dynmatch::InputError("--mcm " + o.mcm + " conflicts with --algo " + algo);
    }
    spec.kind = dh::parse_algo(algo);
    spec.label = o.label;
    spec.random.epsilon = o.epsilon;
    spec.random.num_walks = o.walks;
    spec.random.stop_early = o.stop_early;
    spec.random.beta = o.beta;
    spec.random.theorem_mode = o.theorem_mode;
    spec.random.validate();
    spec.level.epsilon = o.level_epsilon;
    spec.level.allow_small_epsilon = o.allow_small_epsilon;
    spec.level.mcm.epsilon = o.mcm_epsilon;
    spec.level.mcm.repetitions = o.mcm_reps;
    spec.level.mcm.delta_settling = o.delta_settling;
    spec.level.mcm.lazy_threshold = o.lazy_threshold;
    spec.level.mcm.safe_mode = o.safe;
    spec.level.mcm.depth_bounded = !o.unbounded;
    spec.level.validate();
    return spec;
}

int run_command(const RunOptions& o) {
    const auto stream = load_stream(o);
    const auto spec = make_spec(o);

    dh::ReplayOptions replay;
    replay.audit = o.audit;
    if (!o.opt_file.empty()) {
        const auto table = dh::read_opt_sidecar(o.opt_file);
        if (const auto it = table.find(stream.provenance.source); it != table.end()) {
            replay.opt = it->second;
        } else {
            std::cerr << "warning: no OPT for '" << stream.provenance.source << "' in " << o.opt_file << '\n';
        }
    }

    const auto results = dh::run_repetitions(stream, spec, o.seed, o.reps, replay);
    std::vector<double> weights;
    double time = 0;
    for (const auto& r : results) {
        weights.push_back(r.final_weight);
        time += r.total_seconds;
    }
    std::cout << "instance " << stream.provenance.source << "  algo " << spec.display_label() << "  updates "
              << stream.ops.size() << "  reps " << results.size() << '\n';
    std::cout << "geomean weight " << dh::geometric_mean(weights);
    if (!results.empty() && results.front().opt) {
        std::cout << "  opt " << *results.front().opt;
        if (*results.front().opt > 0) {
            std::cout << "  ratio " << dh::geometric_mean(weights) / *results.front().opt;
        }
    }
    std::cout << "  mean time/rep " << (results.empty() ? 0 : time / static_cast<double>(results.size())) << " s\n";

    if (!o.results.empty()) {
        std::ifstream probe(o.results);
        const bool fresh = !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
        probe.close();
        std::ofstream out(o.results, std::ios::app);
        if (!out) {
            throw dynmatch::InputError("cannot write '" + o.results + "'");
        }
        dh::write_results_csv(out, results, fresh);
    }
    return 0;
}

int gen_command(const GenOptions& o) {
    dh::UpdateStream stream;
    if (o.mixed_n > 0) {
        stream = dh::gen_mixed_stream(o.mixed_n, o.mixed_ops, o.mixed_edges, o.seed);
    } else {
        auto data = dh::parse_static_edgelist(dh::read_file(o.input));
        data.name = o.input;
        stream = dh::gen_insertion_stream(data, o.seed);
    }
    if (o.undo_percent > 0) {
        stream = dh::gen_undo_suffix(std::move(stream), o.undo_percent, dynmatch::Rng::derive(o.seed, 0x756e646f));
    }
    if (o.out.empty() || o.out == "-") {
        dh::write_stream(std::cout, stream);
    } else {
        std::ofstream out(o.out);
        if (!out) {
            throw dynmatch::InputError("cannot write '" + o.out + "'");
        }
        dh::write_stream(out, stream);
    }
    return 0;
}

int profile_command(const ProfileOptions& o) {
    const auto results = dh::read_results_csv(dh::read_file(o.results));
    const auto taus = dh::parse_tau_grid(o.tau_grid);
    const auto profile = dh::perf_profile(results, taus);
    for (const auto& name : profile.excluded) {
        std::cerr << "warning: instance '" << name << "' has no OPT and is excluded\n";
    }
    if (o.out.empty() || o.out == "-") {
        dh::write_profile(std::cout, profile);
    } else {
        std::ofstream out(o.out);
        if (!out) {
            throw dynmatch::InputError("cannot write '" + o.out + "'");
        }
        dh::write_profile(out, profile);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fully dynamic weighted matching experiments"};
    app.require_subcommand(1);

    RunOptions run;
    run.seed = default_seed();
    auto* run_cmd = app.add_subcommand("run", "Replay a graph or update stream through an algorithm");
    auto* input_opt = run_cmd->add_option("--input", run.input, "Static edge list (inserted in random order)");
    auto* temporal_opt = run_cmd->add_option("--temporal", run.temporal, "Temporal edge stream");
    input_opt->excludes(temporal_opt);
    run_cmd->add_option("--algo", run.algo, "random | level | level-walk | level-bfs | oracle")
        ->check(CLI::IsMember({"random", "level", "level-walk", "level-bfs", "oracle"}));
    run_cmd->add_option("--seed", run.seed, "Base seed (default: $DYNMATCH_SEED or 1)");
    run_cmd->add_option("--reps", run.reps, "Repetitions")->check(CLI::PositiveNumber);
    run_cmd->add_option("--undo-percent", run.undo_percent, "Undo the last x% of updates")
        ->check(CLI::Range(0.0, 100.0));
    run_cmd->add_flag("--audit", run.audit, "Check matching invariants after every update");
    run_cmd->add_flag("--random-weights", run.random_weights, "Replace input weights with uniform {1..100}");
    run_cmd->add_option("--name", run.name, "Instance name for results and OPT lookup");
    run_cmd->add_option("--label", run.label, "Algorithm label for results");
    run_cmd->add_option("--results", run.results, "Append per-repetition rows to this CSV");
    run_cmd->add_option("--opt-file", run.opt_file, "Sidecar file of precomputed optima");
    run_cmd->add_option("--epsilon", run.epsilon, "Random walk epsilon")->check(CLI::PositiveNumber);
    run_cmd->add_option("--walks", run.walks, "Walks per campaign")->check(CLI::PositiveNumber);
    run_cmd->add_flag("--stop-early", run.stop_early, "Stop a campaign after beta consecutive failures");
    run_cmd->add_option("--beta", run.beta, "Stop-early failure budget")->check(CLI::PositiveNumber);
    run_cmd->add_flag("--theorem-mode", run.theorem_mode, "Use the worst-case walk count");
    run_cmd->add_option("--level-epsilon", run.level_epsilon, "Level bucketing epsilon")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--mcm", run.mcm, "Per-level MCM search for --algo level (default walk)")
        ->check(CLI::IsMember({"walk", "bfs"}));
    run_cmd->add_option("--mcm-epsilon", run.mcm_epsilon, "Per-level MCM epsilon")->check(CLI::PositiveNumber);
    run_cmd->add_option("--mcm-reps", run.mcm_reps, "Per-level MCM walk repetitions")->check(CLI::PositiveNumber);
    run_cmd->add_flag("--delta-settling", run.delta_settling, "Scan visited vertices for free partners");
    run_cmd->add_option("--lazy-threshold", run.lazy_threshold, "Skip delete repairs below this many searches");
    run_cmd->add_flag("--safe", run.safe, "Also search when both endpoints of an insert are matched");
    run_cmd->add_flag("--unbounded", run.unbounded, "Do not bound the BFS search depth");
    run_cmd->add_flag("--allow-small-epsilon", run.allow_small_epsilon, "Permit level epsilon below 0.1");
    run_cmd->callback([&] {
        if (run.input.empty() && run.temporal.empty()) {
            throw CLI::ValidationError("run", "one of --input or --temporal is required");
        }
    });

    GenOptions gen;
    gen.seed = default_seed();
    auto* gen_cmd = app.add_subcommand("gen", "Write an update stream");
    gen_cmd->add_option("--input", gen.input, "Static edge list");
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
    gen_cmd->add_option("--seed", gen.seed, "Seed");
    gen_cmd->add_option("--undo-percent", gen.undo_percent, "Undo suffix percentage")->check(CLI::Range(0.0, 100.0));
    gen_cmd->add_option("--mixed-n", gen.mixed_n, "Generate a mixed insert/delete stream on this many vertices");
    gen_cmd->add_option("--mixed-ops", gen.mixed_ops, "Operations in the mixed stream");
    gen_cmd->add_option("--mixed-edges", gen.mixed_edges, "Target edge count of the mixed stream");
    gen_cmd->callback([&] {
        if (gen.input.empty() && gen.mixed_n == 0) {
            throw CLI::ValidationError("gen", "one of --input or --mixed-n is required");
        }
    });

    ProfileOptions profile;
    auto* profile_cmd = app.add_subcommand("profile", "Performance profile from a results CSV");
    profile_cmd->add_option("--results", profile.results, "Results CSV")->required();
    profile_cmd->add_option("--tau-grid", profile.tau_grid, "lo:hi:step or comma list");
    profile_cmd->add_option("--out", profile.out, "Output TSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            return run_command(run);
        }
        if (gen_cmd->parsed()) {
            return gen_command(gen);
        }
        if (profile_cmd->parsed()) {
            return profile_command(profile);
        }
    } catch (const dynmatch::CorruptionError& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const dynmatch::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
