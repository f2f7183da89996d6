#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dynmatch/harness/runner.hpp"

namespace dynmatch::harness {

struct PerfProfile {
    std::vector<double> taus;
    std::vector<std::string> algorithms;     ///< sorted
    std::vector<std::vector<double>> fraction;  ///< [algorithm][tau]
    std::size_t instances = 0;               ///< instances with an OPT
    std::vector<std::string> excluded;       ///< instances dropped for lack of OPT
};

/// Per algorithm and tau, the fraction of instances whose objective (the
/// geometric mean of final weights over repetitions) is at least tau * OPT.
/// An algorithm with no run on an instance counts as failing there.
PerfProfile perf_profile(std::span<const RunResult> results, std::span<const double> taus);

/// "lo:hi:step" (inclusive, rounded to the step) or a comma separated list.
std::vector<double> parse_tau_grid(std::string_view text);

/// TSV with header `tau<TAB>algo...`, one row per tau.
void write_profile(std::ostream& out, const PerfProfile& profile);

void write_results_csv(std::ostream& out, std::span<const RunResult> results, bool header = true);
std::vector<RunResult> read_results_csv(std::string_view text);

inline constexpr std::string_view kResultsHeader =
    "instance,algorithm,config,rep,seed,updates,final_weight,opt,total_seconds,mean_update_us,max_update_us,"
    "walks,successes";

} // namespace dynmatch::harness
