#include "dynmatch/harness/profile.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace dynmatch::harness {

namespace {

double to_double(std::string_view token, std::size_t line) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "bad number '" + std::string(token) + "'");
    }
    return value;
}

std::uint64_t to_uint(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "bad integer '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// Instance and algorithm names are written verbatim; commas would break the
// format, so they are replaced.
std::string sanitize(std::string s) {
    std::ranges::replace(s, ',', ';');
    std::ranges::replace(s, '\n', ' ');
    return s;
}

} // namespace

PerfProfile perf_profile(std::span<const RunResult> results, std::span<const double> taus) {
    std::map<std::string, std::map<std::string, std::vector<double>>> weights;  // instance -> algo -> reps
    std::map<std::string, Weight> opt;
    std::set<std::string> algorithms;
    for (const auto& r : results) {
        weights[r.instance][r.algorithm].push_back(r.final_weight);
        algorithms.insert(r.algorithm);
        if (r.opt) {
            opt[r.instance] = std::max(opt.contains(r.instance) ? opt[r.instance] : 0.0, *r.opt);
        }
    }

    PerfProfile profile;
    profile.taus.assign(taus.begin(), taus.end());
    profile.algorithms.assign(algorithms.begin(), algorithms.end());
    profile.fraction.assign(profile.algorithms.size(), std::vector<double>(taus.size(), 0.0));
    for (const auto& [instance, by_algo] : weights) {
        const auto it = opt.find(instance);
        if (it == opt.end()) {
            profile.excluded.push_back(instance);
            continue;
        }
        ++profile.instances;
        for (std::size_t a = 0; a < profile.algorithms.size(); ++a) {
            const auto found = by_algo.find(profile.algorithms[a]);
            if (found == by_algo.end()) {
                continue;
            }
            const double objective = geometric_mean(found->second);
            for (std::size_t t = 0; t < taus.size(); ++t) {
                // Relative slack absorbs rounding in the geometric mean of equal values.
                if (objective >= taus[t] * it->second * (1 - 1e-12)) {
                    profile.fraction[a][t] += 1;
                }
            }
        }
    }
    if (profile.instances > 0) {
        for (auto& row : profile.fraction) {
            for (auto& f : row) {
                f /= static_cast<double>(profile.instances);
            }
        }
    }
    return profile;
}

std::vector<double> parse_tau_grid(std::string_view text) {
    std::vector<double> taus;
    text = trim(text);
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) {
            throw InputError("tau grid must be 'lo:hi:step'");
        }
        const double lo = to_double(trim(parts[0]), 1);
        const double hi = to_double(trim(parts[1]), 1);
        const double step = to_double(trim(parts[2]), 1);
        if (!(step > 0) || lo > hi) {
            throw InputError("tau grid needs lo <= hi and a positive step");
        }
        const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
        for (std::size_t i = 0; i <= count; ++i) {
            taus.push_back(std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9);
        }
    } else {
        for (const auto part : split(text, ',')) {
            taus.push_back(to_double(trim(part), 1));
        }
    }
    for (const double t : taus) {
        if (!(t > 0 && t <= 1)) {
            throw InputError("tau values must lie in (0, 1]");
        }
    }
    return taus;
}

void write_profile(std::ostream& out, const PerfProfile& profile) {
    out << "tau";
    for (const auto& a : profile.algorithms) {
        out << '\t' << a;
    }
    out << '\n';
    for (std::size_t t = 0; t < profile.taus.size(); ++t) {
        out << profile.taus[t];
        for (const auto& row : profile.fraction) {
            out << '\t' << row[t];
        }
        out << '\n';
    }
}

void write_results_csv(std::ostream& out, std::span<const RunResult> results, bool header) {
    const auto precision = out.precision(17);
    if (header) {
        out << kResultsHeader << '\n';
    }
    for (const auto& r : results) {
        out << sanitize(r.instance) << ',' << sanitize(r.algorithm) << ',' << sanitize(r.config) << ',' << r.rep
            << ',' << r.seed << ',' << r.updates << ',' << r.final_weight << ',';
        if (r.opt) {
            out << *r.opt;
        }
        out << ',' << r.total_seconds << ',' << r.mean_update_us << ',' << r.max_update_us << ',' << r.walks << ','
            << r.successes << '\n';
    }
    out.precision(precision);
}

std::vector<RunResult> read_results_csv(std::string_view text) {
    std::vector<RunResult> out;
    std::size_t line_no = 0;
    for (const auto raw : split(text, '\n')) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line == kResultsHeader) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 13) {
            throw ParseError(line_no, "expected 13 fields, got " + std::to_string(f.size()));
        }
        RunResult r;
        r.instance = std::string(f[0]);
        r.algorithm = std::string(f[1]);
        r.config = std::string(f[2]);
        r.rep = to_uint(f[3], line_no);
        r.seed = to_uint(f[4], line_no);
        r.updates = to_uint(f[5], line_no);
        r.final_weight = to_double(f[6], line_no);
        if (!f[7].empty()) {
            r.opt = to_double(f[7], line_no);
        }
        r.total_seconds = to_double(f[8], line_no);
        r.mean_update_us = to_double(f[9], line_no);
        r.max_update_us = to_double(f[10], line_no);
        r.walks = to_uint(f[11], line_no);
        r.successes = to_uint(f[12], line_no);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace dynmatch::harness
