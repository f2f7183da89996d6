#include "dynmatch/harness/reference.hpp"

#include <sstream>

#include "dynmatch/harness/io.hpp"

namespace dynmatch::harness {

Weight optimum_weight(const DynamicGraph& g, const oracle::OracleLimits& limits) {
    if (g.vertex_count() <= limits.max_vertices && g.edge_count() <= limits.max_edges) {
        return oracle::exact_mwm(g, limits).weight;
    }
    return blossom_mwm(g).weight;
}

std::unordered_map<std::string, Weight> read_opt_sidecar(const std::string& path) {
    std::unordered_map<std::string, Weight> out;
    std::istringstream in(read_file(path));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name) || name.starts_with('#')) {
            continue;
        }
        Weight w = 0;
        if (!(fields >> w) || w < 0) {
            throw ParseError(line_no, "expected 'instance weight'");
        }
        out[name] = w;
    }
    return out;
}

} // namespace dynmatch::harness
