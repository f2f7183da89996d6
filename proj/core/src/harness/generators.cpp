#include "dynmatch/harness/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

namespace dynmatch::harness {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) {
        std::swap(u, v);
    }
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

class EdgeCollector {
public:
    explicit EdgeCollector(std::size_t n) { data_.n = n; }

    bool add(VertexId u, VertexId v) {
        if (u == v || !seen_.insert(pair_key(u, v)).second) {
            return false;
        }
        data_.edges.push_back({u, v, std::nullopt});
        return true;
    }

    std::size_t size() const { return data_.edges.size(); }
    StaticGraphData take() { return std::move(data_); }

private:
    StaticGraphData data_;
    std::unordered_set<std::uint64_t> seen_;
};

} // namespace

StaticGraphData gnm_graph(std::size_t n, std::size_t m, Rng& rng) {
    m = std::min(m, n < 2 ? 0 : n * (n - 1) / 2);
    EdgeCollector edges(n);
    while (edges.size() < m) {
        edges.add(static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)));
    }
    auto data = edges.take();
    data.name = "gnm-n" + std::to_string(n) + "-m" + std::to_string(m);
    return data;
}

StaticGraphData geometric_graph(std::size_t n, double avg_degree, Rng& rng) {
    std::vector<std::pair<double, double>> points(n);
    for (auto& p : points) {
        p = {rng.uniform(), rng.uniform()};
    }
    const double radius = std::sqrt(avg_degree / (std::numbers::pi * static_cast<double>(n)));
    const double r2 = radius * radius;
    EdgeCollector edges(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const double dx = points[u].first - points[v].first;
            const double dy = points[u].second - points[v].second;
            if (dx * dx + dy * dy < r2) {
                edges.add(u, v);
            }
        }
    }
    auto data = edges.take();
    data.name = "geo-n" + std::to_string(n);
    return data;
}

StaticGraphData preferential_graph(std::size_t n, std::size_t per_vertex, Rng& rng) {
    EdgeCollector edges(n);
    std::vector<VertexId> endpoints;  // each vertex appears once per incident edge
    const std::size_t core = std::min(n, per_vertex + 1);
    for (VertexId u = 0; u < core; ++u) {
        for (VertexId v = u + 1; v < core; ++v) {
            edges.add(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    for (auto u = static_cast<VertexId>(core); u < n; ++u) {
        std::size_t linked = 0;
        std::size_t attempts = 0;
        while (linked < per_vertex && attempts < 50 * per_vertex) {
            ++attempts;
            const VertexId target = endpoints.empty() ? static_cast<VertexId>(rng.below(u))
                                                      : endpoints[rng.below(endpoints.size())];
            if (edges.add(u, target)) {
                ++linked;
                endpoints.push_back(target);
                endpoints.push_back(u);
            }
        }
    }
    auto data = edges.take();
    data.name = "pa-n" + std::to_string(n);
    return data;
}

StaticGraphData bounded_degree_graph(std::size_t n, std::size_t m, std::size_t max_degree, Rng& rng) {
    EdgeCollector edges(n);
    std::vector<std::size_t> degree(n, 0);
    const std::size_t attempts = 50 * (m + 1);
    for (std::size_t a = 0; a < attempts && edges.size() < m && n >= 2; ++a) {
        const auto u = static_cast<VertexId>(rng.below(n));
        const auto v = static_cast<VertexId>(rng.below(n));
        if (u == v || degree[u] >= max_degree || degree[v] >= max_degree) {
            continue;
        }
        if (edges.add(u, v)) {
            ++degree[u];
            ++degree[v];
        }
    }
    auto data = edges.take();
    data.name = "bounded-n" + std::to_string(n) + "-d" + std::to_string(max_degree);
    return data;
}

StaticGraphData bipartite_graph(std::size_t left, std::size_t right, std::size_t m, Rng& rng) {
    m = std::min(m, left * right);
    EdgeCollector edges(left + right);
    while (edges.size() < m) {
        const auto u = static_cast<VertexId>(rng.below(left));
        const auto v = static_cast<VertexId>(left + rng.below(right));
        edges.add(u, v);
    }
    auto data = edges.take();
    data.name = "bip-" + std::to_string(left) + "x" + std::to_string(right);
    return data;
}

std::vector<StaticGraphData> desk_suite(std::size_t count, std::uint64_t seed, std::size_t n_min,
                                        std::size_t n_max) {
    std::vector<StaticGraphData> suite;
    suite.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(Rng::derive(seed, i));
        const auto n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(n_min),
                                                            static_cast<std::int64_t>(n_max)));
        StaticGraphData g;
        switch (i % 3) {
        case 0:
            g = gnm_graph(n, n * static_cast<std::size_t>(rng.between(2, 4)), rng);
            break;
        case 1:
            g = geometric_graph(n, static_cast<double>(rng.between(4, 8)), rng);
            break;
        default:
            g = preferential_graph(n, static_cast<std::size_t>(rng.between(2, 3)), rng);
            break;
        }
        g.name = "desk" + std::to_string(i) + "-" + g.name;
        suite.push_back(std::move(g));
    }
    return suite;
}

} // namespace dynmatch::harness
