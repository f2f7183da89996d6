#pragma once

#include <cstddef>
#include <vector>

#include "dynmatch/types.hpp"

namespace dynmatch {

struct PathEdge {
    VertexId u;
    VertexId v;
    Weight w;
    bool was_matched;
};

/// A cycle-free alternating path: edges[i] joins nodes[i] and nodes[i + 1].
///
/// `visited` lists every vertex marked ineligible while the path was grown,
/// which can include a trailing vertex that was later dropped from `nodes`.
struct WalkPath {
    std::vector<VertexId> nodes;
    std::vector<PathEdge> edges;
    std::vector<VertexId> visited;

    bool empty() const noexcept { return edges.empty(); }
    std::size_t size() const noexcept { return edges.size(); }

    Weight matched_weight() const {
        Weight sum = 0;
        for (const auto& e : edges) {
            if (e.was_matched) {
                sum += e.w;
            }
        }
        return sum;
    }

    void clear() {
        nodes.clear();
        edges.clear();
        visited.clear();
    }
};

} // namespace dynmatch
