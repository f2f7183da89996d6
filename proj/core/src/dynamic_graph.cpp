#include "dynmatch/dynamic_graph.hpp"

#include <algorithm>
#include <string>

namespace dynmatch {

DynamicGraph::DynamicGraph(std::size_t n) : adjacency_(n), position_(n) {
    if (n >= kNoVertex) {
        throw InputError("vertex count too large");
    }
}

void DynamicGraph::throw_out_of_range(VertexId u) const {
    throw InputError("vertex " + std::to_string(u) + " out of range [0, " + std::to_string(adjacency_.size()) +
                     ")");
}

bool DynamicGraph::insert_edge(VertexId u, VertexId v, Weight w) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw InputError("self-loop on vertex " + std::to_string(u));
    }
    if (!(w > 0)) {
        throw InputError("edge weight must be positive");
    }
    auto [it, inserted] = position_[u].try_emplace(v, static_cast<std::uint32_t>(adjacency_[u].size()));
    if (!inserted) {
        return false;
    }
    adjacency_[u].push_back({v, w});
    position_[v].emplace(u, static_cast<std::uint32_t>(adjacency_[v].size()));
    adjacency_[v].push_back({u, w});
    ++edge_count_;
    max_degree_seen_ = std::max({max_degree_seen_, adjacency_[u].size(), adjacency_[v].size()});
    return true;
}

namespace {

void swap_remove(std::vector<Neighbor>& list, std::unordered_map<VertexId, std::uint32_t>& index,
                 VertexId victim) {
    const auto it = index.find(victim);
    const std::uint32_t pos = it->second;
    const Neighbor last = list.back();
    list[pos] = last;
    index[last.v] = pos;
    list.pop_back();
    index.erase(victim);
}

} // namespace

bool DynamicGraph::delete_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !position_[u].contains(v)) {
        return false;
    }
    swap_remove(adjacency_[u], position_[u], v);
    swap_remove(adjacency_[v], position_[v], u);
    --edge_count_;
    return true;
}

std::optional<VertexId> DynamicGraph::random_neighbor(VertexId u, Rng& rng) const {
    check_vertex(u);
    const auto& list = adjacency_[u];
    if (list.empty()) {
        return std::nullopt;
    }
    return list[rng.below(list.size())].v;
}

std::size_t DynamicGraph::degree(VertexId u) const {
    check_vertex(u);
    return adjacency_[u].size();
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (adjacency_[v].size() < adjacency_[u].size()) {
        std::swap(u, v);
    }
    return position_[u].contains(v);
}

Weight DynamicGraph::weight(VertexId u, VertexId v) const {
    const auto pos = position(u, v);
    if (!pos) {
        throw AbsentEdgeError("no edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
    }
    return adjacency_[u][*pos].w;
}

std::span<const Neighbor> DynamicGraph::neighbors(VertexId u) const {
    check_vertex(u);
    return adjacency_[u];
}

std::optional<std::size_t> DynamicGraph::position(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto it = position_[u].find(v);
    if (it == position_[u].end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<Edge> DynamicGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (const auto& nb : adjacency_[u]) {
            if (u < nb.v) {
                out.push_back({u, nb.v, nb.w});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    return out;
}

void DynamicGraph::check_invariants() const {
    std::size_t degree_sum = 0;
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        const auto& list = adjacency_[u];
        if (position_[u].size() != list.size()) {
            throw CorruptionError("position index size mismatch at vertex " + std::to_string(u));
        }
        if (list.size() > max_degree_seen_) {
            throw CorruptionError("max_degree_seen below degree of vertex " + std::to_string(u));
        }
        degree_sum += list.size();
        for (std::size_t i = 0; i < list.size(); ++i) {
            const VertexId v = list[i].v;
            if (v == u || v >= adjacency_.size()) {
                throw CorruptionError("invalid neighbor of vertex " + std::to_string(u));
            }
            const auto it = position_[u].find(v);
            if (it == position_[u].end() || it->second != i) {
                throw CorruptionError("position index incoherent at vertex " + std::to_string(u));
            }
            const auto back = position_[v].find(u);
            if (back == position_[v].end() || adjacency_[v][back->second].w != list[i].w) {
                throw CorruptionError("asymmetric edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
            }
        }
    }
    if (degree_sum != 2 * edge_count_) {
        throw CorruptionError("edge count does not match degree sum");
    }
}

} // namespace dynmatch
