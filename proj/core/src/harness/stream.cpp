#include "dynmatch/harness/stream.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "dynmatch/dynamic_graph.hpp"

namespace dynmatch::harness {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
    if (u > v) {
        std::swap(u, v);
    }
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::string describe(const UpdateOp& op) {
    return std::string(op.kind == OpKind::insert ? "insert" : "delete") + " {" + std::to_string(op.u) + ", " +
           std::to_string(op.v) + "} (op #" + std::to_string(op.seq) + ")";
}

} // namespace

UpdateStream gen_insertion_stream(const StaticGraphData& data, std::uint64_t seed) {
    Rng rng(seed);
    UpdateStream stream;
    stream.n = data.n;
    stream.provenance = {data.name, seed, 0};
    stream.ops.reserve(data.edges.size());
    for (const auto& e : data.edges) {
        const Weight w = e.w ? *e.w : random_weight(rng);
        stream.ops.push_back({OpKind::insert, e.u, e.v, w, 0});
    }
    shuffle(stream.ops, rng);
    for (std::size_t i = 0; i < stream.ops.size(); ++i) {
        stream.ops[i].seq = i;
    }
    return stream;
}

UpdateStream gen_undo_suffix(UpdateStream stream, double x_percent, std::uint64_t seed) {
    if (!(x_percent >= 0 && x_percent <= 100)) {
        throw InputError("undo percentage must lie in [0, 100]");
    }
    Rng rng(seed);
    const std::size_t size = stream.ops.size();
    const auto count =
        std::min(size, static_cast<std::size_t>(static_cast<double>(size) * x_percent / 100.0 + 1e-9));
    stream.ops.reserve(size + count);
    for (std::size_t i = 0; i < count; ++i) {
        const UpdateOp original = stream.ops[size - 1 - i];
        UpdateOp inverse{};
        inverse.u = original.u;
        inverse.v = original.v;
        inverse.seq = size + i;
        if (original.kind == OpKind::insert) {
            inverse.kind = OpKind::remove;
        } else {
            inverse.kind = OpKind::insert;
            inverse.w = random_weight(rng);
        }
        stream.ops.push_back(inverse);
    }
    stream.provenance.undo_percent = x_percent;
    return stream;
}

UpdateStream gen_mixed_stream(std::size_t n, std::size_t op_count, std::size_t target_edges, std::uint64_t seed) {
    if (n < 2) {
        throw InputError("mixed stream needs at least two vertices");
    }
    const std::size_t max_edges = n * (n - 1) / 2;
    target_edges = std::min(target_edges, max_edges);
    Rng rng(seed);
    UpdateStream stream;
    stream.n = n;
    stream.provenance = {"mixed", seed, 0};
    stream.ops.reserve(op_count);
    std::vector<std::pair<VertexId, VertexId>> present;
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < op_count; ++i) {
        const double insert_bias = present.size() < target_edges ? 0.7 : 0.3;
        const bool insert = present.empty() || (present.size() < max_edges && rng.uniform() < insert_bias);
        if (insert) {
            VertexId u = 0;
            VertexId v = 0;
            do {
                u = static_cast<VertexId>(rng.below(n));
                v = static_cast<VertexId>(rng.below(n));
            } while (u == v || index.contains(pair_key(u, v)));
            index.emplace(pair_key(u, v), present.size());
            present.emplace_back(u, v);
            stream.ops.push_back({OpKind::insert, u, v, random_weight(rng), i});
        } else {
            const std::size_t pos = rng.below(present.size());
            const auto [u, v] = present[pos];
            index[pair_key(present.back().first, present.back().second)] = pos;
            present[pos] = present.back();
            present.pop_back();
            index.erase(pair_key(u, v));
            stream.ops.push_back({OpKind::remove, u, v, 0, i});
        }
    }
    return stream;
}

void assign_random_weights(UpdateStream& stream, std::uint64_t seed) {
    Rng rng(seed);
    for (auto& op : stream.ops) {
        if (op.kind == OpKind::insert) {
            op.w = random_weight(rng);
        }
    }
}

void validate_stream(const UpdateStream& stream) {
    DynamicGraph g(stream.n);
    for (const auto& op : stream.ops) {
        if (op.u >= stream.n || op.v >= stream.n || op.u == op.v) {
            throw ReplayError("invalid endpoints in " + describe(op));
        }
        if (op.kind == OpKind::insert) {
            if (!(op.w > 0)) {
                throw ReplayError("non-positive weight in " + describe(op));
            }
            if (!g.insert_edge(op.u, op.v, op.w)) {
                throw ReplayError("edge already present: " + describe(op));
            }
        } else if (!g.delete_edge(op.u, op.v)) {
            throw ReplayError("edge absent: " + describe(op));
        }
    }
}

std::optional<Weight> min_insert_weight(const UpdateStream& stream) {
    std::optional<Weight> best;
    for (const auto& op : stream.ops) {
        if (op.kind == OpKind::insert && (!best || op.w < *best)) {
            best = op.w;
        }
    }
    return best;
}

} // namespace dynmatch::harness
