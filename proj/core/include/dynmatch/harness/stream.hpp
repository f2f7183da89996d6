#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynmatch/random.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch::harness {

struct InputEdge {
    VertexId u;
    VertexId v;
    std::optional<Weight> w;
};

/// A cleaned static graph: undirected, no self-loops, no parallel edges.
struct StaticGraphData {
    std::size_t n = 0;
    std::vector<InputEdge> edges;
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;
    std::string name;
};

enum class OpKind { insert, remove };

struct UpdateOp {
    OpKind kind = OpKind::insert;
    VertexId u = 0;
    VertexId v = 0;
    Weight w = 0;  ///< insert only
    std::size_t seq = 0;

    friend bool operator==(const UpdateOp&, const UpdateOp&) = default;
};

struct Provenance {
    std::string source;
    std::uint64_t seed = 0;
    double undo_percent = 0;
};

struct UpdateStream {
    std::size_t n = 0;
    std::vector<UpdateOp> ops;
    Provenance provenance;
};

/// Inserts every edge once in a uniformly random order. Edges without a
/// weight get one uniform in {1, ..., 100}.
UpdateStream gen_insertion_stream(const StaticGraphData& data, std::uint64_t seed);

/// Appends the inverse of the last floor(x% of |ops|) operations in reverse
/// order; re-inserted edges get a fresh weight uniform in {1, ..., 100}.
UpdateStream gen_undo_suffix(UpdateStream stream, double x_percent, std::uint64_t seed);

/// Random interleaving of inserts and deletes that hovers around
/// `target_edges` edges. Weights uniform in {1, ..., 100}.
UpdateStream gen_mixed_stream(std::size_t n, std::size_t op_count, std::size_t target_edges,
                              std::uint64_t seed);

/// Replaces every insert weight with a fresh uniform draw from {1, ..., 100},
/// giving a re-insert of the same pair its own weight.
void assign_random_weights(UpdateStream& stream, std::uint64_t seed);

/// Throws ReplayError naming the first op that would violate the graph
/// preconditions when replayed from an empty graph.
void validate_stream(const UpdateStream& stream);

/// Smallest insert weight, or nullopt for a stream without inserts.
std::optional<Weight> min_insert_weight(const UpdateStream& stream);

/// Uniform integer weight in {1, ..., 100}.
inline Weight random_weight(Rng& rng) { return static_cast<Weight>(rng.between(1, 100)); }

} // namespace dynmatch::harness
