#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dynmatch/dynamic_graph.hpp"
#include "dynmatch/types.hpp"
#include "dynmatch/walk_path.hpp"

namespace dynmatch {

/// One match or unmatch event, as recorded into an attached journal.
struct MatchChange {
    VertexId u;
    VertexId v;
    Weight w;
    bool matched;
};

/// Mate assignment plus the maintained total weight.
///
/// The weight of each matched edge is stored with the mate so that a matched
/// edge can be unmatched after it has already been removed from the graph.
class MatchingState {
public:
    explicit MatchingState(std::size_t n = 0);

    std::size_t vertex_count() const noexcept { return mate_.size(); }

    std::optional<VertexId> mate(VertexId u) const {
        const VertexId m = mate_.at(u);
        return m == kNoVertex ? std::nullopt : std::optional<VertexId>(m);
    }
    bool is_matched(VertexId u) const { return mate_.at(u) != kNoVertex; }
    bool is_free(VertexId u) const { return mate_.at(u) == kNoVertex; }

    /// Weight of the matched edge at u. Throws PreconditionError if u is free.
    Weight mate_weight(VertexId u) const;

    Weight total_weight() const noexcept { return total_weight_; }
    std::size_t cardinality() const noexcept { return cardinality_; }

    /// Throws PreconditionError unless u != v and both endpoints are free.
    void match_edge(VertexId u, VertexId v, Weight w);

    /// Unmatches u and its mate; returns the weight removed.
    /// Throws PreconditionError if u is free.
    Weight unmatch(VertexId u);

    /// Replaces the matching on `path` with the selected edges (indices into
    /// path.edges). Throws PreconditionError, before mutating anything, if the
    /// selection is not independent or the path's matched flags are stale.
    void apply_path_matching(const WalkPath& path, std::span<const std::size_t> selected);

    /// Matched edges with u < v, ascending by (u, v).
    std::vector<Edge> matched_edges() const;

    void clear();

    /// Every subsequent match/unmatch is appended to *journal (nullptr detaches).
    void set_journal(std::vector<MatchChange>* journal) noexcept { journal_ = journal; }
    std::vector<MatchChange>* journal() const noexcept { return journal_; }

    friend bool operator==(const MatchingState& a, const MatchingState& b) {
        return a.mate_ == b.mate_ && a.total_weight_ == b.total_weight_;
    }

private:
    std::vector<VertexId> mate_;
    std::vector<Weight> mate_weight_;
    Weight total_weight_ = 0;
    std::size_t cardinality_ = 0;
    std::vector<MatchChange>* journal_ = nullptr;
};

/// Sum of graph weights over matched edges. Throws CorruptionError if a
/// matched pair is not an edge of g.
Weight matching_weight_recompute(const MatchingState& st, const DynamicGraph& g);

/// Full audit: mate symmetry, every matched pair is an edge of g with the
/// stored weight, and the maintained total equals the recomputed sum.
/// Throws CorruptionError on the first violation.
void check_matching(const MatchingState& st, const DynamicGraph& g);

} // namespace dynmatch
