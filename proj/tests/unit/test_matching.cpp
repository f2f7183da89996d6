#include <gtest/gtest.h>

#include <vector>

#include "dynmatch/dynmwm_random.hpp"
#include "dynmatch/matching.hpp"
#include "test_support.hpp"

using namespace dynmatch;

namespace {

// 0-1-2-3 with weights 5, 3, 4 and {1, 2} matched.
WalkPath three_edge_path() {
    WalkPath p;
    p.nodes = {0, 1, 2, 3};
    p.edges = {{0, 1, 5, false}, {1, 2, 3, true}, {2, 3, 4, false}};
    return p;
}

} // namespace

TEST(MatchingState, MatchAndUnmatch) {
    MatchingState st(3);
    st.match_edge(0, 1, 5);
    EXPECT_EQ(st.total_weight(), 5);
    EXPECT_EQ(st.mate(0), 1u);
    EXPECT_EQ(st.mate(1), 0u);
    EXPECT_EQ(st.cardinality(), 1u);
    EXPECT_EQ(st.unmatch(0), 5);
    EXPECT_TRUE(st.is_free(0));
    EXPECT_TRUE(st.is_free(1));
    EXPECT_EQ(st.total_weight(), 0);
}

TEST(MatchingState, MatchingAMatchedVertexThrows) {
    MatchingState st(3);
    st.match_edge(0, 1, 5);
    EXPECT_THROW(st.match_edge(1, 2, 3), PreconditionError);
    EXPECT_THROW(st.match_edge(2, 2, 3), PreconditionError);
    EXPECT_THROW(st.unmatch(2), PreconditionError);
    EXPECT_THROW(st.mate_weight(2), PreconditionError);
    EXPECT_EQ(st.total_weight(), 5);
}

TEST(MatchingState, ApplyPathMatchingGainsSix) {
    MatchingState st(4);
    st.match_edge(1, 2, 3);
    const auto path = three_edge_path();
    const std::vector<std::size_t> selected{0, 2};
    const Weight before = st.total_weight();
    st.apply_path_matching(path, selected);
    EXPECT_EQ(st.total_weight() - before, 6);
    EXPECT_EQ(st.mate(0), 1u);
    EXPECT_EQ(st.mate(2), 3u);
}

TEST(MatchingState, ApplyCurrentSelectionIsANoOp) {
    MatchingState st(4);
    st.match_edge(1, 2, 3);
    const std::vector<std::size_t> selected{1};
    st.apply_path_matching(three_edge_path(), selected);
    EXPECT_EQ(st.total_weight(), 3);
    EXPECT_EQ(st.mate(1), 2u);
}

TEST(MatchingState, ApplyEmptySelectionRemovesPathMatching) {
    MatchingState st(4);
    st.match_edge(1, 2, 3);
    st.apply_path_matching(three_edge_path(), {});
    EXPECT_EQ(st.cardinality(), 0u);
    EXPECT_EQ(st.total_weight(), 0);
}

TEST(MatchingState, ApplyRejectsBadSelectionsWithoutMutation) {
    MatchingState st(6);
    st.match_edge(1, 2, 3);
    st.match_edge(3, 5, 8);  // off-path edge at vertex 3
    const auto snapshot = st;
    const auto path = three_edge_path();
    const std::vector<std::size_t> adjacent{0, 1};
    EXPECT_THROW(st.apply_path_matching(path, adjacent), PreconditionError);
    const std::vector<std::size_t> out_of_range{3};
    EXPECT_THROW(st.apply_path_matching(path, out_of_range), PreconditionError);
    const std::vector<std::size_t> touches_off_path{0, 2};
    EXPECT_THROW(st.apply_path_matching(path, touches_off_path), PreconditionError);
    EXPECT_EQ(st, snapshot);

    MatchingState stale(4);
    EXPECT_THROW(stale.apply_path_matching(path, {}), PreconditionError);
}

TEST(MatchingState, ApplyLeavesOffPathVerticesAlone) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        MatchingState st(10);
        st.match_edge(1, 2, 3);
        st.match_edge(6, 7, 2);
        st.match_edge(8, 9, 4);
        const auto before = st;
        std::vector<std::size_t> selected;
        if (rng.coin()) {
            selected = {0, 2};
        } else if (rng.coin()) {
            selected = {1};
        }
        st.apply_path_matching(three_edge_path(), selected);
        for (VertexId x = 4; x < 10; ++x) {
            EXPECT_EQ(st.mate(x), before.mate(x));
        }
    }
}

TEST(MatchingState, JournalRecordsEveryChange) {
    MatchingState st(4);
    std::vector<MatchChange> journal;
    st.set_journal(&journal);
    st.match_edge(0, 1, 2);
    st.unmatch(1);
    ASSERT_EQ(journal.size(), 2u);
    EXPECT_TRUE(journal[0].matched);
    EXPECT_FALSE(journal[1].matched);
    EXPECT_EQ(journal[1].w, 2);
}

TEST(MatchingRecompute, Examples) {
    DynamicGraph g(4);
    g.insert_edge(0, 1, 5);
    g.insert_edge(2, 3, 9);
    MatchingState st(4);
    EXPECT_EQ(matching_weight_recompute(st, g), 0);
    st.match_edge(0, 1, 5);
    st.match_edge(2, 3, 9);
    EXPECT_EQ(matching_weight_recompute(st, g), 14);
    check_matching(st, g);
}

TEST(MatchingRecompute, DetectsCorruption) {
    DynamicGraph g(4);
    g.insert_edge(0, 1, 5);
    MatchingState st(4);
    st.match_edge(2, 3, 1);
    EXPECT_THROW(matching_weight_recompute(st, g), CorruptionError);
    EXPECT_THROW(check_matching(st, g), CorruptionError);

    MatchingState wrong_weight(4);
    wrong_weight.match_edge(0, 1, 6);
    EXPECT_THROW(check_matching(wrong_weight, g), CorruptionError);
}

TEST(MatchingRecompute, AgreesAfterTenThousandUpdates) {
    constexpr std::size_t n = 100;
    DynamicGraph g(n);
    Rng rng(17);
    DynMwmRandom algo(g, RandomConfig{}, 3);
    for (int step = 0; step < 10000; ++step) {
        const auto u = static_cast<VertexId>(rng.below(n));
        const auto v = static_cast<VertexId>(rng.below(n));
        if (u == v) {
            continue;
        }
        if (g.delete_edge(u, v)) {
            algo.handle_delete(u, v);
        } else {
            const auto w = static_cast<Weight>(rng.between(1, 100));
            g.insert_edge(u, v, w);
            algo.handle_insert(u, v, w);
        }
    }
    EXPECT_EQ(matching_weight_recompute(algo.matching(), g), algo.matching().total_weight());
    check_matching(algo.matching(), g);
}
