#include <gtest/gtest.h>

#include <vector>

#include "dynmatch/dynmcm.hpp"
#include "dynmatch/harness/generators.hpp"
#include "dynmatch/oracle.hpp"
#include "test_support.hpp"

using namespace dynmatch;
namespace dt = dynmatch::testing;

namespace {

McmConfig config(McmKind kind, double eps, bool safe = false) {
    McmConfig cfg;
    cfg.kind = kind;
    cfg.epsilon = eps;
    cfg.safe_mode = safe;
    return cfg;
}

DynamicGraph path_graph(std::size_t n) {
    DynamicGraph g(n);
    for (VertexId i = 0; i + 1 < n; ++i) {
        g.insert_edge(i, i + 1, 1);
    }
    return g;
}

bool maximal(const DynamicGraph& g, const MatchingState& st) {
    for (const auto& e : g.edges()) {
        if (st.is_free(e.u) && st.is_free(e.v)) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(McmConfig, DepthFollowsEpsilon) {
    EXPECT_EQ(config(McmKind::bfs, 1.0).depth(), 1u);
    EXPECT_EQ(config(McmKind::bfs, 0.5).depth(), 3u);
    EXPECT_EQ(config(McmKind::bfs, 0.34).depth(), 5u);
    McmConfig bad;
    bad.epsilon = -1;
    EXPECT_THROW(bad.validate(), InputError);
}

TEST(DynMcmWalk, FreeNeighborMatchesInOneStep) {
    DynamicGraph g(2);
    g.insert_edge(0, 1, 1);
    DynMcm mcm(g, config(McmKind::random_walk, 1.0), 1);
    EXPECT_TRUE(mcm.augmenting_walk(0));
    EXPECT_EQ(mcm.matching().mate(0), 1u);
}

TEST(DynMcmWalk, IsolatedVertexFails) {
    DynamicGraph g(2);
    DynMcm mcm(g, config(McmKind::random_walk, 1.0), 2);
    EXPECT_FALSE(mcm.augmenting_walk(0));
    EXPECT_EQ(mcm.matching().cardinality(), 0u);
}

TEST(DynMcmWalk, AugmentsAlongP4) {
    const auto g = path_graph(4);
    DynMcm mcm(g, config(McmKind::random_walk, 0.5), 3);
    mcm.matching().match_edge(1, 2, 1);
    EXPECT_TRUE(mcm.augmenting_walk(0));
    EXPECT_EQ(mcm.matching().mate(0), 1u);
    EXPECT_EQ(mcm.matching().mate(2), 3u);
    EXPECT_THROW(mcm.augmenting_walk(1), PreconditionError);
}

TEST(DynMcmBfs, Examples) {
    const auto edge = path_graph(2);
    DynMcm trivial(edge, config(McmKind::bfs, 1.0), 4);
    EXPECT_TRUE(trivial.bfs_augment(1));

    const auto p3 = path_graph(3);
    DynMcm none(p3, config(McmKind::bfs, 0.1), 5);
    none.matching().match_edge(0, 1, 1);
    EXPECT_FALSE(none.bfs_augment(2));
    EXPECT_EQ(none.matching().mate(0), 1u);
}

TEST(DynMcmBfs, FindsLengthFivePathWithinBudget) {
    const auto g = path_graph(6);
    DynMcm deep(g, config(McmKind::bfs, 0.34), 6);
    deep.matching().match_edge(1, 2, 1);
    deep.matching().match_edge(3, 4, 1);
    EXPECT_TRUE(deep.bfs_augment(0));
    EXPECT_EQ(deep.matching().cardinality(), 3u);

    DynMcm shallow(g, config(McmKind::bfs, 0.5), 6);
    shallow.matching().match_edge(1, 2, 1);
    shallow.matching().match_edge(3, 4, 1);
    const auto before = shallow.matching();
    EXPECT_FALSE(shallow.bfs_augment(0));
    EXPECT_EQ(shallow.matching(), before);
}

TEST(DynMcm, InsertBetweenFreeVerticesMatches) {
    DynamicGraph g(2);
    DynMcm mcm(g, config(McmKind::random_walk, 1.0), 7);
    g.insert_edge(0, 1, 1);
    mcm.handle_insert(0, 1);
    EXPECT_EQ(mcm.matching().cardinality(), 1u);
}

TEST(DynMcm, UnsafeInsertBetweenMatchedVerticesDoesNothing) {
    DynamicGraph g(6);
    g.insert_edge(0, 1, 1);
    g.insert_edge(2, 3, 1);
    g.insert_edge(4, 0, 1);
    g.insert_edge(3, 5, 1);
    DynMcm mcm(g, config(McmKind::bfs, 0.1), 8);
    mcm.matching().match_edge(0, 1, 1);
    mcm.matching().match_edge(2, 3, 1);
    const auto before = mcm.matching();
    g.insert_edge(1, 2, 1);
    mcm.handle_insert(1, 2);
    EXPECT_EQ(mcm.matching(), before);

    // Safe mode finds 4-0-1-2-3-5.
    DynMcm safe(g, config(McmKind::bfs, 0.1, true), 8);
    safe.matching().match_edge(0, 1, 1);
    safe.matching().match_edge(2, 3, 1);
    safe.handle_insert(1, 2);
    EXPECT_EQ(safe.matching().cardinality(), 3u);
}

TEST(DynMcm, DeleteInP4KeepsOneEdge) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = path_graph(4);
        DynMcm mcm(g, config(McmKind::random_walk, 1.0), seed);
        mcm.matching().match_edge(0, 1, 1);
        mcm.matching().match_edge(2, 3, 1);
        g.delete_edge(0, 1);
        mcm.handle_delete(0, 1);
        EXPECT_EQ(mcm.matching().cardinality(), 1u);
        EXPECT_TRUE(mcm.matching().mate(2) == 3u || mcm.matching().mate(1) == 2u);
        check_matching(mcm.matching(), g);
    }
}

TEST(DynMcm, FailedAttemptsLeaveMatchingUntouched) {
    constexpr std::size_t n = 40;
    Rng rng(9);
    auto g = dt::random_weighted_graph(n, 90, rng);
    for (const McmKind kind : {McmKind::random_walk, McmKind::bfs}) {
        McmConfig cfg = config(kind, 0.5);
        cfg.delta_settling = true;
        DynMcm mcm(g, cfg, 10);
        std::size_t failures = 0;
        for (int attempt = 0; attempt < 10000; ++attempt) {
            if (attempt % 50 == 0) {
                mcm.matching().clear();
                for (const auto& e : g.edges()) {
                    if (rng.below(4) == 0 && mcm.matching().is_free(e.u) && mcm.matching().is_free(e.v)) {
                        mcm.matching().match_edge(e.u, e.v, 1);
                    }
                }
            }
            const auto start = static_cast<VertexId>(rng.below(n));
            if (mcm.matching().is_matched(start)) {
                continue;
            }
            const auto before = mcm.matching();
            if (!mcm.augment_from(start)) {
                ++failures;
                ASSERT_EQ(mcm.matching(), before);
            } else {
                ASSERT_EQ(mcm.matching().cardinality(), before.cardinality() + 1);
            }
        }
        EXPECT_GT(failures, 0u);
    }
}

TEST(DynMcm, MaximalityWalkCountKeepsMatchingMaximal) {
    Rng rng(12);
    std::size_t ok = 0;
    constexpr int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
        const std::size_t n = 4 + rng.below(9);
        auto data = harness::bounded_degree_graph(n, 2 * n, 4, rng);
        DynamicGraph g(n);
        McmConfig cfg = config(McmKind::random_walk, 1.0);
        cfg.repetitions = maximality_walk_count(4, n, 1.0);
        DynMcm mcm(g, cfg, rng.next());
        for (const auto& e : data.edges) {
            g.insert_edge(e.u, e.v, 1);
            mcm.handle_insert(e.u, e.v);
        }
        auto edges = g.edges();
        shuffle(edges, rng);
        for (std::size_t i = 0; i < edges.size() / 3; ++i) {
            g.delete_edge(edges[i].u, edges[i].v);
            mcm.handle_delete(edges[i].u, edges[i].v);
        }
        check_matching(mcm.matching(), g);
        ok += maximal(g, mcm.matching()) ? 1 : 0;
    }
    EXPECT_GE(ok, 99u);
}

TEST(DynMcm, LazyThresholdSkipsRecentlySearchedVertex) {
    for (const std::size_t threshold : {0u, 3u}) {
        DynamicGraph g(4);
        McmConfig cfg = config(McmKind::bfs, 0.5);
        cfg.lazy_threshold = threshold;
        DynMcm mcm(g, cfg, 13);
        for (const auto [u, v] : {std::pair<VertexId, VertexId>{0, 1}, {0, 2}, {0, 3}}) {
            g.insert_edge(u, v, 1);
            mcm.handle_insert(u, v);
        }
        ASSERT_EQ(mcm.matching().mate(0), 1u);
        g.delete_edge(0, 1);
        mcm.handle_delete(0, 1);
        const VertexId partner = *mcm.matching().mate(0);
        const VertexId other = partner == 2 ? 3 : 2;
        g.delete_edge(0, partner);
        mcm.handle_delete(0, partner);
        if (threshold == 0) {
            EXPECT_EQ(mcm.matching().mate(0), other);
        } else {
            EXPECT_TRUE(mcm.matching().is_free(0));
            EXPECT_TRUE(mcm.matching().is_free(other));
        }
    }
}

TEST(DynMcm, SafeUnboundedBfsIsExactOnBipartiteStreams) {
    Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const auto stream = dt::random_bipartite_stream(1 + rng.below(6), 1 + rng.below(6), 40, rng);
        DynamicGraph g(stream.n);
        McmConfig cfg = config(McmKind::bfs, 1.0, true);
        cfg.depth_bounded = false;
        DynMcm mcm(g, cfg, 15);
        for (const auto& op : stream.ops) {
            if (op.kind == harness::OpKind::insert) {
                g.insert_edge(op.u, op.v, 1);
                mcm.handle_insert(op.u, op.v);
            } else {
                g.delete_edge(op.u, op.v);
                mcm.handle_delete(op.u, op.v);
            }
            ASSERT_EQ(mcm.matching().cardinality(), oracle::exact_mcm(g, {16, 64}));
        }
    }
}
