#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "dynmatch/dynmwm_level.hpp"
#include "dynmatch/harness/stream.hpp"
#include "dynmatch/oracle.hpp"

using namespace dynmatch;

namespace {

LevelConfig level_config(double eps, LevelMcmKind kind = LevelMcmKind::bfs) {
    LevelConfig cfg;
    cfg.epsilon = eps;
    cfg.mcm_kind = kind;
    return cfg;
}

std::vector<std::size_t> levels_holding(const DynMwmLevel& algo, VertexId u, VertexId v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < algo.level_count(); ++i) {
        if (algo.level_graph(i).has_edge(u, v)) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

TEST(LevelIndex, Examples) {
    EXPECT_EQ(level_index(1, 0.5), 0);
    EXPECT_EQ(level_index(8, 1.0), 3);
    EXPECT_EQ(level_index(100, 1.0), 6);
    EXPECT_THROW(level_index(0.5, 1.0), InputError);
}

TEST(LevelConfig, SmallEpsilonNeedsOptIn) {
    auto cfg = level_config(0.05);
    EXPECT_THROW(cfg.validate(), InputError);
    cfg.allow_small_epsilon = true;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_THROW(level_config(0).validate(), InputError);
}

TEST(DynMwmLevel, InsertReachesLevelsUpToIndex) {
    DynamicGraph g(4);
    DynMwmLevel algo(g, level_config(1.0), 1);
    g.insert_edge(0, 1, 1);
    algo.handle_insert(0, 1, 1);
    EXPECT_EQ(levels_holding(algo, 0, 1), (std::vector<std::size_t>{0}));

    g.insert_edge(2, 3, 100);
    algo.handle_insert(2, 3, 100);
    EXPECT_EQ(levels_holding(algo, 2, 3), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(levels_holding(algo, 0, 1), (std::vector<std::size_t>{0}));
    algo.audit(true);
}

TEST(DynMwmLevel, DeleteLeavesExactlyItsLevels) {
    DynamicGraph g(4);
    DynMwmLevel algo(g, level_config(1.0), 2);
    g.insert_edge(0, 1, 100);
    algo.handle_insert(0, 1, 100);
    g.insert_edge(2, 3, 10);
    algo.handle_insert(2, 3, 10);
    EXPECT_EQ(levels_holding(algo, 2, 3), (std::vector<std::size_t>{0, 1, 2, 3}));
    g.delete_edge(2, 3);
    algo.handle_delete(2, 3);
    EXPECT_TRUE(levels_holding(algo, 2, 3).empty());
    EXPECT_EQ(levels_holding(algo, 0, 1).size(), 7u);
    algo.audit(true);
}

TEST(MergeLevels, SingleLevelPassesThrough) {
    DynamicGraph g(4);
    g.insert_edge(0, 1, 3);
    g.insert_edge(2, 3, 4);
    const std::vector<std::set<VertexPair>> levels{{{0, 1}, {2, 3}}};
    const auto merged = merge_levels(g, levels);
    EXPECT_EQ(merged.total_weight(), 7);
    EXPECT_EQ(merged.cardinality(), 2u);
}

TEST(MergeLevels, HigherLevelBlocksSharedVertex) {
    // a=0, b=1, c=2, d=3, e=4; levels listed from high to low.
    DynamicGraph g(5);
    g.insert_edge(0, 1, 4);
    g.insert_edge(1, 2, 1);
    g.insert_edge(3, 4, 1);
    const std::vector<std::set<VertexPair>> levels{{{0, 1}}, {}, {{1, 2}, {3, 4}}};
    const auto merged = merge_levels(g, levels);
    EXPECT_EQ(merged.matched_edges(), (std::vector<Edge>{{0, 1, 4}, {3, 4, 1}}));
}

TEST(MergeLevels, IdenticalLevelsAreIdempotent) {
    DynamicGraph g(4);
    g.insert_edge(0, 1, 3);
    g.insert_edge(2, 3, 4);
    const std::set<VertexPair> m{{0, 1}, {2, 3}};
    const std::vector<std::set<VertexPair>> levels{m, m, m};
    EXPECT_EQ(merge_levels(g, levels).total_weight(), 7);
}

TEST(DynMwmLevel, MembershipAuditAndOptimumBoundOnRandomStreams) {
    for (const LevelMcmKind kind : {LevelMcmKind::random_walk, LevelMcmKind::bfs, LevelMcmKind::exact}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto stream = harness::gen_mixed_stream(10, 40, 15, seed);
            DynamicGraph g(stream.n);
            DynMwmLevel algo(g, level_config(0.5, kind), seed);
            for (const auto& op : stream.ops) {
                if (op.kind == harness::OpKind::insert) {
                    g.insert_edge(op.u, op.v, op.w);
                    algo.handle_insert(op.u, op.v, op.w);
                } else {
                    g.delete_edge(op.u, op.v);
                    algo.handle_delete(op.u, op.v);
                }
                algo.audit(true);
                check_matching(algo.matching(), g);
                ASSERT_LE(algo.matching().total_weight(), oracle::exact_mwm(g, {16, 64}).weight);
            }
        }
    }
}

TEST(DynMwmLevel, WeightScaleNormalizesBeforeBucketing) {
    DynamicGraph g(2);
    LevelConfig cfg = level_config(1.0);
    cfg.weight_scale = 0.25;
    DynMwmLevel algo(g, cfg, 3);
    g.insert_edge(0, 1, 0.5);
    algo.handle_insert(0, 1, 0.5);
    EXPECT_EQ(levels_holding(algo, 0, 1), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(algo.matching().total_weight(), 0.5);
}
