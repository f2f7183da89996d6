#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "dynmatch/harness/io.hpp"
#include "dynmatch/harness/reference.hpp"
#include "dynmatch/oracle.hpp"
#include "test_support.hpp"

using namespace dynmatch;
namespace dt = dynmatch::testing;

namespace {

DynamicGraph graph_of(std::size_t n, std::initializer_list<Edge> edges) {
    DynamicGraph g(n);
    for (const auto& e : edges) {
        g.insert_edge(e.u, e.v, e.w);
    }
    return g;
}

// The 4-cycle where only an alternating cycle improves the matching.
struct CycleInstance {
    DynamicGraph g = graph_of(4, {{0, 2, 90}, {1, 3, 5}, {0, 1, 87}, {2, 3, 74}});
    MatchingState st{4};
    CycleInstance() {
        st.match_edge(0, 2, 90);
        st.match_edge(1, 3, 5);
    }
};

// Repeatedly flips short weight-augmenting paths until none with at most
// k_max free edges remains.
void remove_short_paths(const DynamicGraph& g, MatchingState& st, std::size_t k_max) {
    while (const auto p = oracle::find_weight_augmenting_kpath(g, st, k_max, {16, 40})) {
        dt::flip_path(st, *p);
    }
}

} // namespace

TEST(ExactMwm, Examples) {
    EXPECT_EQ(oracle::exact_mwm(graph_of(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}})).weight, 3);
    EXPECT_EQ(oracle::exact_mwm(DynamicGraph(5)).weight, 0);
    EXPECT_TRUE(oracle::exact_mwm(DynamicGraph(5)).edges.empty());
    const auto p4 = oracle::exact_mwm(graph_of(4, {{0, 1, 5}, {1, 2, 1}, {2, 3, 5}}));
    EXPECT_EQ(p4.weight, 10);
    EXPECT_EQ(p4.edges, (std::vector<Edge>{{0, 1, 5}, {2, 3, 5}}));
}

TEST(ExactMcm, Examples) {
    EXPECT_EQ(oracle::exact_mcm(graph_of(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}})), 2u);
    EXPECT_EQ(oracle::exact_mcm(graph_of(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}})), 1u);
    EXPECT_EQ(oracle::exact_mcm(DynamicGraph(3)), 0u);
}

TEST(ExactMwm, RefusesLargeInstances) {
    Rng rng(1);
    const auto g = dt::random_weighted_graph(20, 40, rng);
    EXPECT_THROW(oracle::exact_mwm(g), LimitError);
    EXPECT_THROW(oracle::exact_mwm_enumerate(g), LimitError);
    EXPECT_THROW(oracle::exact_mcm(g, {10, 100}), LimitError);
}

TEST(ExactMwm, AgreesWithEnumerationAndBlossom) {
    Rng rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + rng.below(9);
        const auto g = dt::random_weighted_graph(n, rng.below(13), rng);
        const auto exact = oracle::exact_mwm(g);
        ASSERT_EQ(exact.weight, oracle::exact_mwm_enumerate(g).weight);
        ASSERT_EQ(exact.weight, harness::blossom_mwm(g).weight);
        MatchingState st(n);
        for (const auto& e : exact.edges) {
            st.match_edge(e.u, e.v, e.w);
        }
        check_matching(st, g);
    }
}

TEST(BlossomMwm, AgreesWithBranchAndBoundOnFractionalWeights) {
    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 4 + rng.below(11);
        DynamicGraph g(n);
        const std::size_t m = std::min<std::size_t>(24, n * (n - 1) / 2);
        while (g.edge_count() < m) {
            const auto u = static_cast<VertexId>(rng.below(n));
            const auto v = static_cast<VertexId>(rng.below(n));
            if (u != v) {
                g.insert_edge(u, v, 0.5 + 10 * rng.uniform());
            }
        }
        const auto blossom = harness::blossom_mwm(g);
        ASSERT_NEAR(blossom.weight, oracle::exact_mwm(g, {16, 24}).weight, 1e-9);
        MatchingState st(n);
        for (const auto& e : blossom.edges) {
            st.match_edge(e.u, e.v, e.w);
        }
        check_matching(st, g);
    }
}

TEST(BlossomMwm, MatchesOfflineReferenceOptima) {
    const std::string dir = DYNMATCH_TEST_DATA;
    const auto expected = harness::read_opt_sidecar(dir + "/reference_opt.txt");
    ASSERT_EQ(expected.size(), 4u);
    for (const auto& [name, opt] : expected) {
        const auto data = harness::parse_static_edgelist(harness::read_file(dir + "/" + name + ".txt"));
        DynamicGraph g(data.n);
        for (const auto& e : data.edges) {
            g.insert_edge(e.u, e.v, *e.w);
        }
        EXPECT_NEAR(harness::blossom_mwm(g).weight, opt, 1e-6) << name;
    }
}

TEST(KPath, OptimalMatchingHasNone) {
    const auto g = graph_of(4, {{0, 1, 5}, {1, 2, 1}, {2, 3, 5}});
    MatchingState st(4);
    st.match_edge(0, 1, 5);
    st.match_edge(2, 3, 5);
    for (std::size_t k = 1; k <= 4; ++k) {
        EXPECT_FALSE(oracle::find_weight_augmenting_kpath(g, st, k));
    }
}

TEST(KPath, SingleFreeEdgeIsAOnePath) {
    const auto g = graph_of(2, {{0, 1, 4}});
    const auto p = oracle::find_weight_augmenting_kpath(g, MatchingState(2), 3);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->free_edges, 1u);
    EXPECT_EQ(p->gain, 4);
}

TEST(KPath, HeavierNeighborEdgeIsAOnePath) {
    const auto g = graph_of(3, {{0, 1, 5}, {1, 2, 9}});
    MatchingState st(3);
    st.match_edge(0, 1, 5);
    const auto p = oracle::find_weight_augmenting_kpath(g, st, 2);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->free_edges, 1u);
    EXPECT_EQ(p->gain, 4);
    EXPECT_FALSE(p->closed);
}

TEST(KPath, AlternatingCycleIsFoundOnlyWhenClosedShapesAllowed) {
    CycleInstance c;
    EXPECT_FALSE(oracle::find_weight_augmenting_kpath(c.g, c.st, 2, {}, oracle::PathShapes::open_only));
    const auto p = oracle::find_weight_augmenting_kpath(c.g, c.st, 2);
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->closed);
    EXPECT_EQ(p->free_edges, 2u);
    EXPECT_EQ(p->gain, 66);
    EXPECT_EQ(p->nodes.front(), p->nodes.back());
}

TEST(ShortPathBound, OpenPathsAloneDoNotSuffice) {
    CycleInstance c;
    // No open path with at most two free edges exists, yet 95 < 2/3 * 161.
    EXPECT_FALSE(oracle::verify_short_path_bound(c.g, c.st, 3, {}, oracle::PathShapes::open_only));
    EXPECT_THROW(oracle::verify_short_path_bound(c.g, c.st, 3), PreconditionError);
}

TEST(ShortPathBound, OptimalMatchingSatisfiesEveryK) {
    const auto g = graph_of(4, {{0, 1, 5}, {1, 2, 1}, {2, 3, 5}});
    MatchingState st(4);
    st.match_edge(0, 1, 5);
    st.match_edge(2, 3, 5);
    for (std::size_t k = 2; k <= 5; ++k) {
        EXPECT_TRUE(oracle::verify_short_path_bound(g, st, k));
    }
}

TEST(ShortPathBound, RandomCampaigns) {
    Rng rng(4);
    for (const std::size_t k : {2u, 3u}) {
        for (int trial = 0; trial < 300; ++trial) {
            const std::size_t n = 3 + rng.below(8);
            const auto g = dt::random_weighted_graph(n, 2 + rng.below(2 * n - 1), rng);
            auto st = dt::random_matching(g, rng);
            remove_short_paths(g, st, k - 1);
            ASSERT_TRUE(oracle::verify_short_path_bound(g, st, k, {16, 40})) << "k=" << k << " trial " << trial;
        }
    }
}
