#include <gtest/gtest.h>

#include "absx/absx.hpp"
#include "oracles.hpp"

using namespace absx;

TEST(Invariants, ConnectedExamples) {
    EXPECT_TRUE(is_connected(build_path(5)));
    EXPECT_FALSE(is_connected(empty_graph(2)));
    const Graph c4 = GraphBuilder(build_complete(4)).remove_edge(0, 1).remove_edge(2, 3).build();
    EXPECT_TRUE(is_connected(c4));
    EXPECT_TRUE(is_isomorphic(c4, build_cycle(4)));
}

TEST(Invariants, CutVertexExamples) {
    for (int n = 2; n <= 9; ++n) EXPECT_EQ(cut_vertex_count(build_path(n)), n - 2);
    EXPECT_EQ(cut_vertex_count(build_complete(6)), 0);
    EXPECT_EQ(cut_vertex_count(build_knp(5, 1)), 1);
    EXPECT_THROW(cut_vertex_count(empty_graph(3)), PreconditionError);
}

TEST(Invariants, ConnectivityExamples) {
    EXPECT_EQ(vertex_connectivity(build_complete_bipartite(2, 3)), 2);
    for (int n = 3; n <= 8; ++n) EXPECT_EQ(vertex_connectivity(build_path(n)), 1);
    EXPECT_EQ(vertex_connectivity(build_cycle(6)), 2);
    EXPECT_EQ(oracle::connectivity(build_cycle(6)), 2);
    EXPECT_EQ(vertex_connectivity(build_complete(5)), 4);
    EXPECT_THROW(vertex_connectivity(empty_graph(1)), PreconditionError);
}

TEST(Invariants, BipartitionExamples) {
    const auto c4 = bipartition(build_cycle(4));
    ASSERT_TRUE(c4.has_value());
    EXPECT_EQ(c4->first, VertexMask{0b0101});
    EXPECT_EQ(c4->second, VertexMask{0b1010});
    EXPECT_FALSE(bipartition(build_cycle(5)).has_value());
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y)
            for (int kappa = 1; kappa <= 3; ++kappa) {
                const Graph g = build_kappa_xy(x, y, kappa);
                const auto sides = bipartition(g);
                ASSERT_TRUE(sides.has_value());
                EXPECT_EQ(sides->first | sides->second, g.vertices());
                for (auto [u, v] : g.edges()) EXPECT_NE((sides->first >> u) & 1U, (sides->first >> v) & 1U);
            }
}

TEST(Invariants, PartitenessExamples) {
    EXPECT_EQ(vertex_k_partiteness(build_cycle(6), 2), 0);
    EXPECT_EQ(vertex_k_partiteness(build_complete_bipartite(3, 4), 2), 0);
    for (int n = 2; n <= 8; ++n)
        for (int k = 2; k <= n; ++k) EXPECT_EQ(vertex_k_partiteness(build_complete(n), k), n - k);
    EXPECT_EQ(vertex_k_partiteness(build_cycle(5), 2), 1);
    EXPECT_EQ(vertex_k_partiteness(build_cycle(5), 3), 0);
    EXPECT_THROW(vertex_k_partiteness(build_cycle(5), 1), PreconditionError);
}

TEST(Invariants, BlockExamples) {
    EXPECT_EQ(block_decomposition(build_path(4)).size(), 3U);
    EXPECT_EQ(block_decomposition(build_complete(4)).size(), 1U);
    const auto blocks = block_decomposition(build_knp(5, 1));
    ASSERT_EQ(blocks.size(), 2U);
    std::vector<int> sizes{std::popcount(blocks[0]), std::popcount(blocks[1])};
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<int>{2, 4}));
}

TEST(Invariants, SatisfiesExamples) {
    EXPECT_TRUE(satisfies(build_knp(5, 1), CutVertices{1}));
    EXPECT_TRUE(satisfies(build_cycle(6), BipartiteConnectivity{2}));
    EXPECT_FALSE(satisfies(build_cycle(5), BipartiteConnectivity{2}));
    EXPECT_FALSE(satisfies(build_complete(5), KPartiteness{2, 2}));
    EXPECT_TRUE(satisfies(build_complete(5), KPartiteness{2, 3}));
}

TEST(Invariants, ConstraintValidationAndNames) {
    EXPECT_THROW(validate(CutVertices{-1}), PreconditionError);
    EXPECT_THROW(validate(KPartiteness{1, 0}), PreconditionError);
    EXPECT_THROW(validate(BipartiteConnectivity{0}), PreconditionError);
    EXPECT_EQ(describe(CutVertices{1}), "cut-vertices p=1");
    EXPECT_EQ(describe(KPartiteness{2, 1}), "k-partiteness k=2 r=1");
    EXPECT_EQ(describe(BipartiteConnectivity{3}), "bipartite-kappa kappa=3");
}

// Oracle equivalence over every connected graph up to 7 vertices.
TEST(Invariants, MatchOraclesOnAllConnectedGraphs) {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate(EnumSpec{n, EnumMode::kConnected, std::nullopt})) {
            ASSERT_EQ(cut_vertex_count(g), oracle::cut_vertex_count(g)) << to_graph6(g);
            if (n >= 2) ASSERT_EQ(vertex_connectivity(g), oracle::connectivity(g)) << to_graph6(g);
            ASSERT_EQ(bipartition(g).has_value(), oracle::bipartite(g)) << to_graph6(g);
            for (int k = 2; k <= 3; ++k) {
                const int vk = vertex_k_partiteness(g, k);
                ASSERT_EQ(vk, oracle::k_partiteness(g, k)) << to_graph6(g) << " k=" << k;
                ASSERT_LE(vk, std::max(0, n - k));
            }
        }
    }
}

TEST(Invariants, BlocksCoverEdgesAndCutVerticesShareBlocks) {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : enumerate(EnumSpec{n, EnumMode::kConnected, std::nullopt})) {
            const auto blocks = block_decomposition(g);
            std::size_t covered = 0;
            for (VertexMask b : blocks)
                for (auto [u, v] : g.edges()) covered += ((b >> u) & 1U) && ((b >> v) & 1U) ? 1 : 0;
            ASSERT_EQ(covered, g.edge_count()) << to_graph6(g);
            for_each_bit(cut_vertices(g), [&](int v) {
                int containing = 0;
                for (VertexMask b : blocks) containing += (b >> v) & 1U ? 1 : 0;
                EXPECT_GE(containing, 2) << to_graph6(g);
            });
        }
    }
}
