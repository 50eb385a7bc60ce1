#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "absx/absx.hpp"
#include "oracles.hpp"

using namespace absx;

namespace {

void expect_rel(double actual, double expected, double rel = 1e-12) {
    EXPECT_LE(std::abs(actual - expected), rel * std::max(1.0, std::abs(expected)))
        << "actual " << actual << " expected " << expected;
}

} // namespace

TEST(AbsIndex, EdgeWeightExamples) {
    EXPECT_EQ(edge_weight(1, 1), 0.0);
    expect_rel(edge_weight(1, 2), std::sqrt(1.0 / 3.0));
    expect_rel(edge_weight(3, 3), std::sqrt(2.0 / 3.0));
    EXPECT_NEAR(edge_weight(1, 2), 0.5773503, 5e-8);
    EXPECT_NEAR(edge_weight(3, 3), 0.8164966, 5e-8);
    EXPECT_THROW(edge_weight(0, 2), PreconditionError);
    EXPECT_EQ(edge_weight(2, 5), weight_for_degree_sum(7));
}

TEST(AbsIndex, GraphExamples) {
    EXPECT_EQ(abs_index(build_complete(2)), 0.0);
    expect_rel(abs_index(build_path(4)), 2.0 * std::sqrt(1.0 / 3.0) + std::sqrt(0.5));
    EXPECT_NEAR(abs_index(build_path(4)), 1.86180731957, 1e-11);
    expect_rel(abs_index(build_complete(4)), 6.0 * std::sqrt(2.0 / 3.0));
    EXPECT_NEAR(abs_index(build_complete(4)), 4.8989795, 5e-8);
    EXPECT_EQ(abs_index(empty_graph(4)), 0.0);
}

TEST(AbsIndex, DegreePairExamples) {
    const DegreePairCount c4[] = {{2, 2, 4}};
    expect_rel(abs_from_degree_pairs(c4), abs_index(build_cycle(4)));
    EXPECT_NEAR(abs_from_degree_pairs(c4), 2.8284271, 5e-8);
    EXPECT_EQ(abs_from_degree_pairs({}), 0.0);
    const DegreePairCount star[] = {{1, 3, 3}};
    expect_rel(abs_from_degree_pairs(star), abs_index(build_complete_bipartite(1, 3)));
    EXPECT_NEAR(abs_from_degree_pairs(star), 2.1213203, 5e-8);
    const DegreePairCount bad[] = {{1, 3, -1}};
    EXPECT_THROW(abs_from_degree_pairs(bad), PreconditionError);
}

TEST(AbsIndex, CompleteGraphClosedForm) {
    for (int n = 2; n <= 20; ++n)
        expect_rel(abs_index(build_complete(n)), n * (n - 1) / 2.0 * std::sqrt((n - 2.0) / (n - 1.0)));
}

TEST(AbsIndex, MatchesNaiveSumAndDegreePairs) {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate(EnumSpec{n, EnumMode::kConnected, std::nullopt})) {
            const double v = abs_index(g);
            expect_rel(v, oracle::naive_abs(g));
            const auto pairs = degree_pair_multiset(g);
            long long edges = 0;
            for (const auto& p : pairs) edges += p.multiplicity;
            ASSERT_EQ(static_cast<std::size_t>(edges), g.edge_count());
            EXPECT_EQ(abs_from_degree_pairs(pairs), v);
        }
}

TEST(AbsIndex, RelabelingIsBitExact) {
    std::mt19937_64 rng(17);
    for (int n = 3; n <= 30; n += 3) {
        GraphBuilder b(n);
        std::bernoulli_distribution coin(0.4);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) b.add_edge(u, v);
        const Graph g = std::move(b).build();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 10; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            ASSERT_EQ(abs_index(relabel(g, perm)), abs_index(g));
        }
    }
}

TEST(AbsIndex, EdgeAdditionIncreasesAbs) {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : enumerate(EnumSpec{n, EnumMode::kConnected, std::nullopt})) {
            const double base = abs_index(g);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.has_edge(u, v)) ASSERT_GT(abs_index(add_edge(g, u, v)), base) << to_graph6(g);
        }
}
