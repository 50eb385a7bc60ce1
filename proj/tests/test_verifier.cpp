#include <gtest/gtest.h>

#include <cmath>

#include "absx/absx.hpp"
#include "oracles.hpp"

using namespace absx;

namespace {

void expect_confirmed(const ExtremalReport& r) {
    EXPECT_EQ(r.verdict, Verdict::kConfirmed) << describe(r.constraint) << " n=" << r.order;
    ASSERT_TRUE(r.expected.has_value());
    ASSERT_EQ(r.maximizers.size(), 1U);
    EXPECT_EQ(r.maximizers.front(), r.expected->form);
    EXPECT_NEAR(*r.max_abs, r.expected->closed_form, kTieTolerance);
}

} // namespace

TEST(Verifier, CutVertexExamples) {
    const auto k5 = verify_extremal(CutVertices{0}, 5);
    expect_confirmed(k5);
    EXPECT_TRUE(is_isomorphic(k5.maximizers.front().to_graph(), build_complete(5)));
    EXPECT_NEAR(*k5.max_abs, 10.0 * std::sqrt(0.75), 1e-12);

    const auto p5 = verify_extremal(CutVertices{3}, 5);
    expect_confirmed(p5);
    EXPECT_TRUE(is_isomorphic(p5.maximizers.front().to_graph(), build_path(5)));
    EXPECT_EQ(p5.class_size, 1U);
}

TEST(Verifier, BipartiteKappaExample) {
    const auto r = verify_extremal(BipartiteConnectivity{3}, 7);
    expect_confirmed(r);
    EXPECT_TRUE(is_isomorphic(r.maximizers.front().to_graph(), build_complete_bipartite(3, 4)));
    EXPECT_NEAR(*r.max_abs, 12.0 * std::sqrt(5.0 / 7.0), 1e-12);
}

TEST(Verifier, KPartitenessExample) {
    const auto r = verify_extremal(KPartiteness{2, 2}, 8);
    expect_confirmed(r);
    EXPECT_TRUE(is_isomorphic(r.maximizers.front().to_graph(), build_kr_join_multipartite(2, turan_parts(6, 2))));
}

TEST(Verifier, AllCutVertexClassesUpToSeven) {
    for (int n = 3; n <= 7; ++n) {
        std::vector<ClassConstraint> cs;
        for (int p = 0; p <= n - 2; ++p) cs.push_back(CutVertices{p});
        for (const auto& r : verify_extremal_batch(cs, n)) {
            expect_confirmed(r);
            ASSERT_TRUE(r.block_structure_ok.has_value());
            EXPECT_TRUE(*r.block_structure_ok);
        }
    }
}

TEST(Verifier, BatchMatchesSingle) {
    const std::vector<ClassConstraint> cs{CutVertices{1}, BipartiteConnectivity{2}, KPartiteness{3, 1}};
    const auto batch = verify_extremal_batch(cs, 7);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto single = verify_extremal(cs[i], 7);
        EXPECT_EQ(batch[i].class_size, single.class_size);
        EXPECT_EQ(batch[i].maximizers, single.maximizers);
        EXPECT_EQ(batch[i].verdict, single.verdict);
        EXPECT_EQ(batch[i].max_abs, single.max_abs);
    }
}

TEST(Verifier, MaximumMatchesBruteForceOverClass) {
    const int n = 6;
    for (int p = 0; p <= n - 2; ++p) {
        double best = -1.0;
        std::size_t size = 0;
        for (const Graph& g : enumerate(EnumSpec{n, EnumMode::kConnected, std::nullopt}))
            if (oracle::cut_vertex_count(g) == p) {
                ++size;
                best = std::max(best, oracle::naive_abs(g));
            }
        const auto r = verify_extremal(CutVertices{p}, n);
        EXPECT_EQ(r.class_size, size);
        EXPECT_NEAR(*r.max_abs, best, 1e-12);
    }
}

TEST(Verifier, VacuousAndDescriptive) {
    const auto empty = verify_extremal(CutVertices{5}, 5);
    EXPECT_EQ(empty.verdict, Verdict::kVacuous);
    EXPECT_EQ(empty.class_size, 0U);
    EXPECT_FALSE(empty.max_abs.has_value());

    const auto r0 = verify_extremal(KPartiteness{2, 0}, 5);
    EXPECT_EQ(r0.verdict, Verdict::kDescriptive);
    EXPECT_FALSE(r0.expected.has_value());
    EXPECT_EQ(r0.class_size, 5U);

    const auto small = verify_extremal(BipartiteConnectivity{1}, 6);
    EXPECT_EQ(small.verdict, Verdict::kDescriptive);
    EXPECT_GT(small.class_size, 0U);

    EXPECT_EQ(verify_extremal(BipartiteConnectivity{4}, 7).verdict, Verdict::kVacuous);
}

TEST(Verifier, EnvelopeAndValidation) {
    EXPECT_THROW(verify_extremal(CutVertices{1}, 10), EnvelopeError);
    EXPECT_THROW(verify_extremal(CutVertices{-1}, 5), PreconditionError);
}

TEST(Verifier, TieToleranceCollectsNearTies) {
    // With a huge tolerance every member counts as a maximizer, so a
    // non-singleton class is refuted.
    VerifyOptions loose;
    loose.tie_tolerance = 100.0;
    const auto r = verify_extremal(CutVertices{1}, 6, loose);
    EXPECT_EQ(r.maximizers.size(), r.class_size);
    EXPECT_EQ(r.verdict, Verdict::kRefuted);
}

TEST(Verifier, DeterministicAcrossWorkers) {
    const std::vector<ClassConstraint> cs{CutVertices{2}, KPartiteness{2, 1}, BipartiteConnectivity{2}};
    const auto a = verify_extremal_batch(cs, 8, VerifyOptions{1});
    const auto b = verify_extremal_batch(cs, 8, VerifyOptions{4});
    for (std::size_t i = 0; i < cs.size(); ++i) {
        EXPECT_EQ(a[i].maximizers, b[i].maximizers);
        EXPECT_EQ(a[i].max_abs, b[i].max_abs);
        EXPECT_EQ(a[i].class_size, b[i].class_size);
    }
}

TEST(Verifier, CliqueBlockStructure) {
    EXPECT_TRUE(has_clique_block_structure(build_knp(7, 2)));
    EXPECT_TRUE(has_clique_block_structure(build_path(5)));
    EXPECT_FALSE(has_clique_block_structure(build_cycle(5)));
    // Star: the centre lies in three blocks.
    EXPECT_FALSE(has_clique_block_structure(build_complete_bipartite(1, 3)));
}

TEST(Extremal, Predictions) {
    EXPECT_EQ(predict_extremal(CutVertices{2}, 7)->family, "K_7^2");
    EXPECT_EQ(predict_extremal(KPartiteness{3, 2}, 9)->family, "K_2 v T(7,3)");
    EXPECT_EQ(predict_extremal(BipartiteConnectivity{1}, 8)->family, "Kbar_1[4,2]");
    EXPECT_EQ(predict_extremal(BipartiteConnectivity{2}, 8)->family, "Kbar_2[4,1]");
    EXPECT_EQ(predict_extremal(BipartiteConnectivity{3}, 8)->family, "K_{3,5}");
    EXPECT_EQ(predict_extremal(BipartiteConnectivity{2}, 9)->family, "Kbar_2[4,2]");
    EXPECT_FALSE(predict_extremal(BipartiteConnectivity{1}, 6).has_value());
    EXPECT_FALSE(predict_extremal(KPartiteness{2, 0}, 6).has_value());
    EXPECT_FALSE(predict_extremal(CutVertices{5}, 6).has_value());
}

TEST(Extremal, BoundEqualsBuiltGraph) {
    for (int n = 7; n <= 30; ++n)
        for (int kappa = 1; 2 * kappa <= n; ++kappa) {
            const auto e = expected_extremal(BipartiteConnectivity{kappa}, n);
            ASSERT_TRUE(e.has_value());
            EXPECT_EQ(e->graph.order(), n);
            EXPECT_NEAR(abs_index(e->graph), e->closed_form, 1e-12 * e->closed_form);
            if (n <= 12) EXPECT_EQ(vertex_connectivity(e->graph), kappa) << "n=" << n << " kappa=" << kappa;
        }
}
