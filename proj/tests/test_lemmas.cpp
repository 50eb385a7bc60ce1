#include <gtest/gtest.h>

#include <cmath>

#include "absx/absx.hpp"

using namespace absx;

TEST(Lemmas, ZetaSignsAndMonotonicity) {
    for (int t = 1; t <= 10; ++t)
        for (int x = t + 3; x <= 100; ++x) {
            EXPECT_LT(zeta(x, t), 0.0);
            EXPECT_GT(zeta(x + 1, t), zeta(x, t));
        }
    EXPECT_EQ(check_zeta_monotone(1, 4, 100).verdict, LemmaVerdict::kPass);
    EXPECT_EQ(check_zeta1_monotone(10, 1, 16).verdict, LemmaVerdict::kPass);
    for (int x = 1; x <= 15; ++x) {
        EXPECT_GT(zeta1(10, x), 0.0);
        EXPECT_GT(zeta1(10, x + 1), zeta1(10, x));
    }
    EXPECT_THROW(check_zeta_monotone(1, 3, 10), PreconditionError);
    EXPECT_THROW(zeta(3, 2), PreconditionError);
}

TEST(Lemmas, MultipartiteShiftExamples) {
    EXPECT_GT(check_multipartite_shift(PartSizes{4, 2}, 0, 1), 0.0);
    EXPECT_GT(check_multipartite_shift(PartSizes{5, 1, 1}, 0, 1), 0.0);
    EXPECT_THROW(check_multipartite_shift(PartSizes{3, 3}, 0, 1), PreconditionError);
    const PartSizes p{6, 3, 2};
    EXPECT_NEAR(expanded_multipartite_shift(p, 0, 2), -check_multipartite_shift(p, 0, 2), 1e-12);
    EXPECT_LT(expanded_multipartite_shift(p, 0, 2), multipartite_shift_bound(p, 0, 2) + 1e-12);
}

TEST(Lemmas, JoinShiftExamples) {
    EXPECT_GT(check_kr_join_shift(1, PartSizes{4, 2}, 0, 1), 0.0);
    EXPECT_GT(check_kr_join_shift(3, PartSizes{3, 1}, 0, 1), 0.0);
    EXPECT_THROW(check_kr_join_shift(2, PartSizes{2, 2}, 0, 1), PreconditionError);
    const PartSizes p{7, 2, 3};
    EXPECT_NEAR(expanded_kr_join_shift(2, p, 0, 1), -check_kr_join_shift(2, p, 0, 1), 1e-12);
}

TEST(Lemmas, SixPartMergeExamples) {
    EXPECT_GT(check_sixpart_merge(SixPart{{1, 0, 2, 1, 1, 1}}), 0.0);
    EXPECT_GT(check_sixpart_merge(SixPart{{2, 1, 2, 1, 1, 1}}), 0.0);
    EXPECT_THROW(check_sixpart_merge(SixPart{{1, 0, 1, 1, 1, 1}}), PreconditionError);
    const SixPart s{{3, 1, 2, 2, 1, 2}};
    EXPECT_NEAR(expanded_sixpart_merge(s), check_sixpart_merge(s), 1e-10);
    EXPECT_GE(check_sixpart_merge(s), sixpart_merge_bound(s) - 1e-12);
}

TEST(Lemmas, Bl2Fl3Examples) {
    EXPECT_GE(check_bl2_merge(1, 1, 2, 1), 0.0);
    EXPECT_GE(check_fl3_merge(2, 1, 1, 1), 0.0);
    EXPECT_THROW(check_bl2_merge(1, 1, 1, 1), PreconditionError);
    EXPECT_THROW(check_fl3_merge(1, 1, 1, 1), PreconditionError);
}

TEST(Lemmas, KappaShiftExamples) {
    EXPECT_GT(check_kappa_shift(1, 3, 1), 0.0);
    EXPECT_GT(check_kappa_shift(2, 2, 2), 0.0);
    EXPECT_THROW(check_kappa_shift(3, 1, 1), PreconditionError);
}

TEST(Lemmas, ChainLemmaExamples) {
    EXPECT_EQ(check_fil2_chain(8, 1).verdict, LemmaVerdict::kPass);
    EXPECT_EQ(check_fil2_chain(8, 1).tuples_checked, 1U);
    EXPECT_EQ(check_fil2_chain(20, 3).verdict, LemmaVerdict::kPass);
    EXPECT_THROW(check_fil2_chain(7, 1), PreconditionError);
    EXPECT_EQ(check_fil3_chain(21, 4).verdict, LemmaVerdict::kPass);
    EXPECT_THROW(check_fil3_chain(8, 1), PreconditionError);
}

TEST(Lemmas, ChainStepPolynomialIsExact) {
    for (long long n = 8; n <= 200; n += 2)
        for (long long k = 1; n - 2 * k - 6 >= 0; ++k) {
            ASSERT_EQ(chain_step_squared_difference(n, k), chain_step_polynomial(n, k));
            ASSERT_GT(chain_step_polynomial(n, k), 0);
        }
}

TEST(Lemmas, ChainExamples) {
    auto peak_of = [](int n, int kappa) {
        int best_x = kappa;
        for (int x = kappa; x <= n - kappa - 2; ++x)
            if (abs_kappa_xy_closed(x, n - kappa - 1 - x, kappa) >
                abs_kappa_xy_closed(best_x, n - kappa - 1 - best_x, kappa))
                best_x = x;
        return best_x;
    };
    EXPECT_EQ(peak_of(10, 2), 5);
    EXPECT_EQ(peak_of(9, 1), 4);
    EXPECT_EQ(check_chains(10, 2).verdict, LemmaVerdict::kPass);
    EXPECT_EQ(check_chains(9, 1).verdict, LemmaVerdict::kPass);
    EXPECT_EQ(check_chains(8, 3).verdict, LemmaVerdict::kVacuous);
}

TEST(Lemmas, FinalTheoremFormulaExamples) {
    EXPECT_NEAR(*bipartite_kappa_bound(8, 1), abs_index(build_kappa_xy(4, 2, 1)), 1e-12);
    EXPECT_NEAR(*bipartite_kappa_bound(9, 2), abs_index(build_kappa_xy(4, 2, 2)), 1e-12);
    EXPECT_NEAR(*bipartite_kappa_bound(8, 4), 16.0 * std::sqrt(0.75), 1e-12);
    for (int n = 7; n <= 20; ++n)
        for (int kappa = 1; 2 * kappa <= n; ++kappa)
            EXPECT_EQ(check_final_theorem_formulas(n, kappa).verdict, LemmaVerdict::kPass) << n << " " << kappa;
    EXPECT_THROW(check_final_theorem_formulas(6, 1), PreconditionError);
}

TEST(Lemmas, PendantRelocationFinding) {
    const auto c = check_pendant_relocation();
    EXPECT_EQ(c.failure_count, 0U);
    EXPECT_EQ(c.verdict, LemmaVerdict::kPass);
    ASSERT_EQ(c.finding_count, 1U);
    EXPECT_NE(c.findings.front().find("not an identity"), std::string::npos);
    EXPECT_NEAR(pendant_shift_bound(3), 0.0, 1e-15);
    for (int m = 4; m <= 30; ++m) EXPECT_LT(pendant_shift_bound(m), 0.0);
}

TEST(Lemmas, ArgmaxSweeps) {
    const auto t = check_turan_argmax(30, 6);
    EXPECT_EQ(t.verdict, LemmaVerdict::kPass);
    EXPECT_EQ(t.finding_count, 0U);
    const auto j = check_join_argmax(20, 4, 5);
    EXPECT_EQ(j.verdict, LemmaVerdict::kPass);
    EXPECT_EQ(j.finding_count, 0U);
}

TEST(Lemmas, FullSuiteOnDefaultGrid) {
    for (const auto& id : lemma_ids()) {
        const auto c = run_lemma(id);
        EXPECT_EQ(c.id, id);
        EXPECT_EQ(c.failure_count, 0U) << id << ": " << (c.failures.empty() ? "" : c.failures.front());
        EXPECT_EQ(c.verdict, LemmaVerdict::kPass) << id;
        EXPECT_GT(c.tuples_checked, 0U) << id;
        if (id != "pendant-shift") EXPECT_EQ(c.finding_count, 0U) << id;
    }
    EXPECT_THROW(run_lemma("nosuch"), PreconditionError);
    LemmaGrid small;
    small.n_max = 7;
    EXPECT_THROW(run_lemma("zeta", small), PreconditionError);
}

TEST(Lemmas, StrictnessPolicy) {
    detail::CheckLog log;
    log.tuple();
    log.positive(1e-3, "clear", "a");
    log.positive(0.0, "zero", "b");
    log.positive(-1e-3, "negative", "c");
    const auto c = log.finish("policy", "grid");
    EXPECT_EQ(c.finding_count, 1U);
    EXPECT_EQ(c.failure_count, 1U);
    EXPECT_EQ(c.verdict, LemmaVerdict::kFail);
}
