#include "auxzeta/sweep.hpp"

#include <gtest/gtest.h>

#include <cstring>

using namespace auxzeta;

namespace {

void expect_identical(const SweepRecord &a, const SweepRecord &b) {
    ASSERT_EQ(a.n, b.n);
    EXPECT_EQ(std::memcmp(&a.decomposition.I_n, &b.decomposition.I_n, sizeof(Complex)), 0) << a.n;
    EXPECT_EQ(a.decomposition.A_direct, b.decomposition.A_direct);
    EXPECT_EQ(a.decomposition.B_direct, b.decomposition.B_direct);
    EXPECT_EQ(a.decomposition.C_direct, b.decomposition.C_direct);
    EXPECT_EQ(a.asymptotic_ratio, b.asymptotic_ratio);
    EXPECT_EQ(a.rprime.log_modulus, b.rprime.log_modulus);
    EXPECT_EQ(a.rprime.argument, b.rprime.argument);
    EXPECT_EQ(a.certificate.verified, b.certificate.verified);
    EXPECT_EQ(a.error, b.error);
}

} // namespace

TEST(Sweep, SerialMatchesParallelForAnyWorkerCount) {
    const QuadratureConfig cfg;
    const LemmaConstants lemma = compute_lemma_constants(cfg);
    const auto serial = sweep_serial(1, 120, cfg, lemma);
    ASSERT_EQ(serial.size(), 120u);
    for (int workers : {1, 2, 3, 8}) {
        const auto par = sweep_parallel(1, 120, cfg, lemma, workers);
        ASSERT_EQ(par.size(), serial.size());
        for (std::size_t i = 0; i < par.size(); ++i)
            expect_identical(serial[i], par[i]);
    }
}

TEST(Sweep, AscendingAndVerified) {
    const QuadratureConfig cfg;
    const LemmaConstants lemma = compute_lemma_constants(cfg);
    const auto recs = sweep_parallel(5, 40, cfg, lemma, 4);
    for (std::size_t i = 0; i < recs.size(); ++i)
        EXPECT_EQ(recs[i].n, 5 + static_cast<int>(i));
    EXPECT_TRUE(all_verified(recs));
}

TEST(Sweep, RatioTendsToOne) {
    const QuadratureConfig cfg;
    const LemmaConstants lemma = compute_lemma_constants(cfg);
    const auto recs = sweep_serial(1, 400, cfg, lemma);
    EXPECT_GT(std::abs(recs.front().asymptotic_ratio - 1.0), std::abs(recs.back().asymptotic_ratio - 1.0));
    EXPECT_LT(std::abs(recs.back().asymptotic_ratio - 1.0), 0.01);
}

TEST(Sweep, RejectsEmptyRange) {
    const QuadratureConfig cfg;
    const LemmaConstants lemma = compute_lemma_constants(cfg);
    EXPECT_THROW(sweep_serial(10, 9, cfg, lemma), std::invalid_argument);
    EXPECT_THROW(sweep_parallel(0, 9, cfg, lemma, 2), std::invalid_argument);
}

TEST(Sweep, PerNFailureIsRecordedNotThrown) {
    QuadratureConfig starved;
    starved.max_subdivisions = 1;
    starved.rel_tol = 1e-15;
    starved.abs_tol = 1e-300;
    const LemmaConstants lemma = compute_lemma_constants();
    const auto recs = sweep_serial(30, 31, starved, lemma);
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_FALSE(all_verified(recs));
}
