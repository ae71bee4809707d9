#include "auxzeta/quadrature.hpp"
#include "auxzeta/siegel.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

using namespace auxzeta;

namespace {

constexpr double kPi = std::numbers::pi;

Integrand real_fn(std::function<double(double)> g) {
    return [g = std::move(g)](double x) -> Complex { return g(x); };
}

bool same_bits(const QuadratureResult &a, const QuadratureResult &b) {
    return std::memcmp(&a.value, &b.value, sizeof a.value) == 0 &&
           std::memcmp(&a.error_estimate, &b.error_estimate, sizeof a.error_estimate) == 0 &&
           a.evaluations == b.evaluations && a.converged == b.converged;
}

} // namespace

TEST(Oracle, ErfcAgreesWithLibm) {
    // Sanity check on the test oracle itself before we lean on it.
    for (double x : {0.0, 0.3, 0.97, 1.5, 1.99, 2.0, 2.5, 4.0, 7.0}) {
        EXPECT_NEAR(oracle::erfc(x) / std::erfc(x), 1.0, 1e-13) << x;
    }
    EXPECT_NEAR(oracle::erf_series(1.0), std::erf(1.0), 1e-15);
}

TEST(GaussKronrod, ExactForDegree22Polynomials) {
    const PanelEstimate p = gauss_kronrod_15(real_fn([](double x) { return std::pow(x, 22); }), 0.0, 1.0);
    EXPECT_NEAR(p.kronrod.real(), 1.0 / 23.0, 1e-15);
    EXPECT_EQ(p.kronrod.imag(), 0.0);
}

TEST(IntegrateFinite, ZeroIntegrand) {
    const QuadratureResult r = integrate_finite([](double) { return Complex{}; }, Interval(0.0, 1.0));
    EXPECT_EQ(r.value, Complex(0.0, 0.0));
    EXPECT_EQ(r.error_estimate, 0.0);
    EXPECT_TRUE(r.converged);
}

TEST(IntegrateFinite, GaussianWindow) {
    const double s2 = std::numbers::sqrt2;
    const QuadratureResult r =
        integrate_finite(real_fn([](double y) { return std::exp(-y * y); }), Interval(-s2, s2));
    const double truth = oracle::gaussian_window();
    EXPECT_NEAR(truth, 1.6918067329451983, 1e-15);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.real(), truth, 1e-13);
    EXPECT_LE(std::abs(r.value.real() - truth), 10.0 * r.error_estimate);
}

TEST(IntegrateFinite, GaussianSecondMoment) {
    // int_0^inf y^2 e^{-pi y^2} dy = Gamma(3/2) / (2 pi^{3/2}) = 1/(4 pi); the tail past 10 is < e^{-300}.
    const double truth = std::tgamma(1.5) / (2.0 * std::pow(kPi, 1.5));
    EXPECT_NEAR(truth, 1.0 / (4.0 * kPi), 1e-17);
    const QuadratureResult r = integrate_finite(
        real_fn([](double y) { return y * y * std::exp(-kPi * y * y); }), Interval(0.0, 10.0));
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.real(), truth, 1e-13);
    EXPECT_LE(std::abs(r.value.real() - truth), 10.0 * r.error_estimate);
}

TEST(IntegrateFinite, ComplexIntegrand) {
    // int_0^pi e^{i x} dx = 2i
    const QuadratureResult r =
        integrate_finite([](double x) { return std::polar(1.0, x); }, Interval(0.0, kPi));
    EXPECT_NEAR(r.value.real(), 0.0, 1e-14);
    EXPECT_NEAR(r.value.imag(), 2.0, 1e-13);
}

TEST(IntegrateFinite, BlowUpReportsLocation) {
    const Integrand f = [](double x) -> Complex {
        return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
    };
    try {
        integrate_finite(f, Interval(0.0, 1.0));
        FAIL() << "expected IntegrandError";
    } catch (const IntegrandError &e) {
        EXPECT_GT(e.where(), 0.5);
        EXPECT_NE(std::string(e.what()).find("integrand blew up at x"), std::string::npos);
    }
}

TEST(IntegrateFinite, BudgetExhaustionIsFlagged) {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 3;
    cfg.rel_tol = 1e-14;
    cfg.abs_tol = 1e-300;
    const QuadratureResult r =
        integrate_finite([](double x) { return std::polar(1.0, 200.0 * x * x); }, Interval(0.0, 3.0), cfg);
    EXPECT_FALSE(r.converged);
}

TEST(IntegrateFinite, RejectsBadInputs) {
    EXPECT_THROW(Interval(1.0, 1.0), std::invalid_argument);
    EXPECT_THROW(Interval(0.0, std::numeric_limits<double>::infinity()), std::invalid_argument);
    QuadratureConfig cfg;
    cfg.rel_tol = 0.0;
    EXPECT_THROW(integrate_finite([](double) { return Complex{1.0}; }, Interval(0, 1), cfg),
                 std::invalid_argument);
    cfg = {};
    cfg.max_subdivisions = 0;
    EXPECT_THROW(integrate_finite([](double) { return Complex{1.0}; }, Interval(0, 1), cfg),
                 std::invalid_argument);
}

TEST(IntegrateFinite, ConvergedImpliesTolerance) {
    const QuadratureConfig cfg;
    for (double c : {0.1, 1.0, 5.0, 30.0}) {
        const QuadratureResult r = integrate_finite(
            [c](double x) { return std::polar(std::exp(-x), c * x); }, Interval(0.0, 4.0), cfg);
        ASSERT_TRUE(r.converged);
        EXPECT_LE(r.error_estimate, std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)));
    }
}

TEST(IntegrateFinite, Deterministic) {
    const auto kp = KernelParams(3);
    const Integrand f = [&kp](double x) { return weighted_kernel(x, kp); };
    const QuadratureResult a = integrate_finite(f, Interval(0.0, 4.0));
    const QuadratureResult b = integrate_finite(f, Interval(0.0, 4.0));
    EXPECT_TRUE(same_bits(a, b));
}

TEST(SemiInfinite, GaussianHalfLine) {
    const auto g = [](double y) { return std::exp(-kPi * y * y); };
    const QuadratureResult r = integrate_semi_infinite(real_fn(g), 0.0, g);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.real(), 0.5, 1e-13);
    EXPECT_LE(std::abs(r.value.real() - 0.5), 10.0 * r.error_estimate);
}

TEST(SemiInfinite, ShiftedGaussianTailOfCBound) {
    const double b = std::sqrt(kPi / 2.0);
    const auto g = [b](double y) { return std::exp(-y * y - y * b); };
    const QuadratureResult r = integrate_semi_infinite(real_fn(g), 1.0, g);
    const double truth = oracle::c_tail();
    EXPECT_NEAR(truth, 0.0281, 5e-5);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.real(), truth, 1e-14);
    EXPECT_LE(std::abs(r.value.real() - truth), 10.0 * r.error_estimate);
}

TEST(SemiInfinite, TruncationPointIsComputed) {
    const auto g = [](double y) { return std::exp(-y * y); };
    const double x = truncation_point(g, 0.0, 1e-18);
    // The cut-off must leave a tail below the threshold, and not be absurdly far out.
    EXPECT_LT(decay_tail_bound(g, x), 1e-18);
    EXPECT_GT(x, 6.0);
    EXPECT_LT(x, 8.0);
    // The true tail is below the bound.
    EXPECT_LT(std::sqrt(kPi) / 2.0 * oracle::erfc(x), decay_tail_bound(g, x));
}

TEST(SemiInfinite, CannotTruncate) {
    const auto g = [](double) { return 1.0; };
    EXPECT_THROW(integrate_semi_infinite(real_fn(g), 0.0, g), TruncationError);
}

TEST(SemiInfinite, WeightedKernelAtNOneMatchesFixedGrid) {
    const KernelParams kp(1);
    const double a = kp.a_n;
    const Integrand f = [&kp](double x) { return weighted_kernel(x, kp); };
    const DecayBound decay = [a](double x) {
        return 2.0 * std::exp(log_weight(x, 1) + a * (1.0 - x)) / -std::expm1(-2.0 * a);
    };
    const QuadratureResult lo = integrate_finite(f, Interval(0.0, 2.0));
    const QuadratureResult hi = integrate_semi_infinite(f, 2.0, decay);
    const QuadratureResult r = lo + hi;
    EXPECT_TRUE(r.converged);
    const Complex ref = oracle::reference_I_n(1);
    EXPECT_LT(std::abs(r.value - ref), 1e-10 * std::abs(ref));
}

// --- properties ---------------------------------------------------------------

TEST(QuadratureProperty, Linearity) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> centre(-1.0, 1.0);
    std::uniform_real_distribution<double> width(0.2, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        const double alpha = coef(rng), beta = coef(rng);
        const double c1 = centre(rng), w1 = width(rng), c2 = centre(rng), w2 = width(rng);
        const Integrand f = [=](double x) -> Complex { return std::exp(-(x - c1) * (x - c1) / w1); };
        const Integrand g = [=](double x) { return std::polar(1.0 / (1.0 + x * x), w2 * x + c2); };
        const Integrand h = [&](double x) { return alpha * f(x) + beta * g(x); };
        const Interval iv(-3.0, 2.5);
        const QuadratureResult rf = integrate_finite(f, iv), rg = integrate_finite(g, iv),
                               rh = integrate_finite(h, iv);
        const double budget = rh.error_estimate + std::abs(alpha) * rf.error_estimate +
                              std::abs(beta) * rg.error_estimate;
        EXPECT_LE(std::abs(rh.value - (alpha * rf.value + beta * rg.value)), budget + 1e-15)
            << "trial " << trial;
    }
}

TEST(QuadratureProperty, IntervalAdditivity) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> split(0.05, 0.95);
    const KernelParams kp(5);
    const Integrand f = [&kp](double x) { return weighted_kernel(x, kp); };
    for (int trial = 0; trial < 30; ++trial) {
        const double a = 0.0, c = 3.0;
        const double b = a + (c - a) * split(rng);
        const QuadratureResult whole = integrate_finite(f, Interval(a, c));
        const QuadratureResult parts = integrate_finite(f, Interval(a, b)) + integrate_finite(f, Interval(b, c));
        EXPECT_LE(std::abs(whole.value - parts.value),
                  whole.error_estimate + parts.error_estimate + 1e-16)
            << "split at " << b;
    }
}

TEST(QuadratureProperty, ErrorEstimateHonestyOnClosedForms) {
    struct Case {
        const char *name;
        std::function<QuadratureResult()> run;
        double truth;
    };
    const double s2 = std::numbers::sqrt2;
    const double root_pi = std::sqrt(kPi);
    std::vector<Case> corpus = {
        {"gaussian window",
         [=] { return integrate_finite(real_fn([](double y) { return std::exp(-y * y); }), Interval(-s2, s2)); },
         oracle::gaussian_window()},
        {"gaussian moment",
         [] {
             return integrate_finite(real_fn([](double y) { return y * y * std::exp(-kPi * y * y); }),
                                     Interval(0.0, 10.0));
         },
         1.0 / (4.0 * kPi)},
        {"half gaussian",
         [] {
             const auto g = [](double y) { return std::exp(-kPi * y * y); };
             return integrate_semi_infinite(real_fn(g), 0.0, g);
         },
         0.5},
        {"C tail",
         [] {
             const double b = std::sqrt(kPi / 2.0);
             const auto g = [b](double y) { return std::exp(-y * y - y * b); };
             return integrate_semi_infinite(real_fn(g), 1.0, g);
         },
         oracle::c_tail()},
        {"B tail (reflected)",
         [=] {
             const auto g = [=](double y) { return std::exp(-y * y + y * root_pi / 2.0); };
             return integrate_semi_infinite(real_fn(g), s2, g);
         },
         oracle::b_tail()},
        {"erfc(3) tail",
         [] {
             const auto g = [](double y) { return std::exp(-y * y); };
             return integrate_semi_infinite(real_fn(g), 3.0, g);
         },
         root_pi / 2.0 * oracle::erfc(3.0)},
    };
    for (const Case &c : corpus) {
        const QuadratureResult r = c.run();
        EXPECT_TRUE(r.converged) << c.name;
        EXPECT_LE(std::abs(r.value.real() - c.truth), 10.0 * r.error_estimate) << c.name;
        EXPECT_NEAR(r.value.real(), c.truth, 1e-12 * std::abs(c.truth)) << c.name;
    }
}
