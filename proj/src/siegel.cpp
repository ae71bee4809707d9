#include "auxzeta/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace auxzeta {

namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// pi * omega = b (1 + i).
const double kPiOmegaScale = pi / std::numbers::sqrt2;

const Complex &omega() {
    static const Complex w = std::polar(1.0, pi / 4.0);
    return w;
}

void require_index(int n) {
    if (n < 1)
        throw DomainError("trivial-zero index n must be a positive integer");
}

QuadratureResult require_converged(QuadratureResult r, const char *what) {
    if (!r.converged)
        throw ConvergenceError(what);
    return r;
}

// 1 / sin(pi omega y) = -2i e^{-b y} e^{i b y} / (1 - W), W = e^{-2 b y (1 - i)}.
// Returns the factor -2i e^{i b y} / (1 - W); the real exponential is left to the caller.
Complex inverse_sine_phase(double y) {
    const double b = kPiOmegaScale;
    const Complex one_minus_w = -complex_expm1(Complex(-2.0 * b * y, 2.0 * b * y));
    return -2.0 * kI * std::polar(1.0, b * y) / one_minus_w;
}

// i^n as a phase, reduced exactly.
double quarter_turns(int n) { return static_cast<double>(n % 4) * (pi / 2.0); }

// Maximiser of p ln y - pi y^2 - b y on y > 0.
double peak_of(double p) {
    const double b = kPiOmegaScale;
    return (-b + std::sqrt(b * b + 8.0 * pi * p)) / (4.0 * pi);
}

} // namespace

KernelParams::KernelParams(int n_) : n(n_), a_n(0.0), omega(auxzeta::omega()) {
    require_index(n_);
    a_n = std::sqrt(pi * n_ / 2.0);
}

double sin_pi(double x) {
    const double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
    if (r > 0.5)
        return std::sin(pi * (1.0 - r));
    if (r < -0.5)
        return -std::sin(pi * (1.0 + r));
    return std::sin(pi * r);
}

double cos_pi(double x) {
    const double r = std::abs(std::remainder(x, 2.0));
    if (r <= 0.5)
        return std::sin(pi * (0.5 - r));
    return -std::sin(pi * (r - 0.5));
}

Complex complex_expm1(Complex z) {
    const double re = z.real();
    const double im = z.imag();
    const double s = std::sin(0.5 * im);
    const double real_part = std::expm1(re) * std::cos(im) - 2.0 * s * s;
    return {real_part, std::exp(re) * std::sin(im)};
}

double log_weight(double x, int n) {
    // 1 + 2 ln x - x^2 = 2 log1p(d) - d (2 + d), d = x - 1, accurate near the peak.
    const double d = x - 1.0;
    return n * (2.0 * std::log1p(d) - d * (2.0 + d));
}

double eval_weight(double x, int n) {
    if (x < 0.0)
        throw DomainError("weight requires x >= 0");
    if (x == 0.0)
        return 0.0;
    return std::min(1.0, std::exp(log_weight(x, n)));
}

Complex eval_kernel(double x, const KernelParams &kp) {
    if (!(x > 0.0))
        throw DomainError("kernel requires x > 0");
    const double a = kp.a_n;
    const Complex u = 2.0 * std::exp(-a * (x - 1.0)) * std::polar(1.0, a * (x - 1.0));
    const Complex one_minus_v = -complex_expm1(Complex(-2.0 * a * x, 2.0 * a * x));
    return u / one_minus_v;
}

Complex weighted_kernel(double x, const KernelParams &kp) {
    if (x == 0.0)
        return {0.0, 0.0};
    const double a = kp.a_n;
    const double log_mod = log_weight(x, kp.n) - a * (x - 1.0);
    const Complex one_minus_v = -complex_expm1(Complex(-2.0 * a * x, 2.0 * a * x));
    return 2.0 * std::exp(log_mod) * std::polar(1.0, a * (x - 1.0)) / one_minus_v;
}

InPieces integrate_I_n_pieces(int n, const QuadratureConfig &cfg) {
    const KernelParams kp(n);
    const Integrand f = [&kp](double x) { return weighted_kernel(x, kp); };

    const double h = 1.0 / std::sqrt(static_cast<double>(n));
    const double left_end = std::max(0.0, 1.0 - h);
    const double right_start = 1.0 + h;

    InPieces pieces;
    if (left_end > 0.0)
        pieces.left = integrate_finite(f, Interval(0.0, left_end), cfg);
    pieces.middle = integrate_finite(f, Interval(left_end, right_start), cfg);

    // |1 - V| >= 1 - e^{-2a} once x >= 1.
    const double a = kp.a_n;
    const double denom = -std::expm1(-2.0 * a);
    const DecayBound decay = [n, a, denom](double x) {
        return 2.0 * std::exp(log_weight(x, n) + a * (1.0 - x)) / denom;
    };
    pieces.right = integrate_semi_infinite(f, right_start, decay, cfg);
    return pieces;
}

QuadratureResult compute_I_n(int n, const QuadratureConfig &cfg) {
    return integrate_I_n_pieces(n, cfg).total();
}

RLeftResult eval_R_left(ComplexPoint s, const QuadratureConfig &cfg, const RLeftOptions &opts) {
    if (!(s.sigma < 0.0))
        throw DomainError("representation valid only for Re s < 0");
    if (std::abs(s.t) > opts.t_max)
        throw DomainError("oscillation budget exceeded: |Im s| above t_max");

    const double p = -s.sigma;
    const double t = s.t;
    const double b = kPiOmegaScale;
    const double delta = opts.split;

    RLeftResult out;
    out.phase_factor = omega() * std::exp(-pi * t / 4.0) *
                       Complex(cos_pi(s.sigma / 4.0), sin_pi(s.sigma / 4.0));
    out.sine_factor = Complex(sin_pi(s.sigma / 2.0) * std::cosh(pi * t / 2.0),
                              cos_pi(s.sigma / 2.0) * std::sinh(pi * t / 2.0));

    // Near y = 0 the integrand is y^{p-1} * phi(y) with phi bounded; u = y^p makes it smooth.
    const double u_end = std::pow(delta, p);
    if (u_end > 0.0) {
        const Integrand near = [p, t, b](double u) -> Complex {
            const double log_y = std::log(u) / p;
            const double y = std::exp(log_y);
            // y / (1 - W) -> 1 / (2 b (1 - i)) as y -> 0.
            Complex y_over = 1.0 / (2.0 * b * Complex(1.0, -1.0));
            if (y > 1e-300)
                y_over = y / -complex_expm1(Complex(-2.0 * b * y, 2.0 * b * y));
            const Complex phi = std::polar(std::exp(-pi * y * y - b * y), -t * log_y + b * y) *
                                (-2.0 * kI) * y_over;
            return phi / p;
        };
        out.integral += integrate_finite(near, Interval(0.0, u_end), cfg);
    }

    const Integrand far = [p, t, b](double y) -> Complex {
        const double log_y = std::log(y);
        const double log_mod = p * log_y - pi * y * y - b * y;
        return std::polar(std::exp(log_mod), -t * log_y) * inverse_sine_phase(y);
    };
    const double denom = -std::expm1(-2.0 * b * delta);
    const DecayBound decay = [p, b, denom](double y) {
        return 2.0 * std::exp(p * std::log(y) - pi * y * y - b * y) / denom;
    };

    const double peak = peak_of(p);
    double tail_start = delta;
    if (peak > delta) {
        out.integral += integrate_finite(far, Interval(delta, peak), cfg);
        tail_start = peak;
    }
    out.integral += integrate_semi_infinite(far, tail_start, decay, cfg);

    out.value = out.phase_factor * out.sine_factor * out.integral.value;
    return out;
}

LogComplex rprime_from_I(int n, Complex I_n) {
    const KernelParams kp(n);
    const double nd = static_cast<double>(n);
    const double a = kp.a_n;
    // (omega sqrt(pi n) / 2) (i n / (pi e))^n
    const LogComplex prefactor = LogComplex::from_polar(
        std::log(std::sqrt(pi * nd) / 2.0) + nd * (std::log(nd) - std::log(pi) - 1.0),
        pi / 4.0 + quarter_turns(n));
    // 1 / (i e^{-i omega sqrt(pi n)}) = e^{-a} e^{-i (pi/2 - a)}
    const LogComplex normalizer = LogComplex::from_polar(-a, normalize_angle(a) - pi / 2.0);
    return prefactor * normalizer * LogComplex::from_complex(I_n);
}

LogComplex eval_rprime_trivial(int n, const QuadratureConfig &cfg) {
    require_index(n);
    const QuadratureResult r = require_converged(compute_I_n(n, cfg), "I_n quadrature did not converge");
    return rprime_from_I(n, r.value);
}

LogComplex eval_rprime_trivial_y(int n, const QuadratureConfig &cfg) {
    require_index(n);
    const double nd = static_cast<double>(n);
    const double b = kPiOmegaScale;
    // Rescale by the maximum of y^{2n} e^{-pi y^2 - b y} so the integral is O(1);
    // the absolute tolerances then stay meaningful for every n.
    const double split = peak_of(2.0 * nd);
    const double log_peak = 2.0 * nd * std::log(split) - pi * split * split - b * split;

    const Integrand f = [nd, log_peak](double y) -> Complex {
        if (y == 0.0)
            return {0.0, 0.0};
        const double log_mod = 2.0 * nd * std::log(y) - pi * y * y - kPiOmegaScale * y - log_peak;
        return std::exp(log_mod) * inverse_sine_phase(y);
    };

    const double denom = -std::expm1(-2.0 * b * split);
    const DecayBound decay = [nd, log_peak, b, denom](double y) {
        return 2.0 * std::exp(2.0 * nd * std::log(y) - pi * y * y - b * y - log_peak) / denom;
    };

    QuadratureResult r = integrate_finite(f, Interval(0.0, split), cfg);
    r += integrate_semi_infinite(f, split, decay, cfg);
    require_converged(r, "R'(-2n) y-integral did not converge");

    const LogComplex prefactor =
        LogComplex::from_polar(std::log(pi / 2.0) + log_peak, quarter_turns(n) + pi / 4.0);
    return prefactor * LogComplex::from_complex(r.value);
}

Complex asymptotic_I_normalized(int n) {
    const KernelParams kp(n);
    return std::sqrt(pi / (2.0 * n)) * eval_kernel(1.0, kp);
}

Complex asymptotic_I(int n) {
    const KernelParams kp(n);
    const double a = kp.a_n;
    // 1 / (i e^{-i omega sqrt(pi n)}) = e^{-a} e^{-i (pi/2 - a)}
    return asymptotic_I_normalized(n) * std::polar(std::exp(-a), a - pi / 2.0);
}

} // namespace auxzeta
