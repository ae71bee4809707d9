#include "auxzeta/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace auxzeta {

namespace {

using std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double sqrt_n(int n) { return std::sqrt(static_cast<double>(n)); }

void require_index(int n) {
    if (n < 1)
        throw DomainError("trivial-zero index n must be a positive integer");
}

// Records one grid comparison `allowed >= checked` done in log space. Roundoff
// slack is a few ulps of the operands.
void record(EnvelopeCheck &c, double x, double allowed, double checked) {
    const double margin = allowed - checked;
    const double slack = 8.0 * kEps * (std::abs(allowed) + std::abs(checked));
    if (!c.checked || margin < c.worst_margin)
        c.worst_margin = margin;
    c.checked = true;
    if (margin < -slack && c.passed) {
        c.passed = false;
        c.offending_x = x;
    }
}

// f(x) = 2(x-1)^2 + 1 - x^2 + 2 ln x
double envelope_exponent(double x) {
    const double d = x - 1.0;
    return 2.0 * d * d + 2.0 * std::log1p(d) - d * (2.0 + d);
}

std::string describe(const char *what, double lhs, double rhs) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: %.17g vs %.17g", what, lhs, rhs);
    return buf;
}

} // namespace

BoundReport bound_report(int n) {
    require_index(n);
    BoundReport r;
    r.n = n;
    const double s = sqrt_n(n);
    r.A_lower = kALowerConstant / s;
    r.B_upper = kBUpperConstant / s;
    r.C_upper = kCUpperConstant / s;
    r.margin_lower = r.A_lower - r.B_upper - r.C_upper;
    r.lemma_applies = n >= kLemmaThreshold;
    return r;
}

DecompositionReport decompose_pieces(int n, const InPieces &pieces) {
    DecompositionReport d;
    d.n = n;
    d.A_direct = pieces.middle.value.real();
    d.A_error = pieces.middle.error_estimate;
    // The flank integrands differ from the kernel by a factor 1/i, which leaves moduli alone.
    d.B_direct = std::abs(pieces.left.value);
    d.B_error = pieces.left.error_estimate;
    d.C_direct = std::abs(pieces.right.value);
    d.C_error = pieces.right.error_estimate;
    const QuadratureResult total = pieces.total();
    d.I_n = total.value;
    d.re_I_direct = total.value.real();
    d.I_error = total.error_estimate;
    d.converged = total.converged;
    return d;
}

DecompositionReport decompose_direct(int n, const QuadratureConfig &cfg) {
    require_index(n);
    return decompose_pieces(n, integrate_I_n_pieces(n, cfg));
}

bool EnvelopeReport::passed() const {
    return (!lower_gaussian.checked || lower_gaussian.passed) && left_gaussian.passed &&
           right_gaussian.passed && monotone_exponent.passed && left_equality_at_one &&
           right_equality_at_one;
}

EnvelopeReport check_weight_envelopes(int n, int grid_points) {
    require_index(n);
    if (grid_points < 100)
        throw DomainError("envelope grid needs at least 100 points");

    EnvelopeReport rep;
    rep.n = n;
    rep.grid_points = grid_points;
    rep.lower_gaussian.name = "window lower bound (2/3) e^{-2n(x-1)^2}";
    rep.left_gaussian.name = "left envelope e^{-2(x-1)^2}";
    rep.right_gaussian.name = "right envelope e^{-(x-1)^2}";
    rep.monotone_exponent.name = "f'(x) = 2(x-1)^2/x >= 0";
    const double nd = static_cast<double>(n);
    const int last = grid_points - 1;

    if (n >= kLemmaThreshold) {
        const double h = 1.0 / sqrt_n(n);
        const double log_two_thirds = std::log(2.0 / 3.0);
        for (int i = 0; i <= last; ++i) {
            const double x = (1.0 - h) + 2.0 * h * i / last;
            const double d = x - 1.0;
            record(rep.lower_gaussian, x, log_weight(x, n), log_two_thirds - 2.0 * nd * d * d);
        }
    }

    // (0, 1]: the right end is the equality point.
    for (int i = 1; i <= grid_points; ++i) {
        const double x = static_cast<double>(i) / grid_points;
        const double d = x - 1.0;
        record(rep.left_gaussian, x, -2.0 * nd * d * d, log_weight(x, n));
    }

    // [1, X] with X past the point where both sides underflow in binary64.
    const double x_end = 1.0 + std::sqrt(746.0 / nd) + 0.5;
    for (int i = 0; i <= last; ++i) {
        const double x = 1.0 + (x_end - 1.0) * i / last;
        const double d = x - 1.0;
        record(rep.right_gaussian, x, -nd * d * d, log_weight(x, n));
    }

    rep.left_equality_at_one = eval_weight(1.0, n) == std::exp(-2.0 * nd * 0.0);
    rep.right_equality_at_one = eval_weight(1.0, n) == std::exp(-nd * 0.0);

    // Central differences of f on [0.05, 3]: nonnegative and close to 2(x-1)^2/x.
    const double step = 1e-5;
    for (int i = 0; i <= last; ++i) {
        const double x = 0.05 + (3.0 - 0.05) * i / last;
        const double fd = (envelope_exponent(x + step) - envelope_exponent(x - step)) / (2.0 * step);
        const double exact = 2.0 * (x - 1.0) * (x - 1.0) / x;
        // Truncation of the difference is O(step^2 f'''), roundoff O(eps / step).
        const double tol = 1e-8 * (1.0 + 1.0 / (x * x * x));
        record(rep.monotone_exponent, x, fd + tol, 0.0);
        if (std::abs(fd - exact) > tol && rep.monotone_exponent.passed) {
            rep.monotone_exponent.passed = false;
            rep.monotone_exponent.offending_x = x;
        }
    }
    return rep;
}

double a_remainder_constant() {
    const double r = std::sqrt(2.0 * pi);
    return std::exp(-r) / -std::expm1(-2.0 * r);
}

QuadratureResult constant_A_integral(const QuadratureConfig &cfg) {
    const double c = a_remainder_constant();
    const double half_root_pi = 0.5 * std::sqrt(pi);
    const Integrand f = [c, half_root_pi](double y) -> Complex {
        const double g = 2.0 * std::exp(-y * half_root_pi) * std::cos(y * half_root_pi) - c;
        return g * std::exp(-y * y);
    };
    return integrate_finite(f, Interval(-std::numbers::sqrt2, std::numbers::sqrt2), cfg);
}

double constant_A(const QuadratureConfig &cfg) {
    const QuadratureResult j = constant_A_integral(cfg);
    if (!j.converged)
        throw ConvergenceError("constant_A quadrature did not converge");
    return 2.0 / (3.0 * std::numbers::sqrt2) * j.value.real();
}

double sinh_envelope_constant() {
    const double third_a9 = std::sqrt(9.0 * pi / 2.0) / 3.0;
    return std::exp(third_a9) / std::sinh(third_a9);
}

SinhEnvelopeReport check_sinh_envelope(const std::vector<int> &ns, int grid_points, double x_max) {
    if (grid_points < 100)
        throw DomainError("envelope grid needs at least 100 points");
    SinhEnvelopeReport rep;
    rep.sharp_constant = sinh_envelope_constant();
    rep.below_cap = rep.sharp_constant <= kSinhEnvelopeCap;

    for (int n : ns) {
        if (n < kLemmaThreshold)
            throw DomainError("sinh envelope is stated for n >= 9");
        const double a = std::sqrt(pi * n / 2.0);
        for (int i = 0; i < grid_points; ++i) {
            // (1/3, x_max], left end approached but excluded.
            const double x = 1.0 / 3.0 + (x_max - 1.0 / 3.0) * (i + 1) / grid_points;
            // 1/sinh(a x) <= K e^{-a x}  <=>  2 / (1 - e^{-2 a x}) <= K
            const double ratio = 2.0 / -std::expm1(-2.0 * a * x);
            if (ratio > rep.sharp_constant * (1.0 + 4.0 * kEps) || ratio > kSinhEnvelopeCap) {
                rep.grid_passed = false;
                rep.offending = std::make_pair(n, x);
                return rep;
            }
        }
    }
    return rep;
}

QuadratureResult b_gaussian_integral(const QuadratureConfig &cfg) {
    // y -> -y: int_{sqrt2}^inf e^{-y^2 + y sqrt(pi)/2} dy; decreasing past sqrt(pi)/4.
    const double c = 0.5 * std::sqrt(pi);
    const auto g = [c](double y) { return std::exp(-y * y + y * c); };
    return integrate_semi_infinite([&g](double y) -> Complex { return g(y); }, std::numbers::sqrt2,
                                   g, cfg);
}

QuadratureResult b_first_piece_integral(const QuadratureConfig &cfg) {
    const Integrand f = [](double x) -> Complex { return std::numbers::e * x * std::exp(-x * x); };
    return integrate_finite(f, Interval(0.0, 1.0 / 3.0), cfg);
}

double b_first_term(int n) {
    require_index(n);
    const double a = std::sqrt(pi * n / 2.0);
    return std::exp(a - n * std::log(3.0) - std::log(a));
}

BoundB bound_B_from(int n, double gaussian, double first_piece) {
    require_index(n);
    BoundB b;
    b.n = n;
    const double s = sqrt_n(n);
    b.term1 = b_first_term(n);
    b.term1_cap = 1.0 / (kBFirstTermDivisor * s);
    b.gaussian = gaussian;
    // e^{a_n} and e^{-a_n} cancel inside the Gaussian piece.
    b.term2 = kSinhEnvelopeCap / std::sqrt(2.0 * n) * gaussian;
    b.total = b.term1 + b.term2;
    b.cap = kBUpperConstant / s;
    b.first_piece = first_piece;
    return b;
}

BoundB bound_B(int n, const QuadratureConfig &cfg) {
    if (n < kLemmaThreshold)
        throw DomainError("bound_B is stated for n >= 9");
    const QuadratureResult g = b_gaussian_integral(cfg);
    const QuadratureResult p = b_first_piece_integral(cfg);
    if (!g.converged || !p.converged)
        throw ConvergenceError("bound_B quadrature did not converge");
    return bound_B_from(n, g.value.real(), p.value.real());
}

QuadratureResult c_gaussian_integral(const QuadratureConfig &cfg) {
    const double c = std::sqrt(pi / 2.0);
    const auto g = [c](double y) { return std::exp(-y * y - y * c); };
    return integrate_semi_infinite([&g](double y) -> Complex { return g(y); }, 1.0, g, cfg);
}

BoundC bound_C_from(int n, double integral) {
    require_index(n);
    BoundC c;
    c.n = n;
    c.integral = integral;
    c.value = kSinhEnvelopeCap / sqrt_n(n) * integral;
    c.cap = kCUpperConstant / sqrt_n(n);
    return c;
}

BoundC bound_C(int n, const QuadratureConfig &cfg) {
    if (n < kLemmaThreshold)
        throw DomainError("bound_C is stated for n >= 9");
    const QuadratureResult r = c_gaussian_integral(cfg);
    if (!r.converged)
        throw ConvergenceError("bound_C quadrature did not converge");
    return bound_C_from(n, r.value.real());
}

LemmaConstants compute_lemma_constants(const QuadratureConfig &cfg) {
    LemmaConstants k;
    const QuadratureResult j = constant_A_integral(cfg);
    const QuadratureResult g = b_gaussian_integral(cfg);
    const QuadratureResult p = b_first_piece_integral(cfg);
    const QuadratureResult c = c_gaussian_integral(cfg);
    k.constant_A = 2.0 / (3.0 * std::numbers::sqrt2) * j.value.real();
    k.sinh_constant = sinh_envelope_constant();
    k.b_gaussian = g.value.real();
    k.b_first_piece = p.value.real();
    k.c_integral = c.value.real();
    k.converged = j.converged && g.converged && p.converged && c.converged;
    return k;
}

const char *to_string(CertMethod m) {
    switch (m) {
    case CertMethod::direct:
        return "direct";
    case CertMethod::lemma_bounds:
        return "lemma-bounds";
    case CertMethod::both:
        return "both";
    }
    return "unknown";
}

Certificate certify_from(const DecompositionReport &d, const LemmaConstants &lemma) {
    Certificate cert;
    cert.n = d.n;
    cert.re_I_n = d.re_I_direct;
    const bool use_lemmas = d.n >= kLemmaThreshold;
    cert.method = use_lemmas ? CertMethod::both : CertMethod::direct;

    const double direct_floor = kErrorBudgetFactor * d.I_error;
    cert.lower_bound_used = d.re_I_direct - direct_floor;
    if (!d.converged) {
        cert.failure = "I_n quadrature did not converge";
        return cert;
    }
    if (!(d.re_I_direct > direct_floor)) {
        cert.failure = describe("Re I_n <= 10 x error estimate", d.re_I_direct, direct_floor);
        return cert;
    }

    if (use_lemmas) {
        const BoundReport br = bound_report(d.n);
        const BoundB bb = bound_B_from(d.n, lemma.b_gaussian, lemma.b_first_piece);
        const BoundC bc = bound_C_from(d.n, lemma.c_integral);
        cert.lower_bound_used = br.margin_lower;
        if (!lemma.converged) {
            cert.failure = "lemma constant quadrature did not converge";
            return cert;
        }
        if (!lemma.a_holds()) {
            cert.failure = describe("constant_A below 1.471", lemma.constant_A, kALowerConstant);
            return cert;
        }
        if (!lemma.sinh_holds()) {
            cert.failure = describe("sinh envelope constant above 11/5", lemma.sinh_constant,
                                    kSinhEnvelopeCap);
            return cert;
        }
        if (!bb.holds()) {
            cert.failure = describe("B_n pipeline above 1/(3 sqrt n)", bb.total, bb.cap);
            return cert;
        }
        if (!bc.holds()) {
            cert.failure = describe("C_n pipeline above 1/(16 sqrt n)", bc.value, bc.cap);
            return cert;
        }
        if (!(br.margin_lower > 0.0)) {
            cert.failure = describe("lemma margin not positive", br.margin_lower, 0.0);
            return cert;
        }
    }
    cert.verified = true;
    return cert;
}

Certificate certify(int n, const QuadratureConfig &cfg) {
    try {
        require_index(n);
        return certify_from(decompose_direct(n, cfg), compute_lemma_constants(cfg));
    } catch (const std::exception &e) {
        Certificate cert;
        cert.n = n;
        cert.method = n >= kLemmaThreshold ? CertMethod::both : CertMethod::direct;
        cert.failure = e.what();
        return cert;
    }
}

} // namespace auxzeta
