#ifndef AUXZETA_QUADRATURE_HPP
#define AUXZETA_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace auxzeta {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;
using DecayBound = std::function<double(double)>;

/// Finite integration range [lo, hi] with lo < hi.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_);
    double width() const { return hi - lo; }
};

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    // |f| mass below which a semi-infinite tail is dropped.
    double tail_threshold = 1e-18;

    void validate() const;
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;

    QuadratureResult &operator+=(const QuadratureResult &other);
};

QuadratureResult operator+(QuadratureResult lhs, const QuadratureResult &rhs);

/// Thrown when the integrand returns NaN or an infinity.
class IntegrandError : public std::runtime_error {
public:
    IntegrandError(const std::string &what, double x)
        : std::runtime_error(what), x_(x) {}
    double where() const { return x_; }

private:
    double x_;
};

/// Thrown when a semi-infinite range cannot be cut off below the tail threshold.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Single 7/15-point Gauss-Kronrod panel. Exposed for tests.
struct PanelEstimate {
    Complex kronrod;
    Complex gauss;
    double error;
};
PanelEstimate gauss_kronrod_15(const Integrand &f, double lo, double hi);

/// Globally adaptive G7/K15 integration over a finite interval.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol*|value|); ties go to the leftmost
/// panel. When the subdivision budget runs out the partial result is returned
/// with converged == false. Output is bit-identical for identical inputs.
QuadratureResult integrate_finite(const Integrand &f, const Interval &iv,
                                  const QuadratureConfig &cfg = {});

/// Integration over [lo, inf).
///
/// `decay` must bound |f| from above and be non-increasing beyond the cut-off.
/// The cut-off X is the smallest point found (doubling, then bisection) whose
/// upper Riemann-sum bound on the decay tail is below cfg.tail_threshold; the
/// tail bound is added to the error estimate.
QuadratureResult integrate_semi_infinite(const Integrand &f, double lo,
                                         const DecayBound &decay,
                                         const QuadratureConfig &cfg = {});

/// Upper bound for the integral of a non-increasing `decay` over [x, inf),
/// via a left Riemann sum on geometrically growing panels. Returns +inf when
/// the sum has not settled.
double decay_tail_bound(const DecayBound &decay, double x);

/// Cut-off point used by integrate_semi_infinite.
double truncation_point(const DecayBound &decay, double lo, double threshold);

} // namespace auxzeta

#endif // AUXZETA_QUADRATURE_HPP
