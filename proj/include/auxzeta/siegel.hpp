#ifndef AUXZETA_SIEGEL_HPP
#define AUXZETA_SIEGEL_HPP

#include "auxzeta/log_complex.hpp"
#include "auxzeta/quadrature.hpp"

#include <complex>
#include <stdexcept>

namespace auxzeta {

/// Raised for arguments outside the region where a representation is valid.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an integral feeding a scalar result did not converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Per-index constants for the trivial zero at s = -2n.
struct KernelParams {
    int n;
    double a_n;     // sqrt(pi n / 2)
    Complex omega;  // e^{i pi / 4}

    explicit KernelParams(int n);
};

/// s = sigma + i t.
struct ComplexPoint {
    double sigma;
    double t;
};

// sin(pi x) and cos(pi x) with exact argument reduction; both vanish exactly
// at their integer/half-integer zeros.
double sin_pi(double x);
double cos_pi(double x);

/// e^z - 1 without cancellation for small |z|.
Complex complex_expm1(Complex z);

/// n (1 + 2 ln x - x^2), the log of the Laplace weight.
double log_weight(double x, int n);

/// (e x^2 e^{-x^2})^n evaluated as exp(n (1 + 2 ln x - x^2)); 0 at x = 0.
double eval_weight(double x, int n);

/// i e^{-i omega sqrt(pi n)} / sin(omega x sqrt(pi n)) in the factored form U / (1 - V)
/// with U = 2 e^{-a(x-1)} e^{i a (x-1)}, V = e^{-2 a x} e^{2 i a x}. Requires x > 0.
Complex eval_kernel(double x, const KernelParams &kp);

/// eval_weight * eval_kernel with the exponentials merged before exponentiating,
/// so the product stays finite for any n. Returns 0 at x = 0.
Complex weighted_kernel(double x, const KernelParams &kp);

/// I_n split at 1 +- n^{-1/2}: left = (0, 1 - n^{-1/2}), middle, right = (1 + n^{-1/2}, inf).
/// For n = 1 the left piece is empty and the middle starts at 0.
struct InPieces {
    QuadratureResult left;
    QuadratureResult middle;
    QuadratureResult right;

    QuadratureResult total() const { return left + middle + right; }
};

InPieces integrate_I_n_pieces(int n, const QuadratureConfig &cfg = {});

/// I_n = i e^{-i omega sqrt(pi n)} * int_0^inf (e x^2 e^{-x^2})^n / sin(omega x sqrt(pi n)) dx.
QuadratureResult compute_I_n(int n, const QuadratureConfig &cfg = {});

struct RLeftOptions {
    double t_max = 50.0;
    // Below this point the integral is taken in the variable u = y^{-sigma}.
    double split = 1e-3;
};

/// R(s) = omega e^{pi i s / 4} sin(pi s / 2) * integral, for Re s < 0.
struct RLeftResult {
    Complex value;
    Complex phase_factor;  // omega e^{pi i s / 4}
    Complex sine_factor;   // sin(pi s / 2)
    QuadratureResult integral;  // int_0^inf y^{-s} e^{-pi y^2} / sin(pi omega y) dy

    double error_estimate() const {
        return std::abs(phase_factor * sine_factor) * integral.error_estimate;
    }
};

RLeftResult eval_R_left(ComplexPoint s, const QuadratureConfig &cfg = {},
                        const RLeftOptions &opts = {});

/// R'(-2n) from a previously computed I_n:
/// (omega sqrt(pi n) / 2) (i n / (pi e))^n * I_n / (i e^{-i omega sqrt(pi n)}).
LogComplex rprime_from_I(int n, Complex I_n);

/// R'(-2n) through I_n. Throws ConvergenceError if the integral did not converge.
LogComplex eval_rprime_trivial(int n, const QuadratureConfig &cfg = {});

/// R'(-2n) = i^n (pi omega / 2) int_0^inf y^{2n} e^{-pi y^2} / sin(pi omega y) dy,
/// integrated directly in y with the integrand rescaled by its peak.
LogComplex eval_rprime_trivial_y(int n, const QuadratureConfig &cfg = {});

/// Laplace asymptotic (pi / 2n)^{1/2} / sin(omega sqrt(pi n)) of the raw integral.
Complex asymptotic_I(int n);

/// Same asymptotic multiplied by i e^{-i omega sqrt(pi n)}, i.e. on the scale of I_n.
Complex asymptotic_I_normalized(int n);

} // namespace auxzeta

#endif // AUXZETA_SIEGEL_HPP
