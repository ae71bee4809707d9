#ifndef AUXZETA_BOUNDS_HPP
#define AUXZETA_BOUNDS_HPP

#include "auxzeta/quadrature.hpp"
#include "auxzeta/siegel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace auxzeta {

// Constants of the lower bound Re I_n >= A_n - B_n - C_n, each times sqrt(n).
inline constexpr double kALowerConstant = 1.471;
inline constexpr double kBUpperConstant = 1.0 / 3.0;
inline constexpr double kCUpperConstant = 1.0 / 16.0;
inline constexpr double kBFirstTermDivisor = 574.0;
inline constexpr double kSinhEnvelopeCap = 11.0 / 5.0;
// Smallest n covered by the analytic lemmas.
inline constexpr int kLemmaThreshold = 9;
// Certification demands a value exceed this multiple of its error estimate.
inline constexpr double kErrorBudgetFactor = 10.0;

/// Lemma-derived bounds at one n. Formula values are filled for every n; they
/// are only proven for n >= 9 (`lemma_applies`).
struct BoundReport {
    int n = 0;
    double A_lower = 0.0;
    double B_upper = 0.0;
    double C_upper = 0.0;
    double margin_lower = 0.0;
    bool lemma_applies = false;
};

BoundReport bound_report(int n);

/// Directly integrated pieces of I_n at one n.
struct DecompositionReport {
    int n = 0;
    double A_direct = 0.0;
    double A_error = 0.0;
    double B_direct = 0.0;
    double B_error = 0.0;
    double C_direct = 0.0;
    double C_error = 0.0;
    Complex I_n{0.0, 0.0};
    double re_I_direct = 0.0;
    double I_error = 0.0;
    bool converged = true;

    double error_budget() const { return A_error + B_error + C_error + I_error; }
};

DecompositionReport decompose_direct(int n, const QuadratureConfig &cfg = {});
DecompositionReport decompose_pieces(int n, const InPieces &pieces);

// --- Lemma on the weight envelopes -------------------------------------------

struct EnvelopeCheck {
    std::string name;
    bool checked = false;
    bool passed = true;
    // Smallest (allowed side - checked side) seen on the grid, in log space.
    double worst_margin = 0.0;
    std::optional<double> offending_x;
};

struct EnvelopeReport {
    int n = 0;
    int grid_points = 0;
    EnvelopeCheck lower_gaussian;     // (e x^2 e^{-x^2})^n >= (2/3) e^{-2n(x-1)^2} on the window
    EnvelopeCheck left_gaussian;      // e x^2 e^{-x^2} <= e^{-2(x-1)^2} on (0, 1)
    EnvelopeCheck right_gaussian;     // e x^2 e^{-x^2} <= e^{-(x-1)^2} on [1, X]
    EnvelopeCheck monotone_exponent;  // f(x) = 2(x-1)^2 + 1 - x^2 + 2 ln x has f' = 2(x-1)^2/x >= 0
    bool left_equality_at_one = false;
    bool right_equality_at_one = false;

    bool passed() const;
};

/// Grid check of the three envelope inequalities (the window check needs n >= 9,
/// below that it is skipped) plus the monotonicity certificate used by the window bound.
EnvelopeReport check_weight_envelopes(int n, int grid_points = 10000);

// --- Lemma on A_n --------------------------------------------------------------

/// e^{-sqrt(2 pi)} / (1 - e^{-2 sqrt(2 pi)}), the geometric remainder of U / (1 - V).
double a_remainder_constant();

/// J = int_{-sqrt2}^{sqrt2} (2 e^{-y sqrt(pi)/2} cos(y sqrt(pi)/2) - c) e^{-y^2} dy.
QuadratureResult constant_A_integral(const QuadratureConfig &cfg = {});

/// (2 / (3 sqrt 2)) J; A_n >= constant_A() / sqrt(n) for n >= 9.
double constant_A(const QuadratureConfig &cfg = {});

// --- Lemma on B_n --------------------------------------------------------------

/// e^{a_9/3} / sinh(a_9/3), the sharp constant behind 1/sinh(a_n x) <= (11/5) e^{-a_n x}.
double sinh_envelope_constant();

struct SinhEnvelopeReport {
    double sharp_constant = 0.0;
    bool below_cap = false;
    bool grid_passed = true;
    std::optional<std::pair<int, double>> offending;  // (n, x)
};

/// Checks the constant against 11/5 and the envelope on x in (1/3, x_max] for each n >= 9.
SinhEnvelopeReport check_sinh_envelope(const std::vector<int> &ns, int grid_points = 10000,
                                       double x_max = 5.0);

/// int_{-inf}^{-sqrt2} e^{-y^2 - y sqrt(pi)/2} dy.
QuadratureResult b_gaussian_integral(const QuadratureConfig &cfg = {});

/// int_0^{1/3} e x e^{-x^2} dx, which must stay below 1/3.
QuadratureResult b_first_piece_integral(const QuadratureConfig &cfg = {});

struct BoundB {
    int n = 0;
    double term1 = 0.0;        // e^{a_n} / (3^n a_n)
    double term1_cap = 0.0;    // 1 / (574 sqrt n)
    double gaussian = 0.0;     // b_gaussian_integral
    double term2 = 0.0;        // (11 / (5 sqrt(2n))) * gaussian
    double total = 0.0;
    double cap = 0.0;          // 1 / (3 sqrt n)
    double first_piece = 0.0;  // b_first_piece_integral

    bool holds() const { return term1 <= term1_cap && total <= cap && first_piece < 1.0 / 3.0; }
    double slack() const { return cap - total; }
};

BoundB bound_B(int n, const QuadratureConfig &cfg = {});
BoundB bound_B_from(int n, double gaussian, double first_piece);

/// e^{a_n} / (3^n a_n), evaluated in log space.
double b_first_term(int n);

// --- Lemma on C_n --------------------------------------------------------------

/// int_1^inf e^{-y^2 - y sqrt(pi/2)} dy.
QuadratureResult c_gaussian_integral(const QuadratureConfig &cfg = {});

struct BoundC {
    int n = 0;
    double integral = 0.0;
    double value = 0.0;  // (11 / (5 sqrt n)) * integral
    double cap = 0.0;    // 1 / (16 sqrt n)

    bool holds() const { return value <= cap; }
};

BoundC bound_C(int n, const QuadratureConfig &cfg = {});
BoundC bound_C_from(int n, double integral);

// --- Certification -------------------------------------------------------------

/// n-independent numbers shared by every lemma-bound certificate.
struct LemmaConstants {
    double constant_A = 0.0;
    double sinh_constant = 0.0;
    double b_gaussian = 0.0;
    double b_first_piece = 0.0;
    double c_integral = 0.0;
    bool converged = true;

    bool a_holds() const { return constant_A >= kALowerConstant; }
    bool sinh_holds() const { return sinh_constant <= kSinhEnvelopeCap; }
};

LemmaConstants compute_lemma_constants(const QuadratureConfig &cfg = {});

enum class CertMethod { direct, lemma_bounds, both };
const char *to_string(CertMethod m);

struct Certificate {
    int n = 0;
    CertMethod method = CertMethod::direct;
    double re_I_n = 0.0;
    double lower_bound_used = 0.0;
    bool verified = false;
    std::string failure;  // empty when verified
};

/// Direct check for n <= 9 (Re I_n > 10 x error), lemma margin for n >= 9; both at n = 9.
Certificate certify(int n, const QuadratureConfig &cfg = {});
Certificate certify_from(const DecompositionReport &d, const LemmaConstants &lemma);

} // namespace auxzeta

#endif // AUXZETA_BOUNDS_HPP
