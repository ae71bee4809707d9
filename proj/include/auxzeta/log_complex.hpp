#ifndef AUXZETA_LOG_COMPLEX_HPP
#define AUXZETA_LOG_COMPLEX_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace auxzeta {

/// Wrap an angle into (-pi, pi].
inline double normalize_angle(double theta) {
    double r = std::remainder(theta, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi)
        r += 2.0 * std::numbers::pi;
    return r;
}

/// Complex number held as (ln|z|, arg z). Zero has log_modulus = -inf.
struct LogComplex {
    double log_modulus = -std::numeric_limits<double>::infinity();
    double argument = 0.0;

    static LogComplex from_polar(double log_modulus, double argument) {
        return {log_modulus, normalize_angle(argument)};
    }

    static LogComplex from_complex(std::complex<double> z) {
        if (z == std::complex<double>{0.0, 0.0})
            return {};
        return {std::log(std::abs(z)), std::arg(z)};
    }

    /// Overflows to infinity (or flushes to zero) when |z| is not representable.
    std::complex<double> to_complex() const {
        return std::polar(std::exp(log_modulus), argument);
    }

    bool is_zero() const { return log_modulus == -std::numeric_limits<double>::infinity(); }

    LogComplex &operator*=(const LogComplex &rhs) {
        log_modulus += rhs.log_modulus;
        argument = normalize_angle(argument + rhs.argument);
        return *this;
    }

    LogComplex &operator/=(const LogComplex &rhs) {
        log_modulus -= rhs.log_modulus;
        argument = normalize_angle(argument - rhs.argument);
        return *this;
    }
};

inline LogComplex operator*(LogComplex lhs, const LogComplex &rhs) { return lhs *= rhs; }
inline LogComplex operator/(LogComplex lhs, const LogComplex &rhs) { return lhs /= rhs; }

} // namespace auxzeta

#endif // AUXZETA_LOG_COMPLEX_HPP
