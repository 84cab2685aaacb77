#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace normalens {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
    if (!is_finite(z)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

/// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    double r = std::remainder(a, 2.0 * pi);  // (-pi, pi], except -pi can appear
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

/// Principal-branch power w^b = exp(b (ln|w| + i Arg w)).
/// 0^0 = 1, 0^b = 0 for b > 0; b < 0 at the origin is a domain error.
Complex pow_principal(Complex w, double b);

}  // namespace normalens
