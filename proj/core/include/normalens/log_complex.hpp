#pragma once

#include <limits>

#include "normalens/complex.hpp"

namespace normalens {

/// A complex number stored as (log-magnitude, phase). log_mag = -inf encodes
/// zero. The representation keeps products and huge/tiny magnitudes exact in
/// the exponent where a plain double would overflow or flush to zero.
struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    static LogComplex from_complex(Complex z) {
        if (z == Complex{0.0, 0.0}) return {};
        return {std::log(std::abs(z)), std::arg(z)};
    }

    Complex to_complex() const {
        if (log_mag == -std::numeric_limits<double>::infinity()) return {0.0, 0.0};
        const double m = std::exp(log_mag);
        return {m * std::cos(phase), m * std::sin(phase)};
    }
};

/// Kahan-compensated accumulator.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    void rescale(double factor) {
        sum *= factor;
        carry *= factor;
    }
};

}  // namespace normalens
