#pragma once

#include "normalens/complex.hpp"

namespace normalens {

/// Parameters of the radial ensemble with potential V(z) = |z|^alpha:
/// the exponent alpha >= 2 (real) and the matrix size n >= 1.
class EnsembleParams {
public:
    EnsembleParams(double alpha, int n);

    double alpha() const { return alpha_; }
    int n() const { return n_; }

private:
    double alpha_;
    int n_;
};

/// Angular sector {w : |wrapped(arg w - center_arg)| < half_width}.
struct AngularRegion {
    double center_arg = 0.0;
    double half_width = 0.0;

    bool contains(double angle) const {
        return std::abs(wrap_angle(angle - center_arg)) < half_width;
    }
};

/// Radius of the eigenvalue support (droplet): (2/alpha)^(1/alpha).
double support_radius(const EnsembleParams& params);

/// Equilibrium density alpha^2 |z|^(alpha-2) / (4 pi) inside the closed
/// support, 0 outside. Reduces to 1/pi everywhere inside for alpha = 2.
double density_at(const EnsembleParams& params, Complex z);

/// The sector of half-width 2 pi / alpha about arg z. Throws for z = 0.
AngularRegion delta_region(const EnsembleParams& params, Complex z);

/// True iff both points lie in the closed support and the wrapped angular
/// distance |arg z - arg w| is strictly below 2 pi / alpha.
/// The origin has no argument; z = 0 or w = 0 is a domain error.
bool in_delta_region(const EnsembleParams& params, Complex z, Complex w);

}  // namespace normalens
