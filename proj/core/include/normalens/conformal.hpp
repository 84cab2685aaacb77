#pragma once

#include <span>
#include <utility>
#include <vector>

#include "normalens/ensemble.hpp"

namespace normalens {

/// Unfolding scale g(s) = (2 pi s^2 / (n alpha))^(1/alpha): the disk radius
/// at which the mean eigenvalue count equals pi s^2. Defined for s >= 0.
double scale_g(const EnsembleParams& params, double s);

/// phi(w) = sqrt(n) w^(alpha/2), principal branch. Maps the sector
/// |Arg w| < 2 pi / alpha onto the plane. Origin is a domain error for
/// non-integer alpha/2.
Complex map_phi(const EnsembleParams& params, Complex w);

/// phi'(w) = sqrt(n) (alpha/2) w^(alpha/2 - 1), principal branch.
Complex map_phi_derivative(const EnsembleParams& params, Complex w);

/// phi^{-1}(w) = (w / sqrt(n))^(2/alpha), principal branch; the inverse of
/// map_phi on the principal sector.
Complex map_phi_inverse(const EnsembleParams& params, Complex w);

/// u(w) = sqrt(alpha / 2 pi) w.
Complex map_u(const EnsembleParams& params, Complex w);

/// u^{-1}(w) = sqrt(2 pi / alpha) w.
Complex map_u_inverse(const EnsembleParams& params, Complex w);

/// The parameter-free Gaussian kernel K(z,w) = (1/pi) e^{z w̄ - |z|^2/2 - |w|^2/2}.
Complex universal_kernel(Complex z, Complex w);

/// The unfolded kernel (2/alpha) e^{(2 pi / alpha)(z w̄ - |z|^2/2 - |w|^2/2)};
/// equal on the diagonal to 2/alpha, and identical to universal_kernel only
/// at alpha = 2 pi.
Complex rescaled_kernel(const EnsembleParams& params, Complex z, Complex w);

/// sin(pi (x-y)) / (pi (x-y)) with the removable singularity at x = y.
double sine_kernel(double x, double y);

enum class IdentityKind {
    phi_identity,
    u_identity,
    g_composition,
    phi_roundtrip,
};

const char* to_string(IdentityKind kind);

struct IdentityResidual {
    IdentityKind identity = IdentityKind::phi_identity;
    double max_abs_residual = 0.0;   // max relative residual over the set
    int points_checked = 0;
};

using ComplexPair = std::pair<Complex, Complex>;

/// n * kernel_asymptotic(z,w) == phi'(z) K(phi(z), phi(w)) conj(phi'(w)),
/// exact algebra on pairs inside the principal sector. The residual is
/// |lhs - rhs| / max(|lhs|, |rhs|).
IdentityResidual verify_phi_identity(const EnsembleParams& params,
                                     std::span<const ComplexPair> pairs);

/// rescaled_kernel(z,w) == c K(c z, c w) c with c = sqrt(2 pi / alpha), the
/// plane rescaling carrying the universal kernel onto the unfolded one (the
/// inverse of map_u). Exact algebra for all finite pairs.
IdentityResidual verify_u_identity(const EnsembleParams& params,
                                   std::span<const ComplexPair> pairs);

/// scale_g(s) == phi^{-1}(u^{-1}(s)) for real s > 0.
IdentityResidual verify_g_composition(const EnsembleParams& params,
                                      std::span<const double> s_values);

/// map_phi_inverse(map_phi(w)) == w for Arg w inside (-2 pi/alpha, 2 pi/alpha).
IdentityResidual verify_phi_roundtrip(const EnsembleParams& params,
                                      std::span<const Complex> points);

/// Deterministic default point sets (fixed internal seed).
std::vector<ComplexPair> default_sector_pairs(const EnsembleParams& params,
                                              int count = 64);
std::vector<ComplexPair> default_plane_pairs(int count = 64);
std::vector<double> default_g_arguments();
std::vector<Complex> default_sector_points(const EnsembleParams& params,
                                           int count = 32);

}  // namespace normalens
