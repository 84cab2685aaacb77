#pragma once

#include <string>
#include <vector>

#include "normalens/ensemble.hpp"

namespace normalens {

/// Leading-order asymptotic kernel, normalized by 1/n:
///
///   (1/n) Khat(z,w) = (alpha^2 / 4 pi) (z w̄)^{a/2 - 1}
///                     exp{ n [ (z w̄)^{a/2} - |z|^a/2 - |w|^a/2 ] }
///
/// with principal-branch fractional powers, computed in the log domain. On
/// the diagonal it equals density_at exactly. The origin is handled in
/// closed form when alpha/2 is an integer and is a domain error otherwise.
Complex kernel_asymptotic(const EnsembleParams& params, Complex z, Complex w);

/// kernel_asymptotic inside the Delta sector (both points in the closed
/// support, wrapped angular distance < 2 pi / alpha), exact 0 outside.
Complex kernel_piecewise(const EnsembleParams& params, Complex z, Complex w);

/// Log of |exp{n (z w̄)^{a/2}}| = n (rs)^{a/2} cos[a Arg(z w̄) / 2], with
/// r = |z|, s = |w| and the principal argument. Returned in the log to avoid
/// overflow. z = 0 or w = 0 is a domain error.
double cross_term_log_magnitude(const EnsembleParams& params, Complex z, Complex w);

/// Angles k * 4 pi / alpha (k integer, k != 0) that fit in (-pi, pi], sorted
/// ascending: the angular offsets at which the untruncated asymptotic kernel
/// repeats its main peak. Empty for alpha = 2 (the period is the full circle).
std::vector<double> secondary_peak_angles(const EnsembleParams& params);

/// Deterministic (z, w) sample of the Delta sector for error_sup: equal-radius
/// pairs z = r, w = r e^{i delta} (z real-positive WLOG by rotation
/// invariance), radii r = R (i+1)/num_radii for i = 0..num_radii-1, relative
/// angles delta = (2 pi / alpha)(k - h)/(h + 1) for k = 0..num_rel_angles-1
/// with h = num_rel_angles / 2 (strictly inside the sector, diagonal
/// included). num_rel_angles = 1 selects the diagonal only.
struct ErrorSampleSpec {
    int num_radii = 24;
    int num_rel_angles = 48;

    std::string describe() const;
};

struct ErrorTableRow {
    double alpha = 0;
    int n = 0;
    double r_sup = 0;        // max |exact - asymptotic| over the sample
    std::string grid_spec;
};

/// Max of |(1/n)K - (1/n)Khat| over the sample (ties broken by the first
/// pair in sample order; parallel-safe deterministic reduction).
ErrorTableRow error_sup(const EnsembleParams& params,
                        const ErrorSampleSpec& spec = {});

}  // namespace normalens
