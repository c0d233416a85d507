#pragma once

#include <cstdint>

#include "padwav/wavelet.hpp"

namespace padwav {

struct VladimirovParams {
  double alpha;
  int p;

  /// Throws DomainError for alpha <= 0 or non-prime p.
  VladimirovParams(double alpha, int p);
};

/// Gamma_p(-alpha) = (p^alpha - 1) / (1 - p^{-1-alpha}).
double gamma_p(int p, double alpha);

/// Normalization of D^alpha: the integral below is multiplied by gamma_p.
/// Dividing by it instead (as 1 / Gamma_p(-alpha) with the value above would
/// read) gives psi_{gamma n j} the eigenvalue p^{alpha(1-gamma)} / gamma_p^2;
/// multiplying is the normalization under which the eigenvalue is
/// p^{alpha(1-gamma)}.

/// p^{alpha (1 - gamma)}, the eigenvalue of D^alpha on psi_{gamma n j}.
double wavelet_eigenvalue(const VladimirovParams& params, int gamma);

/// D^alpha f (x) = gamma_p(p, alpha) int (f(x) - f(y)) |x - y|_p^{-1-alpha} dy.
///
/// With k the resolution of f and p^{-R} Z_p a ball holding both the support
/// of f and x, the integral splits into
///   - the listed cells B not containing x: -f_B p^{-k} |x - c_B|^{-1-alpha}
///     (the distance is constant on B);
///   - f(x) times the integral of |x - y|^{-1-alpha} over p^{-R} Z_p minus the
///     cell of x, a finite sum over the shells |x - y| = p^r, 1-k <= r <= R;
///   - the tail f(x) (1 - 1/p) p^{-(R+1) alpha} / (1 - p^{-alpha}).
/// Shells are summed in closed form, so cells where f vanishes are never
/// enumerated.
Complex apply_pointwise(const SchwartzFunction& f, const VladimirovParams& params, const PAdic& x);

/// max_x |D^alpha f(x) - lambda f(x)| / lambda over the sample points, with
/// the division dropped where f(x) = 0. Returns 0 for the zero function.
double eigen_residual(const SchwartzFunction& f, const VladimirovParams& params, double lambda,
                      const std::vector<PAdic>& samples);

/// eigen_residual for psi_idx and its eigenvalue, on sample_count seeded
/// points drawn both inside and outside the wavelet support.
double eigenvalue_check(const WaveletIndex& idx, const VladimirovParams& params, int sample_count,
                        std::uint64_t seed = 0);

}  // namespace padwav
