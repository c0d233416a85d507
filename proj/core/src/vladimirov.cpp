#include "padwav/vladimirov.hpp"

#include <cmath>

#include "padwav/errors.hpp"
#include "padwav/sampling.hpp"

namespace padwav {

VladimirovParams::VladimirovParams(double alpha_in, int p_in) : alpha(alpha_in), p(p_in) {
  require_prime(p);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("Vladimirov exponent alpha must be a positive real");
  }
}

double gamma_p(int p, double alpha) {
  require_prime(p);
  if (!(alpha > 0.0)) throw DomainError("gamma_p needs alpha > 0");
  const double pd = static_cast<double>(p);
  return (std::pow(pd, alpha) - 1.0) / (1.0 - std::pow(pd, -1.0 - alpha));
}

double wavelet_eigenvalue(const VladimirovParams& params, int gamma) {
  return std::pow(static_cast<double>(params.p), params.alpha * (1 - gamma));
}

Complex apply_pointwise(const SchwartzFunction& f, const VladimirovParams& params, const PAdic& x) {
  if (f.prime() != params.p || x.prime() != params.p) {
    throw DomainError("prime mismatch in Vladimirov operator");
  }
  if (f.empty()) return {0.0, 0.0};
  const double pd = static_cast<double>(params.p);
  const double alpha = params.alpha;
  const int k = f.scale();
  const Ball home = Ball::make(x, k);
  const Complex fx = evaluate(f, x);

  int radius = std::max(f.support_exponent(), -k);
  if (!x.is_zero()) radius = std::max(radius, -x.valuation());

  // shells |x - y| = p^r inside p^{-R} Z_p, outside the cell of x
  double shells = 0.0;
  for (int r = 1 - k; r <= radius; ++r) shells += std::pow(pd, -r * alpha);
  shells *= 1.0 - 1.0 / pd;
  const double tail =
      (1.0 - 1.0 / pd) * std::pow(pd, -(radius + 1) * alpha) / (1.0 - std::pow(pd, -alpha));

  const double mu = std::pow(pd, -k);
  Complex listed(0.0, 0.0);
  for (const auto& [ball, value] : f.cells()) {
    if (ball == home) continue;
    const int e = separation_position(x, ball);
    listed += value * mu * std::pow(pd, e * (1.0 + alpha));
  }
  return (fx * (shells + tail) - listed) * gamma_p(params.p, alpha);
}

double eigen_residual(const SchwartzFunction& f, const VladimirovParams& params, double lambda,
                      const std::vector<PAdic>& samples) {
  double worst = 0.0;
  for (const PAdic& x : samples) {
    const Complex fx = evaluate(f, x);
    const double diff = std::abs(apply_pointwise(f, params, x) - lambda * fx);
    worst = std::max(worst, fx == Complex(0.0, 0.0) ? diff : diff / lambda);
  }
  return worst;
}

double eigenvalue_check(const WaveletIndex& idx, const VladimirovParams& params, int sample_count,
                        std::uint64_t seed) {
  if (idx.prime() != params.p) throw DomainError("prime mismatch in eigenvalue check");
  Rng rng(seed);
  const auto samples = sample_points(rng, wavelet_support(idx), sample_count);
  return eigen_residual(basis_wavelet(idx), params, wavelet_eigenvalue(params, idx.gamma), samples);
}

}  // namespace padwav
