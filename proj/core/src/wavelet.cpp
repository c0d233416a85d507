#include "padwav/wavelet.hpp"

#include <cmath>
#include <set>

#include "padwav/errors.hpp"

namespace padwav {

namespace {

double amplitude(int p, int gamma) { return std::pow(static_cast<double>(p), -0.5 * gamma); }

// Calls visit(digits) for every digit vector of the given length.
template <typename Visit>
void for_each_digit_string(int p, int length, Visit&& visit) {
  std::vector<int> digits(static_cast<std::size_t>(length), 0);
  while (true) {
    visit(digits);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == p - 1) digits[i++] = 0;
    if (i == digits.size()) return;
    ++digits[i];
  }
}

}  // namespace

WaveletIndex::WaveletIndex(int gamma, CosetRep n, int j) : gamma(gamma), n(std::move(n)), j(j) {
  if (j < 1 || j >= this->n.prime()) {
    throw DomainError("wavelet frequency j = " + std::to_string(j) + " outside [1, " +
                      std::to_string(this->n.prime() - 1) + "]");
  }
}

bool operator<(const WaveletIndex& x, const WaveletIndex& y) {
  if (x.gamma != y.gamma) return x.gamma < y.gamma;
  if (!(x.n == y.n)) return x.n < y.n;
  return x.j < y.j;
}

AffineParams::AffineParams(PAdic a_in, PAdic b_in) : a(std::move(a_in)), b(std::move(b_in)) {
  if (a.prime() != b.prime()) throw DomainError("affine parameters use different primes");
  if (a.is_exact_zero()) throw DomainError("dilation parameter a must be nonzero");
  a.valuation();
}

SchwartzFunction basis_wavelet(const WaveletIndex& idx) {
  const int p = idx.prime();
  SchwartzFunction f(p, 1 - idx.gamma);
  const double amp = amplitude(p, idx.gamma);
  for (int m = 0; m < p; ++m) {
    const PAdic center = shift(idx.n.padic() + PAdic::from_integer(m, p), -idx.gamma);
    const UnitPhase phase(static_cast<long>(idx.j) * m, p);
    f.insert(Ball::make(center, 1 - idx.gamma), amp * phase.to_complex());
  }
  return f;
}

SchwartzFunction mother_wavelet(int p) { return basis_wavelet(WaveletIndex(0, CosetRep(p), 1)); }

SchwartzFunction affine_wavelet(const AffineParams& params) {
  return affine_act(params.a, params.b, mother_wavelet(params.a.prime()));
}

Classification classify_affine(const AffineParams& params) {
  const int p = params.a.prime();
  const int v = params.a.valuation();
  const int j = unit_leading_inverse(params.a);
  // |a|_p b = p^{-v} b
  const PAdic scaled_b = shift(params.b, -v);
  CosetRep n = coset_rep(scaled_b);
  const int d0 = digit_at(scaled_b, 0);
  return Classification{WaveletIndex(-v, std::move(n), j),
                        UnitPhase(-static_cast<long>(j) * d0, p)};
}

AffineParams affine_params_of(const WaveletIndex& idx, int digits) {
  const int p = idx.prime();
  const PAdic j_inv = inverse(PAdic::from_integer(idx.j, p, digits));
  return AffineParams(shift(j_inv, -idx.gamma), shift(idx.n.padic(), -idx.gamma));
}

Complex wavelet_at(const WaveletIndex& idx, const PAdic& x) {
  const int p = idx.prime();
  const PAdic y = shift(x, idx.gamma) - idx.n.padic();
  if (!y.is_zero() && y.valuation() < 0) return {0.0, 0.0};
  if (!y.is_exact() && y.precision() < 1) {
    throw PrecisionError("point has too few digits to evaluate the wavelet");
  }
  const UnitPhase phase = character(shift(PAdic::from_integer(idx.j, p) * y, -1));
  return amplitude(p, idx.gamma) * phase.to_complex();
}

Complex affine_wavelet_at(const AffineParams& params, const PAdic& x) {
  const int p = params.a.prime();
  const PAdic y = (x - params.b) * inverse(params.a);
  if (!y.is_zero() && y.valuation() < 0) return {0.0, 0.0};
  if (!y.is_exact() && y.precision() < 1) {
    throw PrecisionError("point has too few digits to evaluate the wavelet");
  }
  const double amp = std::pow(static_cast<double>(p), 0.5 * params.a.valuation());
  return amp * character(shift(y, -1)).to_complex();
}

Complex discrete_coefficient(const SchwartzFunction& f, const WaveletIndex& idx) {
  return inner_product(basis_wavelet(idx), f);
}

TransformValue continuous_transform(const SchwartzFunction& f, const AffineParams& params) {
  Classification cls = classify_affine(params);
  const Complex direct = inner_product(affine_wavelet(params), f);
  const Complex via = std::conj(cls.phase.to_complex()) * discrete_coefficient(f, cls.index);
  return TransformValue{direct, via, std::move(cls)};
}

double admissibility_constant(int p, int depth) {
  require_prime(p);
  if (depth < 1) throw DomainError("admissibility depth must be >= 1");
  const SchwartzFunction psi = mother_wavelet(p);
  const double cell_weight = 1.0 / (static_cast<double>(p) * p);
  double total = 0.0;
  for (int v = -depth; v <= depth; ++v) {
    for (int u = 1; u < p; ++u) {
      const PAdic a0 = PAdic::from_digits(p, v, {u}, true);
      for_each_digit_string(p, v + 1 + depth, [&](const std::vector<int>& digits) {
        const PAdic b0 = PAdic::from_digits(p, -depth, digits, true);
        const Complex overlap = inner_product(psi, affine_wavelet(AffineParams(a0, b0)));
        total += std::norm(overlap) * cell_weight;
      });
    }
  }
  return total / norm_sq(psi);
}

std::vector<CosetRep> support_cosets(const SchwartzFunction& f, int gamma) {
  if (f.empty()) return {};
  const SchwartzFunction c = coarsen(f);
  if (-gamma >= c.scale()) return {};
  std::set<CosetRep> found;
  for (const auto& [ball, value] : c.cells()) {
    found.insert(coset_rep(shift(ball.ancestor(-gamma).center(), gamma)));
  }
  return {found.begin(), found.end()};
}

std::vector<Coefficient> coefficient_table(const SchwartzFunction& f, int gamma_lo,
                                           int gamma_hi) {
  std::vector<Coefficient> table;
  for (int gamma = gamma_lo; gamma <= gamma_hi; ++gamma) {
    for (const CosetRep& n : support_cosets(f, gamma)) {
      for (int j = 1; j < f.prime(); ++j) {
        WaveletIndex idx(gamma, n, j);
        const Complex value = discrete_coefficient(f, idx);
        table.push_back(Coefficient{std::move(idx), value});
      }
    }
  }
  return table;
}

WindowCoverage window_coverage(const SchwartzFunction& f, int gamma_lo, int gamma_hi) {
  if (f.empty()) return WindowCoverage{1, 0, true};
  const SchwartzFunction c = coarsen(f);
  WindowCoverage out;
  out.required_lo = 1 - c.scale();
  out.required_hi = c.support_exponent();
  out.covered = out.required_hi < out.required_lo ||
                (gamma_lo <= out.required_lo && gamma_hi >= out.required_hi);
  return out;
}

ParsevalSummary parseval_summary(const SchwartzFunction& f, const std::vector<Coefficient>& table,
                                 int gamma_lo, int gamma_hi) {
  ParsevalSummary out;
  for (const auto& entry : table) {
    if (entry.index.gamma < gamma_lo || entry.index.gamma > gamma_hi) {
      throw DomainError("coefficient at gamma = " + std::to_string(entry.index.gamma) +
                        " lies outside the reconstruction window");
    }
    out.captured += std::norm(entry.value);
  }
  out.norm_sq = norm_sq(f);
  out.residual_norm_sq = out.norm_sq - out.captured;
  out.coverage = window_coverage(f, gamma_lo, gamma_hi);
  if (f.empty()) {
    out.analytic_tail = 0.0;
  } else if (gamma_hi >= coarsen(f).support_exponent()) {
    out.analytic_tail = std::norm(integral(f)) * std::pow(static_cast<double>(f.prime()), -gamma_hi);
  }
  return out;
}

Reconstruction reconstruct_partial(const SchwartzFunction& f, const std::vector<Coefficient>& table,
                                   int gamma_lo, int gamma_hi) {
  Reconstruction out{parseval_summary(f, table, gamma_lo, gamma_hi), SchwartzFunction(f.prime(), f.scale())};
  for (const auto& entry : table) {
    if (entry.value != Complex(0.0, 0.0)) {
      out.approximation =
          linear_combine(1.0, out.approximation, entry.value, basis_wavelet(entry.index));
    }
  }
  return out;
}

}  // namespace padwav
