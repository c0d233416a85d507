#pragma once

#include <optional>
#include <vector>

#include "padwav/schwartz.hpp"

namespace padwav {

/// Basis label (gamma, n, j): scale, translation coset in Q_p/Z_p, and
/// frequency j in [1, p-1].
struct WaveletIndex {
  int gamma = 0;
  CosetRep n;
  int j = 1;

  WaveletIndex(int gamma, CosetRep n, int j);
  int prime() const noexcept { return n.prime(); }

  friend bool operator==(const WaveletIndex&, const WaveletIndex&) = default;
};

/// Canonical order: gamma ascending, then n by value, then j ascending.
bool operator<(const WaveletIndex& x, const WaveletIndex& y);

/// Parameters of the affine group element x -> a x + b, a != 0.
struct AffineParams {
  PAdic a;
  PAdic b;

  /// Throws DomainError for a == 0, PrecisionError when |a|_p is undetermined.
  AffineParams(PAdic a, PAdic b);
};

/// psi^{a,b} = exp(2 pi i phase) * psi_index.
struct Classification {
  WaveletIndex index;
  UnitPhase phase;
};

/// psi_{gamma n j}: p cells p^{-gamma}(n + m + p Z_p), m = 0..p-1, at scale
/// 1 - gamma, with values p^{-gamma/2} exp(2 pi i j m / p).
SchwartzFunction basis_wavelet(const WaveletIndex& idx);
/// psi(x) = chi(x/p) Omega(|x|_p), i.e. psi_{0,0,1}.
SchwartzFunction mother_wavelet(int p);
/// G(a, b) psi, as the exact image of the mother wavelet's cells.
SchwartzFunction affine_wavelet(const AffineParams& params);

/// Identifies psi^{a,b} with a basis vector times a root of unity:
///   gamma = log_p |a|_p,  n = {|a|_p b},  j = (a |a|_p)^{-1} mod p,
///   phase = chi(-j d0 / p), d0 the digit of |a|_p b at position 0.
/// The last term is chi(p^{-1} j ({|a|b} - [|a|b mod p])) with [. mod p]
/// read as the representative of |a|_p b modulo p Z_p.
Classification classify_affine(const AffineParams& params);

/// (gamma, n, j) -> (a, b) = (p^{-gamma} j^{-1}, p^{-gamma} n), with j^{-1}
/// the inverse of j in Q_p.
AffineParams affine_params_of(const WaveletIndex& idx, int digits = kDefaultDigits);

/// Pointwise formulas, evaluated with p-adic arithmetic rather than cells.
Complex wavelet_at(const WaveletIndex& idx, const PAdic& x);
Complex affine_wavelet_at(const AffineParams& params, const PAdic& x);

/// f_{gamma n j} = <psi_{gamma n j}, f>.
Complex discrete_coefficient(const SchwartzFunction& f, const WaveletIndex& idx);

struct TransformValue {
  Complex direct;     ///< <psi^{a,b}, f> from the cell image of psi
  Complex via_basis;  ///< conj(phase) * f_{classified index}
  Classification classification;
};

/// (Tf)(a, b) = <psi^{a,b}, f>, computed both ways.
TransformValue continuous_transform(const SchwartzFunction& f, const AffineParams& params);

/// C_psi = ||psi||^{-2} int |<psi, psi^{a,b}>|^2 da db / |a|_p^2 by exact
/// cell decomposition: a in p^v (u + p Z_p) for |v| <= depth, u = 1..p-1,
/// and b over the cells b0 + p^{v+1} Z_p inside p^{-depth} Z_p. The
/// integrand is constant on each cell; every cell has weight p^{-2}.
double admissibility_constant(int p, int depth);

/// Cosets n with supp psi_{gamma n j} meeting supp f, ascending. Empty when
/// the wavelet support fits inside a single cell of f (coefficient 0).
std::vector<CosetRep> support_cosets(const SchwartzFunction& f, int gamma);

struct Coefficient {
  WaveletIndex index;
  Complex value;
};

/// All support-localized coefficients for gamma in [gamma_lo, gamma_hi], in
/// canonical index order.
std::vector<Coefficient> coefficient_table(const SchwartzFunction& f, int gamma_lo, int gamma_hi);

/// Which gamma range holds the nonzero coefficients of f's mean-zero part.
struct WindowCoverage {
  int required_lo = 0;  ///< 1 - (coarsest cell scale)
  int required_hi = 0;  ///< support exponent; empty range when hi < lo
  bool covered = true;
};

WindowCoverage window_coverage(const SchwartzFunction& f, int gamma_lo, int gamma_hi);

struct ParsevalSummary {
  double norm_sq = 0.0;         ///< ||f||^2
  double captured = 0.0;        ///< sum |coefficient|^2
  double residual_norm_sq = 0.0;  ///< ||f||^2 - captured
  /// |int f|^2 p^{-gamma_hi}: the energy of the scales above the window,
  /// available when gamma_hi reaches the support exponent.
  std::optional<double> analytic_tail;
  WindowCoverage coverage;
};

/// Parseval bookkeeping for a coefficient table over [gamma_lo, gamma_hi].
/// Throws DomainError for entries outside the window.
ParsevalSummary parseval_summary(const SchwartzFunction& f, const std::vector<Coefficient>& table,
                                 int gamma_lo, int gamma_hi);

struct Reconstruction : ParsevalSummary {
  SchwartzFunction approximation;
};

/// Sum of coefficient * psi over the table, with Parseval bookkeeping.
Reconstruction reconstruct_partial(const SchwartzFunction& f, const std::vector<Coefficient>& table,
                                   int gamma_lo, int gamma_hi);

}  // namespace padwav
