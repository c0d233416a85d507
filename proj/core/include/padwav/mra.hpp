#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padwav/wavelet.hpp"

namespace padwav {

/// Largest gamma with f in V_gamma (f constant on balls of diameter p^gamma);
/// nullopt for the zero function, which lies in every V_gamma.
std::optional<int> membership_scale(const SchwartzFunction& f);

/// f in V_gamma, decided cell by cell from the listed representation.
bool is_member(const SchwartzFunction& f, int gamma);

/// Orthogonal projection onto V_gamma: averages over balls of diameter p^gamma.
SchwartzFunction project(const SchwartzFunction& f, int gamma);

/// P_{gamma-1} f - P_gamma f, the component of f in W_gamma.
SchwartzFunction detail_component(const SchwartzFunction& f, int gamma);

/// p^{-gamma/2} Omega(|p^gamma x - n|), unit norm.
SchwartzFunction generator(int p, int gamma, const CosetRep& n);

struct AxiomResult {
  std::string name;
  bool passed = true;
  int checks = 0;
  std::string detail;  ///< first failure, empty when passed
  std::optional<SchwartzFunction> witness;
  std::optional<int> witness_scale;
};

struct MraReport {
  int p = 2;
  int gamma_lo = 0;
  int gamma_hi = 0;
  std::vector<AxiomResult> axioms;

  bool passed() const;
};

/// Checks the MRA axioms on the given test functions for gamma in
/// [gamma_lo, gamma_hi]: nesting, scaling, translation by the first
/// `coset_count` cosets, orthonormality and spanning of the V_0 generator,
/// density (P_gamma f = f for gamma <= membership scale) and trivial
/// intersection (P_gamma f is the single-cell average once p^{-gamma} Z_p
/// contains the support).
MraReport axiom_report(int p, const std::vector<SchwartzFunction>& functions, int gamma_lo,
                       int gamma_hi, int coset_count = 8);

/// Omega and its translates by the first `coset_count` cosets, plus the
/// dilated generators p^{-gamma/2} Omega(|p^gamma x - n|) for gamma in
/// [gamma_lo, gamma_hi].
std::vector<SchwartzFunction> standard_test_functions(int p, int gamma_lo, int gamma_hi,
                                                      int coset_count);

/// max |Omega(|p^gamma x - n|) - 1_{[0, p^gamma)}(rho(x) - p^gamma rho(n))|
/// over seeded finite-expansion samples.
double indicator_correspondence(int gamma, const CosetRep& n, int samples, std::uint64_t seed = 0);

}  // namespace padwav
