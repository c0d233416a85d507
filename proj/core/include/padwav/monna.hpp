#pragma once

#include <cstdint>
#include <string>

#include "padwav/wavelet.hpp"

namespace padwav {

/// Nonnegative rational whose denominator is a power of p: the image of a
/// finite expansion under rho.
class DyadicReal {
 public:
  DyadicReal(Rational value, int p);

  const Rational& value() const noexcept { return value_; }
  int prime() const noexcept { return p_; }

  friend bool operator==(const DyadicReal&, const DyadicReal&) = default;

 private:
  Rational value_;
  int p_;
};

/// Half-open [left, left + length).
struct RealInterval {
  Rational left;
  Rational length;

  Rational right() const { return left + length; }
  bool contains(const Rational& t) const { return left <= t && t < right(); }
  std::string to_string() const;
};

/// rho: sum x_i p^i -> sum x_i p^{-i-1}. Only finite expansions are
/// accepted; windowed values throw PrecisionError.
DyadicReal rho(const PAdic& x);
/// The finite expansion with rho(x) = r.
PAdic rho_inverse(const DyadicReal& r);

/// rho(p^m n + p^k Z_p) = p^{-m} rho(n) + [0, p^{-k}), using the normal form
/// m = k, n = {p^{-k} c}.
RealInterval ball_image(const Ball& ball);

/// Haar mother wavelet: +1 on [0, 1/2), -1 on [1/2, 1), 0 elsewhere.
double haar_mother(const Rational& t);
/// 2^{-gamma/2} Psi(2^{-gamma} t - n).
double haar_eval(int gamma, const Integer& n, const Rational& t);

/// max |Psi_{gamma, rho(n)}(rho(x)) - psi_{gamma n 1}(x)| over seeded
/// finite-expansion samples. p = 2 only.
double haar_correspondence(int gamma, const CosetRep& n, int samples, std::uint64_t seed = 0);

}  // namespace padwav
