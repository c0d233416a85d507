#pragma once

#include <climits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padwav/rational.hpp"
#include "padwav/unit_phase.hpp"

namespace padwav {

/// Digits kept above the valuation when a value has an infinite expansion
/// and no other window is requested.
inline constexpr int kDefaultDigits = 32;

/// Precision reported by values whose expansion is finite and fully stored.
inline constexpr int kExactPrecision = INT_MAX;

/// A p-adic number known modulo p^N.
///
/// The value is sum_i digits[i] * p^(valuation + i). Three kinds of values
/// share this type:
///   - exact zero;
///   - finite expansions (is_exact()): every digit at or above the window
///     end is zero, so the value is a nonnegative element of Z[1/p];
///   - windowed values, known only modulo p^precision(). A windowed value with
///     no nonzero digit is "zero to precision" and has no determinate
///     valuation.
///
/// Nonzero values are canonical: the digit at the valuation is nonzero.
class PAdic {
 public:
  static PAdic zero(int p);
  /// Exact p^e.
  static PAdic power(int p, int e);
  /// Validates digits; leading zeros are absorbed into the valuation.
  static PAdic from_digits(int p, int valuation, std::vector<int> digits, bool exact);
  /// Expands q. Values in Z[1/p] that are >= 0 are stored exactly (padded to
  /// at least `digits` positions); everything else is windowed with `digits`
  /// digits above the valuation.
  static PAdic from_rational(const Rational& q, int p, int digits = kDefaultDigits);
  static PAdic from_integer(long long n, int p, int digits = kDefaultDigits);

  int prime() const noexcept { return p_; }
  bool is_exact_zero() const noexcept { return exact_zero_; }
  bool is_zero_to_precision() const noexcept { return !exact_zero_ && digits_.empty(); }
  bool is_zero() const noexcept { return digits_.empty(); }
  bool is_exact() const noexcept { return exact_; }

  /// Position of the lowest nonzero digit. Throws DomainError for exact zero
  /// and PrecisionError for zero-to-precision values.
  int valuation() const;
  /// Position of the lowest stored digit (the precision for zero-to-precision).
  int window_start() const noexcept { return val_; }
  /// N such that the value is known modulo p^N; kExactPrecision if exact.
  int precision() const noexcept;
  /// Number of known digits above the valuation; INT_MAX if exact.
  int relative_precision() const;
  std::span<const int> digits() const noexcept { return digits_; }

  /// Digit at position k. Positions below the window are zero; positions at
  /// or above precision() throw PrecisionError.
  int digit(int k) const;

  /// Value as a rational; only for exact values.
  Rational to_rational() const;
  /// Sum of the digits below position n (exact), i.e. the canonical
  /// representative of x modulo p^n Z_p. Requires precision() >= n.
  PAdic truncated_below(int n) const;

  friend bool operator==(const PAdic& x, const PAdic& y);

 private:
  PAdic(int p, int valuation, std::vector<int> digits, bool exact, bool exact_zero);
  void normalize();

  int p_ = 2;
  int val_ = 0;
  std::vector<int> digits_;
  bool exact_ = true;
  bool exact_zero_ = true;
};

PAdic operator+(const PAdic& x, const PAdic& y);
PAdic operator-(const PAdic& x);
PAdic operator-(const PAdic& x, const PAdic& y);
PAdic operator*(const PAdic& x, const PAdic& y);
PAdic operator/(const PAdic& x, const PAdic& y);

enum class ArithOp { add, mul, neg, inv };

/// Field operations with precision propagation: addition keeps the smaller
/// precision; multiplication and inversion keep the smaller relative
/// precision. Throws DomainError on prime mismatch or zero inversion and
/// PrecisionError when inverting a zero-to-precision value.
PAdic arith(ArithOp op, const PAdic& x, const std::optional<PAdic>& y = std::nullopt);
PAdic inverse(const PAdic& x);
PAdic negate(const PAdic& x);

/// Multiplication by p^e; exact, never loses digits.
PAdic shift(const PAdic& x, int e);

struct NormValuation {
  Rational norm;                 ///< p^{-v}, or 0 for exact zero
  std::optional<int> valuation;  ///< empty means +infinity
};

/// Throws PrecisionError for zero-to-precision values.
NormValuation norm_and_valuation(const PAdic& x);

/// sum_{j<0} x_j p^j as a rational in [0, 1). Requires the negative digits to
/// be known (precision() >= 0 whenever the window starts below 0).
Rational fractional_part(const PAdic& x);
int digit_at(const PAdic& x, int k);
/// The additive character chi(x) = exp(2 pi i {x}).
UnitPhase character(const PAdic& x);
/// Inverse modulo p of the lowest nonzero digit of a, in [1, p-1].
int unit_leading_inverse(const PAdic& a);

/// An element of Q_p / Z_p, stored as its negative-position digits.
class CosetRep {
 public:
  explicit CosetRep(int p);  ///< the zero coset
  /// Accepts rationals in [0, 1) with p-power denominator.
  static CosetRep from_rational(const Rational& q, int p);

  int prime() const noexcept { return digits_.prime(); }
  const PAdic& padic() const noexcept { return digits_; }
  Rational value() const { return digits_.to_rational(); }
  bool is_zero() const noexcept { return digits_.is_exact_zero(); }
  std::string to_string() const { return padwav::to_string(value()); }

  friend bool operator==(const CosetRep& x, const CosetRep& y) {
    return x.digits_ == y.digits_;
  }
  friend bool operator<(const CosetRep& x, const CosetRep& y) {
    return x.value() < y.value();
  }

 private:
  friend CosetRep coset_rep(const PAdic& x);
  explicit CosetRep(PAdic digits) : digits_(std::move(digits)) {}
  PAdic digits_;
};

/// The class of x in Q_p / Z_p. Same precondition as fractional_part.
CosetRep coset_rep(const PAdic& x);

/// Literal grammar: "m/n", integers (optional sign), or
/// "v=<int>;digits=d0,d1,...". Rationals are expanded to `target_precision`
/// digits above their valuation; digit literals are finite expansions.
PAdic parse_padic(const std::string& text, int p, int target_precision = kDefaultDigits);

/// Rational string for exact values, digit literal otherwise.
std::string to_literal(const PAdic& x);

}  // namespace padwav
