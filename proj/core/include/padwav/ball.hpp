#pragma once

#include <compare>
#include <vector>

#include "padwav/padic.hpp"

namespace padwav {

/// The coset c + p^k Z_p, identified by its scale k and the canonical center
/// c = sum_{i<k} c_i p^i (no digits at positions >= k).
///
/// Balls of equal scale are ordered by the numeric value of their centers.
class Ball {
 public:
  /// Z_p.
  static Ball unit(int p);
  /// make_ball: strips the digits of `center` at positions >= scale. Throws
  /// PrecisionError when the digits below `scale` are not known.
  static Ball make(const PAdic& center, int scale);

  int prime() const noexcept { return p_; }
  int scale() const noexcept { return scale_; }
  /// Lowest nonzero center position; scale() for the zero center.
  int center_low() const noexcept { return low_; }
  bool center_is_zero() const noexcept { return digits_.empty(); }
  int center_digit(int pos) const noexcept;

  PAdic center() const;
  Rational center_value() const;
  /// Haar measure p^{-scale}.
  Rational measure() const { return pow_p(p_, -scale_); }
  double measure_value() const;

  bool contains(const PAdic& x) const;
  /// True when this ball is contained in `other`.
  bool is_inside(const Ball& other) const;
  Ball ancestor(int coarser_scale) const;
  Ball parent() const { return ancestor(scale_ - 1); }
  std::vector<Ball> children() const;

  friend bool operator==(const Ball& x, const Ball& y) {
    return x.p_ == y.p_ && x.scale_ == y.scale_ && x.low_ == y.low_ && x.digits_ == y.digits_;
  }
  friend std::strong_ordering operator<=>(const Ball& x, const Ball& y);

 private:
  Ball(int p, int scale, int low, std::vector<int> digits);

  int p_;
  int scale_;
  int low_;                 // position of digits_[0]
  std::vector<int> digits_;  // dense over [low_, scale_)
};

/// Valuation of x - c for a point x outside `ball` (c its center): the lowest
/// position where the digits of x and c differ. Throws DomainError when x is
/// inside the ball.
int separation_position(const PAdic& x, const Ball& ball);

}  // namespace padwav
