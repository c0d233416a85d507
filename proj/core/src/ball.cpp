#include "padwav/ball.hpp"

#include <cmath>

#include "padwav/errors.hpp"

namespace padwav {

Ball::Ball(int p, int scale, int low, std::vector<int> digits)
    : p_(p), scale_(scale), low_(low), digits_(std::move(digits)) {
  // canonical: digits_[0] != 0, or empty with low_ == scale_
  std::size_t skip = 0;
  while (skip < digits_.size() && digits_[skip] == 0) ++skip;
  digits_.erase(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(skip));
  low_ += static_cast<int>(skip);
  if (digits_.empty()) low_ = scale_;
}

Ball Ball::unit(int p) {
  require_prime(p);
  return Ball(p, 0, 0, {});
}

Ball Ball::make(const PAdic& center, int scale) {
  if (center.is_exact_zero() || center.window_start() >= scale) {
    return Ball(center.prime(), scale, scale, {});
  }
  if (center.precision() < scale) {
    throw PrecisionError("cannot canonicalize ball center: digits known up to position " +
                         std::to_string(center.precision()) + ", scale " +
                         std::to_string(scale));
  }
  const int low = center.window_start();
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(scale - low));
  for (int k = low; k < scale; ++k) digits.push_back(center.digit(k));
  return Ball(center.prime(), scale, low, std::move(digits));
}

int Ball::center_digit(int pos) const noexcept {
  if (pos < low_ || pos >= scale_) return 0;
  return digits_[static_cast<std::size_t>(pos - low_)];
}

PAdic Ball::center() const {
  if (digits_.empty()) return PAdic::zero(p_);
  return PAdic::from_digits(p_, low_, digits_, true);
}

Rational Ball::center_value() const { return center().to_rational(); }

double Ball::measure_value() const { return std::pow(static_cast<double>(p_), -scale_); }

bool Ball::contains(const PAdic& x) const {
  if (x.prime() != p_) throw DomainError("prime mismatch in ball membership");
  if (!x.is_exact() && x.precision() < scale_) {
    throw PrecisionError("point known only up to position " + std::to_string(x.precision()) +
                         ", ball scale " + std::to_string(scale_));
  }
  const int lo = std::min(low_, x.is_exact_zero() ? scale_ : x.window_start());
  for (int k = lo; k < scale_; ++k) {
    if (x.digit(k) != center_digit(k)) return false;
  }
  return true;
}

bool Ball::is_inside(const Ball& other) const {
  if (other.p_ != p_ || other.scale_ > scale_) return false;
  return ancestor(other.scale_) == other;
}

Ball Ball::ancestor(int coarser_scale) const {
  if (coarser_scale > scale_) throw DomainError("ancestor scale must not be finer than the ball");
  if (coarser_scale <= low_) return Ball(p_, coarser_scale, coarser_scale, {});
  std::vector<int> kept(digits_.begin(), digits_.begin() + (coarser_scale - low_));
  return Ball(p_, coarser_scale, low_, std::move(kept));
}

std::vector<Ball> Ball::children() const {
  std::vector<Ball> out;
  out.reserve(static_cast<std::size_t>(p_));
  for (int d = 0; d < p_; ++d) {
    if (digits_.empty()) {
      out.push_back(Ball(p_, scale_ + 1, scale_, {d}));
    } else {
      std::vector<int> extended = digits_;
      extended.push_back(d);
      out.push_back(Ball(p_, scale_ + 1, low_, std::move(extended)));
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Ball& x, const Ball& y) {
  if (auto c = x.p_ <=> y.p_; c != 0) return c;
  if (auto c = x.scale_ <=> y.scale_; c != 0) return c;
  const int lo = std::min(x.low_, y.low_);
  for (int k = x.scale_ - 1; k >= lo; --k) {
    if (auto c = x.center_digit(k) <=> y.center_digit(k); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

int separation_position(const PAdic& x, const Ball& ball) {
  const int lo = std::min(ball.center_low(), x.is_exact_zero() ? ball.scale() : x.window_start());
  for (int k = lo; k < ball.scale(); ++k) {
    if (x.digit(k) != ball.center_digit(k)) return k;
  }
  throw DomainError("point lies inside the ball");
}

}  // namespace padwav
