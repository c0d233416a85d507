#include "padwav/monna.hpp"

#include <algorithm>
#include <cmath>

#include "padwav/errors.hpp"
#include "padwav/sampling.hpp"

namespace padwav {

DyadicReal::DyadicReal(Rational value, int p) : value_(std::move(value)), p_(p) {
  require_prime(p_);
  value_.canonicalize();
  if (value_ < 0) throw DomainError("rho image must be nonnegative");
  if (!has_p_power_denominator(value_, p_)) {
    throw DomainError("denominator of " + padwav::to_string(value_) + " is not a power of " +
                      std::to_string(p_));
  }
}

std::string RealInterval::to_string() const {
  return "[" + padwav::to_string(left) + ", " + padwav::to_string(right()) + ")";
}

DyadicReal rho(const PAdic& x) {
  if (!x.is_exact()) {
    throw PrecisionError("rho needs a finite expansion; got a value known only to precision " +
                         std::to_string(x.precision()));
  }
  const int p = x.prime();
  if (x.is_exact_zero()) return DyadicReal(Rational(0), p);
  // acc = sum_i d_i p^{n-1-i}, n = #digits, so rho(x) = acc p^{-v-n}
  const auto digits = x.digits();
  Integer acc = 0;
  for (const int d : digits) acc = acc * p + d;
  const int n = static_cast<int>(digits.size());
  Rational value(acc);
  value *= pow_p(p, -(x.valuation() + n));
  return DyadicReal(value, p);
}

PAdic rho_inverse(const DyadicReal& r) {
  const int p = r.prime();
  const Rational& q = r.value();
  if (q == 0) return PAdic::zero(p);
  Integer den = q.get_den();
  const int k = strip_factor(den, p);
  Integer num = q.get_num();
  // q = N / p^K; base-p digit t of N lands at position K - t - 1
  std::vector<int> base;
  while (num > 0) {
    const Integer rem = num % p;
    base.push_back(static_cast<int>(rem.get_si()));
    num /= p;
  }
  const int len = static_cast<int>(base.size());
  std::reverse(base.begin(), base.end());
  return PAdic::from_digits(p, k - len, std::move(base), true);
}

RealInterval ball_image(const Ball& ball) {
  const int p = ball.prime();
  const int k = ball.scale();
  const CosetRep n = coset_rep(shift(ball.center(), -k));
  return RealInterval{pow_p(p, -k) * rho(n.padic()).value(), pow_p(p, -k)};
}

double haar_mother(const Rational& t) {
  if (t < 0 || t >= 1) return 0.0;
  return t < Rational(1, 2) ? 1.0 : -1.0;
}

double haar_eval(int gamma, const Integer& n, const Rational& t) {
  const Rational s = pow_p(2, -gamma) * t - Rational(n);
  return std::pow(2.0, -gamma / 2.0) * haar_mother(s);
}

double haar_correspondence(int gamma, const CosetRep& n, int samples, std::uint64_t seed) {
  if (n.prime() != 2) throw DomainError("the Haar correspondence is stated for p = 2");
  const WaveletIndex idx(gamma, n, 1);
  const SchwartzFunction psi = basis_wavelet(idx);
  const Rational rn = rho(n.padic()).value();
  if (rn.get_den() != 1) throw DomainError("rho of a coset representative must be an integer");
  const Integer shift_index = rn.get_num();

  Rng rng(seed);
  double worst = 0.0;
  for (const PAdic& x : sample_points(rng, wavelet_support(idx), samples)) {
    const double real_side = haar_eval(gamma, shift_index, rho(x).value());
    worst = std::max(worst, std::abs(Complex(real_side, 0.0) - evaluate(psi, x)));
  }
  return worst;
}

}  // namespace padwav
