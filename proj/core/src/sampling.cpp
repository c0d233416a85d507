#include "padwav/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "padwav/errors.hpp"

namespace padwav {

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_digits(Rng& rng, int p, int length) {
  std::vector<int> digits(static_cast<std::size_t>(length));
  for (auto& d : digits) d = uniform_int(rng, 0, p - 1);
  return digits;
}

}  // namespace

PAdic random_finite(Rng& rng, int p, int val_lo, int val_hi, int length) {
  if (length < 1) throw DomainError("random expansion needs at least one digit");
  std::vector<int> digits = random_digits(rng, p, length);
  digits[0] = uniform_int(rng, 1, p - 1);
  return PAdic::from_digits(p, uniform_int(rng, val_lo, val_hi), std::move(digits), true);
}

PAdic random_point_in(Rng& rng, const Ball& ball, int extra) {
  const int p = ball.prime();
  if (extra < 1) return ball.center();
  return ball.center() + PAdic::from_digits(p, ball.scale(), random_digits(rng, p, extra), true);
}

Rational random_rational(Rng& rng, int p, int val_lo, int val_hi, int magnitude) {
  int m = 0;
  while (m == 0) m = uniform_int(rng, -magnitude, magnitude);
  const int n = uniform_int(rng, 1, magnitude);
  Rational q(m, n);
  q.canonicalize();
  return q * pow_p(p, uniform_int(rng, val_lo, val_hi));
}

CosetRep random_coset(Rng& rng, int p, int depth) {
  if (depth < 1) return CosetRep(p);
  return coset_rep(PAdic::from_digits(p, -depth, random_digits(rng, p, depth), true));
}

std::vector<CosetRep> coset_window(int p, int count) {
  require_prime(p);
  std::vector<CosetRep> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    // base-p digit t of i sits at position -t-1
    std::vector<int> reversed;
    for (int r = i; r > 0; r /= p) reversed.push_back(r % p);
    std::reverse(reversed.begin(), reversed.end());
    if (reversed.empty()) {
      out.emplace_back(p);
    } else {
      const int len = static_cast<int>(reversed.size());
      out.push_back(coset_rep(PAdic::from_digits(p, -len, std::move(reversed), true)));
    }
  }
  return out;
}

SchwartzFunction random_function(Rng& rng, int p, int scale, int radius, int cells) {
  SchwartzFunction f(p, scale);
  const int width = scale + radius;
  if (width <= 0) {
    f.insert(Ball::make(PAdic::zero(p), scale),
             Complex(std::uniform_real_distribution<double>(-1, 1)(rng), 0.5));
    return f;
  }
  const double possible = std::pow(static_cast<double>(p), width);
  const int wanted = static_cast<int>(std::min<double>(cells, possible));
  std::set<Ball> chosen;
  while (static_cast<int>(chosen.size()) < wanted) {
    const PAdic center = PAdic::from_digits(p, -radius, random_digits(rng, p, width), true);
    chosen.insert(Ball::make(center, scale));
  }
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  for (const Ball& ball : chosen) {
    const double re = value(rng);
    const double im = value(rng);
    f.insert(ball, Complex(re, im));
  }
  return f;
}

SchwartzFunction random_mean_zero_function(Rng& rng, int p, int scale, int radius, int cells) {
  const SchwartzFunction f = random_function(rng, p, scale, radius, std::max(cells, 2));
  Complex sum(0.0, 0.0);
  for (const auto& [ball, value] : f.cells()) sum += value;
  const Complex mean = sum / static_cast<double>(f.size());
  SchwartzFunction out(p, scale);
  for (const auto& [ball, value] : f.cells()) out.insert(ball, value - mean);
  return out;
}

std::vector<PAdic> sample_points(Rng& rng, const Ball& support, int count, int spread) {
  std::vector<PAdic> out;
  out.reserve(static_cast<std::size_t>(count));
  const int p = support.prime();
  const int lo = std::min(support.center_low(), support.scale()) - spread;
  const int hi = support.scale() + spread;
  for (int i = 0; i < count; ++i) {
    if (i % 2 == 0) {
      out.push_back(random_point_in(rng, support, 6));
    } else if (i % 10 == 1) {
      out.push_back(PAdic::zero(p));
    } else {
      out.push_back(random_finite(rng, p, lo, hi, 8));
    }
  }
  return out;
}

Ball wavelet_support(const WaveletIndex& idx) {
  return Ball::make(shift(idx.n.padic(), -idx.gamma), -idx.gamma);
}

}  // namespace padwav
