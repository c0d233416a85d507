#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "padwav/errors.hpp"
#include "padwav/sampling.hpp"
#include "padwav/vladimirov.hpp"

using namespace padwav;

namespace {

PAdic q(const char* text, int p) { return parse_padic(text, p); }

// f given pointwise on rationals, for the brute-force oracle
std::function<Complex(const oracle::Q&)> pointwise(const SchwartzFunction& f) {
  return [f](const oracle::Q& y) { return evaluate(f, PAdic::from_rational(y, f.prime())); };
}

}  // namespace

TEST(GammaP, ClosedForms) {
  EXPECT_DOUBLE_EQ(gamma_p(2, 1.0), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(gamma_p(3, 1.0), 9.0 / 4.0);
  EXPECT_DOUBLE_EQ(gamma_p(2, 2.0), 24.0 / 7.0);
  EXPECT_THROW(gamma_p(2, 0.0), DomainError);
  EXPECT_THROW(gamma_p(2, -1.0), DomainError);
  EXPECT_THROW(gamma_p(6, 1.0), DomainError);
}

TEST(VladimirovParams, Validates) {
  EXPECT_THROW(VladimirovParams(0.0, 2), DomainError);
  EXPECT_THROW(VladimirovParams(1.0, 9), DomainError);
  EXPECT_THROW(VladimirovParams(std::nan(""), 2), DomainError);
}

TEST(ApplyPointwise, OmegaInsideUnitBall) {
  const SchwartzFunction omega = indicator(Ball::unit(2));
  const VladimirovParams params(1.0, 2);
  for (const char* x : {"0", "1", "3", "-5/3", "12"}) {
    EXPECT_LE(std::abs(apply_pointwise(omega, params, q(x, 2)) - 2.0 / 3.0), 1e-12) << x;
  }
}

TEST(ApplyPointwise, OmegaAtNormFour) {
  const SchwartzFunction omega = indicator(Ball::unit(2));
  const VladimirovParams params(1.0, 2);
  EXPECT_LE(std::abs(apply_pointwise(omega, params, q("1/4", 2)) + 1.0 / 12.0), 1e-12);
  EXPECT_LE(std::abs(apply_pointwise(omega, params, q("3/4", 2)) + 1.0 / 12.0), 1e-12);
}

TEST(ApplyPointwise, OmegaDecaysOutsideItsSupport) {
  for (int p : {2, 3, 5}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const VladimirovParams params(alpha, p);
      const SchwartzFunction omega = indicator(Ball::unit(p));
      for (int r = 1; r <= 5; ++r) {
        const PAdic x = PAdic::power(p, -r);
        const double expected = -std::pow(p, -r * (1.0 + alpha)) * gamma_p(p, alpha);
        ASSERT_LE(std::abs(apply_pointwise(omega, params, x) - expected), 1e-12);
      }
    }
  }
}

TEST(ApplyPointwise, IndicatorOfBoundingBallKeepsOnlyTheTail) {
  for (int p : {2, 3, 5}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (int r : {-2, 0, 3}) {
        const SchwartzFunction f = indicator(Ball::make(PAdic::zero(p), -r));
        const double tail =
            (1.0 - 1.0 / p) * std::pow(p, -(r + 1) * alpha) / (1.0 - std::pow(p, -alpha));
        const Complex got = apply_pointwise(f, VladimirovParams(alpha, p), PAdic::zero(p));
        ASSERT_LE(std::abs(got - tail * gamma_p(p, alpha)), 1e-12);
      }
    }
  }
}

TEST(ApplyPointwise, MatchesBruteForceEnumeration) {
  padwav::Rng rng(41);
  for (int p : {2, 3}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (int i = 0; i < 4; ++i) {
        const SchwartzFunction f = random_function(rng, p, 2, 1, 4);
        const int radius = 3;  // also holds every sample below
        for (int s = 0; s < 6; ++s) {
          const Rational xr = random_rational(rng, p, -radius, 3, 20);
          const Complex expected = oracle::vladimirov(pointwise(f), f.scale(), radius, alpha, xr, p);
          const Complex got = apply_pointwise(f, VladimirovParams(alpha, p), PAdic::from_rational(xr, p));
          ASSERT_LE(std::abs(got - expected), 1e-10 * std::max(1.0, std::abs(expected)))
              << p << " " << alpha << " " << xr.get_str() << " " << got << " " << expected << " " << f.scale();
        }
      }
    }
  }
}

TEST(ApplyPointwise, IsLinear) {
  padwav::Rng rng(42);
  for (int p : {2, 3, 5}) {
    const VladimirovParams params(0.7, p);
    for (int i = 0; i < 20; ++i) {
      const SchwartzFunction f = random_function(rng, p, 1, 2, 5);
      const SchwartzFunction g = random_function(rng, p, 2, 1, 5);
      const Complex a(0.4, -1.1);
      const Complex b(-2.0, 0.3);
      const SchwartzFunction h = linear_combine(a, f, b, g);
      for (const PAdic& x : sample_points(rng, Ball::make(PAdic::zero(p), -2), 10)) {
        const Complex lhs = apply_pointwise(h, params, x);
        const Complex rhs = a * apply_pointwise(f, params, x) + b * apply_pointwise(g, params, x);
        ASSERT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST(ApplyPointwise, ZeroFunction) {
  EXPECT_EQ(apply_pointwise(SchwartzFunction(3, 0), VladimirovParams(1.0, 3), q("1/3", 3)), Complex(0.0));
}

TEST(ApplyPointwise, Errors) {
  const SchwartzFunction f = indicator(Ball::make(PAdic::zero(2), 4));
  EXPECT_THROW(apply_pointwise(f, VladimirovParams(1.0, 3), q("1", 2)), DomainError);
  EXPECT_THROW(apply_pointwise(f, VladimirovParams(1.0, 2), parse_padic("-1/3", 2, 3)), PrecisionError);
}

TEST(Eigenvalue, MotherWavelet) {
  const WaveletIndex idx(0, CosetRep(2), 1);
  const VladimirovParams params(1.0, 2);
  EXPECT_DOUBLE_EQ(wavelet_eigenvalue(params, 0), 2.0);
  EXPECT_LE(eigenvalue_check(idx, params, 50), 1e-10);
  const SchwartzFunction psi = mother_wavelet(2);
  for (const char* x : {"0", "1", "2", "5/2", "1/8"}) {
    const Complex fx = evaluate(psi, q(x, 2));
    EXPECT_LE(std::abs(apply_pointwise(psi, params, q(x, 2)) - 2.0 * fx), 1e-12) << x;
  }
}

TEST(Eigenvalue, FineScaleForThree) {
  const VladimirovParams params(0.5, 3);
  EXPECT_DOUBLE_EQ(wavelet_eigenvalue(params, 2), std::pow(3.0, -0.5));
  EXPECT_LE(eigenvalue_check(WaveletIndex(2, CosetRep(3), 1), params, 60), 1e-10);
}

TEST(Eigenvalue, ZeroFunctionHasNoResidual) {
  EXPECT_EQ(eigen_residual(SchwartzFunction(5, 0), VladimirovParams(1.0, 5), 3.0, {PAdic::zero(5)}), 0.0);
}

TEST(Eigenvalue, Window) {
  for (int p : {2, 3, 5}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const VladimirovParams params(alpha, p);
      for (int gamma = -3; gamma <= 3; ++gamma) {
        for (const CosetRep& n : coset_window(p, 3)) {
          for (int j = 1; j < p; ++j) {
            ASSERT_LE(eigenvalue_check(WaveletIndex(gamma, n, j), params, 20, 7), 1e-10)
                << p << " " << alpha << " " << gamma << " " << n.to_string() << " " << j;
          }
        }
      }
    }
  }
}
