#include <gtest/gtest.h>

#include "oracles.hpp"
#include "padwav/errors.hpp"
#include "padwav/monna.hpp"
#include "padwav/sampling.hpp"

using namespace padwav;

namespace {

PAdic q(const char* text, int p) { return parse_padic(text, p); }

}  // namespace

TEST(Rho, Examples) {
  EXPECT_EQ(rho(PAdic::zero(2)).value(), 0);
  EXPECT_EQ(rho(q("1/2", 2)).value(), 1);
  EXPECT_EQ(rho(q("1", 2)).value(), Rational(1, 2));
  EXPECT_EQ(rho(q("3", 2)).value(), Rational(3, 4));
  EXPECT_EQ(rho(q("v=-1;digits=2,1", 3)).value(), Rational(2) + Rational(1, 3));
}

TEST(Rho, RejectsWindowedValues) {
  EXPECT_THROW(rho(q("-1", 2)), PrecisionError);
  EXPECT_THROW(rho(q("1/3", 2)), PrecisionError);
}

TEST(RhoInverse, Examples) {
  EXPECT_EQ(rho_inverse(DyadicReal(1, 2)), q("1/2", 2));
  EXPECT_EQ(rho_inverse(DyadicReal(Rational(3, 4), 2)), q("3", 2));
  EXPECT_EQ(rho_inverse(DyadicReal(0, 5)), PAdic::zero(5));
}

TEST(RhoInverse, RejectsOtherDenominators) {
  EXPECT_THROW(DyadicReal(Rational(1, 3), 2), DomainError);
  EXPECT_THROW(DyadicReal(Rational(-1, 2), 2), DomainError);
}

TEST(Rho, BijectionOnFiniteExpansions) {
  padwav::Rng rng(51);
  for (int p : {2, 3, 5, 7}) {
    for (int i = 0; i < 1000; ++i) {
      const PAdic x = random_finite(rng, p, -6, 6, 8);
      const DyadicReal r = rho(x);
      ASSERT_EQ(rho_inverse(r), x);
      ASSERT_EQ(rho(rho_inverse(r)), r);
    }
  }
}

TEST(Rho, HolderInequality) {
  padwav::Rng rng(52);
  for (int p : {2, 3, 5}) {
    for (int i = 0; i < 1000; ++i) {
      const PAdic x = random_finite(rng, p, -5, 5, 7);
      const PAdic y = random_finite(rng, p, -5, 5, 7);
      const Rational gap = abs(rho(x).value() - rho(y).value());
      ASSERT_LE(gap, oracle::norm(x.to_rational() - y.to_rational(), p));
    }
  }
}

TEST(BallImage, Examples) {
  const RealInterval unit = ball_image(Ball::unit(2));
  EXPECT_EQ(unit.left, 0);
  EXPECT_EQ(unit.right(), 1);
  const RealInterval shifted = ball_image(Ball::make(q("1/2", 2), 0));
  EXPECT_EQ(shifted.left, 1);
  EXPECT_EQ(shifted.right(), 2);
  const RealInterval small = ball_image(Ball::make(PAdic::zero(3), 1));
  EXPECT_EQ(small.left, 0);
  EXPECT_EQ(small.length, Rational(1, 3));
  EXPECT_EQ(small.to_string(), "[0, 1/3)");
}

TEST(BallImage, ConservesMeasureAndHoldsItsPoints) {
  padwav::Rng rng(53);
  for (int p : {2, 3, 5}) {
    for (int i = 0; i < 500; ++i) {
      const int scale = std::uniform_int_distribution<int>(-4, 4)(rng);
      const Ball b = Ball::make(random_finite(rng, p, -6, 6, 8), scale);
      const RealInterval image = ball_image(b);
      ASSERT_EQ(image.length, b.measure());
      for (int s = 0; s < 5; ++s) ASSERT_TRUE(image.contains(rho(random_point_in(rng, b, 4)).value()));
    }
  }
}

TEST(BallImage, ChildrenTileTheParentImage) {
  // the image of the complement of a child inside its parent is the rest of
  // the parent interval
  padwav::Rng rng(54);
  for (int p : {2, 3, 5}) {
    for (int i = 0; i < 100; ++i) {
      const Ball parent = Ball::make(random_finite(rng, p, -3, 3, 6), std::uniform_int_distribution<int>(-2, 3)(rng));
      const RealInterval whole = ball_image(parent);
      std::vector<RealInterval> pieces;
      for (const Ball& c : parent.children()) pieces.push_back(ball_image(c));
      std::sort(pieces.begin(), pieces.end(), [](const auto& x, const auto& y) { return x.left < y.left; });
      ASSERT_EQ(pieces.front().left, whole.left);
      for (std::size_t k = 1; k < pieces.size(); ++k) ASSERT_EQ(pieces[k].left, pieces[k - 1].right());
      ASSERT_EQ(pieces.back().right(), whole.right());
    }
  }
}

TEST(Haar, MotherHalfOpen) {
  EXPECT_EQ(haar_mother(Rational(1, 4)), 1.0);
  EXPECT_EQ(haar_mother(Rational(3, 4)), -1.0);
  EXPECT_EQ(haar_mother(Rational(1, 2)), -1.0);
  EXPECT_EQ(haar_mother(Rational(0)), 1.0);
  EXPECT_EQ(haar_mother(Rational(1)), 0.0);
  EXPECT_EQ(haar_mother(Rational(-1, 8)), 0.0);
}

TEST(Haar, DilatedAndShifted) {
  // 2^{-1/2} Psi(t/2 - 1) on [2, 4)
  EXPECT_DOUBLE_EQ(haar_eval(1, 1, Rational(5, 2)), std::pow(2.0, -0.5));
  EXPECT_DOUBLE_EQ(haar_eval(1, 1, Rational(3)), -std::pow(2.0, -0.5));
  EXPECT_EQ(haar_eval(1, 1, Rational(1)), 0.0);
}

TEST(Haar, CorrespondenceExamples) {
  EXPECT_EQ(haar_correspondence(0, CosetRep(2), 200), 0.0);
  EXPECT_LE(haar_correspondence(2, CosetRep::from_rational(Rational(1, 2), 2), 500), 1e-12);
  EXPECT_THROW(haar_correspondence(0, CosetRep(3), 10), DomainError);
}

TEST(Haar, CorrespondenceWindow) {
  for (int gamma = -4; gamma <= 4; ++gamma) {
    for (const CosetRep& n : coset_window(2, 10)) {
      ASSERT_LE(haar_correspondence(gamma, n, 100, 3), 1e-12) << gamma << " " << n.to_string();
    }
  }
}
