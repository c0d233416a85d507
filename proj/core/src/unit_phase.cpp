#include "padwav/unit_phase.hpp"

#include <cmath>
#include <numbers>

#include "padwav/errors.hpp"

namespace padwav {

namespace {

Rational reduce_mod_one(Rational q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= fl;
  return q;
}

}  // namespace

UnitPhase::UnitPhase(const Rational& turns) : turns_(reduce_mod_one(turns)) {}

UnitPhase::UnitPhase(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("UnitPhase with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  turns_ = reduce_mod_one(q);
}

std::complex<double> UnitPhase::to_complex() const {
  if (turns_ == 0) return {1.0, 0.0};
  if (turns_.get_den() == 2) return {-1.0, 0.0};
  if (turns_.get_den() == 4) {
    return turns_.get_num() == 1 ? std::complex<double>{0.0, 1.0}
                                 : std::complex<double>{0.0, -1.0};
  }
  const double angle = 2.0 * std::numbers::pi * turns_.get_d();
  return std::polar(1.0, angle);
}

UnitPhase UnitPhase::operator-() const { return UnitPhase(Rational(-turns_)); }

UnitPhase operator+(const UnitPhase& x, const UnitPhase& y) {
  return UnitPhase(Rational(x.turns_ + y.turns_));
}

UnitPhase operator-(const UnitPhase& x, const UnitPhase& y) {
  return UnitPhase(Rational(x.turns_ - y.turns_));
}

std::string UnitPhase::to_string() const { return padwav::to_string(turns_); }

}  // namespace padwav
