#pragma once

#include <complex>
#include <string>

#include "padwav/rational.hpp"

namespace padwav {

/// A point e^{2 pi i q} on the unit circle, with q an exact rational in [0, 1).
///
/// Group operations reduce modulo 1, so root-of-unity identities can be
/// checked with operator== instead of floating tolerances. Conversion to a
/// complex number happens only in to_complex().
class UnitPhase {
 public:
  UnitPhase() = default;
  explicit UnitPhase(const Rational& turns);
  UnitPhase(long numerator, long denominator);

  const Rational& turns() const noexcept { return turns_; }
  Integer numerator() const { return turns_.get_num(); }
  Integer denominator() const { return turns_.get_den(); }
  bool is_identity() const { return turns_ == 0; }

  /// Exact for quarter turns; std::polar otherwise.
  std::complex<double> to_complex() const;

  UnitPhase operator-() const;
  friend UnitPhase operator+(const UnitPhase& x, const UnitPhase& y);
  friend UnitPhase operator-(const UnitPhase& x, const UnitPhase& y);
  friend bool operator==(const UnitPhase& x, const UnitPhase& y) {
    return x.turns_ == y.turns_;
  }

  std::string to_string() const;

 private:
  Rational turns_{0};
};

}  // namespace padwav
