#include "padwav/padic.hpp"

#include <algorithm>
#include <sstream>

#include "padwav/errors.hpp"

namespace padwav {

namespace {

Integer p_pow(int p, int e) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return z;
}

// Base-p digits of m >= 0, lowest first; at least `min_count` entries.
std::vector<int> digits_of(Integer m, int p, std::size_t min_count) {
  std::vector<int> out;
  const auto up = static_cast<unsigned long>(p);
  while (m > 0) {
    out.push_back(static_cast<int>(mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), up)));
  }
  if (out.size() < min_count) out.resize(min_count, 0);
  return out;
}

Integer mantissa(std::span<const int> digits, int p, std::size_t count) {
  Integer m = 0;
  const std::size_t n = std::min(count, digits.size());
  for (std::size_t i = n; i-- > 0;) {
    m *= p;
    m += digits[i];
  }
  return m;
}

void require_same_prime(const PAdic& x, const PAdic& y) {
  if (x.prime() != y.prime()) {
    throw DomainError("prime mismatch: " + std::to_string(x.prime()) + " vs " +
                      std::to_string(y.prime()));
  }
}

int inverse_mod_p(int d, int p) {
  for (int j = 1; j < p; ++j) {
    if ((static_cast<long long>(d) * j) % p == 1) return j;
  }
  throw DomainError("digit has no inverse modulo p");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& text, const std::string& whole) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("malformed digit literal '" + whole + "'");
  }
}

PAdic parse_digit_literal(const std::string& text, int p) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("malformed digit literal '" + text + "'");
  const std::string head = trim(text.substr(0, semi));
  const std::string tail = trim(text.substr(semi + 1));
  if (head.rfind("v=", 0) != 0 || tail.rfind("digits=", 0) != 0) {
    throw ParseError("malformed digit literal '" + text + "'");
  }
  const int v = parse_int(trim(head.substr(2)), text);
  std::vector<int> digits;
  std::stringstream list(tail.substr(7));
  std::string item;
  while (std::getline(list, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ParseError("empty digit in '" + text + "'");
    const int d = parse_int(item, text);
    if (d < 0 || d >= p) {
      throw ParseError("digit " + item + " out of range [0, " + std::to_string(p - 1) +
                       "] in '" + text + "'");
    }
    digits.push_back(d);
  }
  return PAdic::from_digits(p, v, std::move(digits), true);
}

}  // namespace

PAdic::PAdic(int p, int valuation, std::vector<int> digits, bool exact, bool exact_zero)
    : p_(p), val_(valuation), digits_(std::move(digits)), exact_(exact), exact_zero_(exact_zero) {
  normalize();
}

void PAdic::normalize() {
  if (exact_zero_) {
    digits_.clear();
    val_ = 0;
    exact_ = true;
    return;
  }
  const auto first = std::find_if(digits_.begin(), digits_.end(), [](int d) { return d != 0; });
  const auto skipped = static_cast<int>(first - digits_.begin());
  digits_.erase(digits_.begin(), first);
  val_ += skipped;
  if (digits_.empty() && exact_) {
    exact_zero_ = true;
    val_ = 0;
  }
}

PAdic PAdic::zero(int p) {
  require_prime(p);
  return PAdic(p, 0, {}, true, true);
}

PAdic PAdic::power(int p, int e) {
  require_prime(p);
  return PAdic(p, e, {1}, true, false);
}

PAdic PAdic::from_digits(int p, int valuation, std::vector<int> digits, bool exact) {
  require_prime(p);
  for (const int d : digits) {
    if (d < 0 || d >= p) {
      throw DomainError("digit " + std::to_string(d) + " out of range for p = " +
                        std::to_string(p));
    }
  }
  return PAdic(p, valuation, std::move(digits), exact, false);
}

PAdic PAdic::from_rational(const Rational& q, int p, int digits) {
  require_prime(p);
  if (digits < 1) throw DomainError("expansion needs at least one digit");
  if (q == 0) return zero(p);
  Integer num = q.get_num();
  Integer den = q.get_den();
  const int v = strip_factor(num, p) - strip_factor(den, p);
  if (den == 1 && num > 0) {
    return PAdic(p, v, digits_of(num, p, static_cast<std::size_t>(digits)), true, false);
  }
  const Integer modulus = p_pow(p, digits);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer unit = num * inv;
  mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
  return PAdic(p, v, digits_of(unit, p, static_cast<std::size_t>(digits)), false, false);
}

PAdic PAdic::from_integer(long long n, int p, int digits) {
  return from_rational(Rational(Integer(std::to_string(n))), p, digits);
}

int PAdic::valuation() const {
  if (exact_zero_) throw DomainError("valuation of zero is +infinity");
  if (digits_.empty()) {
    throw PrecisionError("indeterminate valuation: value is zero modulo p^" +
                         std::to_string(val_));
  }
  return val_;
}

int PAdic::precision() const noexcept {
  if (exact_) return kExactPrecision;
  return val_ + static_cast<int>(digits_.size());
}

int PAdic::relative_precision() const {
  if (exact_) return INT_MAX;
  return static_cast<int>(digits_.size());
}

int PAdic::digit(int k) const {
  if (exact_zero_ || k < val_) return 0;
  const int offset = k - val_;
  if (offset >= static_cast<int>(digits_.size())) {
    if (exact_) return 0;
    throw PrecisionError("digit at position " + std::to_string(k) +
                         " is beyond the known window (precision " +
                         std::to_string(precision()) + ")");
  }
  return digits_[static_cast<std::size_t>(offset)];
}

Rational PAdic::to_rational() const {
  if (!exact_) throw PrecisionError("windowed p-adic value has no exact rational form");
  if (exact_zero_) return Rational(0);
  Rational q(mantissa(digits_, p_, digits_.size()));
  q *= pow_p(p_, val_);
  return q;
}

PAdic PAdic::truncated_below(int n) const {
  if (exact_zero_) return *this;
  if (precision() < n) {
    throw PrecisionError("digits below position " + std::to_string(n) +
                         " are not all known (precision " + std::to_string(precision()) + ")");
  }
  std::vector<int> kept;
  for (int k = val_; k < n && k - val_ < static_cast<int>(digits_.size()); ++k) {
    kept.push_back(digits_[static_cast<std::size_t>(k - val_)]);
  }
  return PAdic(p_, val_, std::move(kept), true, false);
}

bool operator==(const PAdic& x, const PAdic& y) {
  if (x.p_ != y.p_ || x.exact_ != y.exact_ || x.exact_zero_ != y.exact_zero_) return false;
  if (x.exact_zero_) return true;
  if (x.val_ != y.val_) return false;
  if (!x.exact_) return x.digits_ == y.digits_;
  const std::size_t n = std::max(x.digits_.size(), y.digits_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int dx = i < x.digits_.size() ? x.digits_[i] : 0;
    const int dy = i < y.digits_.size() ? y.digits_[i] : 0;
    if (dx != dy) return false;
  }
  return true;
}

PAdic operator+(const PAdic& x, const PAdic& y) {
  require_same_prime(x, y);
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const int p = x.prime();
  const bool exact = x.is_exact() && y.is_exact();
  const int lo = std::min(x.window_start(), y.window_start());
  int hi = 0;
  if (exact) {
    hi = std::max(x.window_start() + static_cast<int>(x.digits().size()),
                  y.window_start() + static_cast<int>(y.digits().size())) + 1;
  } else {
    hi = std::min(x.precision(), y.precision());
  }
  std::vector<int> out;
  if (lo < hi) out.reserve(static_cast<std::size_t>(hi - lo));
  int carry = 0;
  for (int k = lo; k < hi; ++k) {
    const int s = x.digit(k) + y.digit(k) + carry;
    out.push_back(s % p);
    carry = s / p;
  }
  return PAdic::from_digits(p, std::min(lo, hi), std::move(out), exact);
}

PAdic negate(const PAdic& x) {
  if (x.is_zero()) return x;
  const int p = x.prime();
  const int v = x.window_start();
  const int n = x.is_exact()
                    ? v + std::max(static_cast<int>(x.digits().size()), kDefaultDigits)
                    : x.precision();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - v));
  out.push_back(p - x.digit(v));
  for (int k = v + 1; k < n; ++k) out.push_back(p - 1 - x.digit(k));
  return PAdic::from_digits(p, v, std::move(out), false);
}

PAdic operator-(const PAdic& x) { return negate(x); }

PAdic operator-(const PAdic& x, const PAdic& y) { return x + negate(y); }

PAdic operator*(const PAdic& x, const PAdic& y) {
  require_same_prime(x, y);
  const int p = x.prime();
  if (x.is_exact_zero() || y.is_exact_zero()) return PAdic::zero(p);
  if (x.is_zero_to_precision() || y.is_zero_to_precision()) {
    const int nx = x.is_zero_to_precision() ? x.precision() : x.valuation();
    const int ny = y.is_zero_to_precision() ? y.precision() : y.valuation();
    return PAdic::from_digits(p, nx + ny, {}, false);
  }
  const int v = x.valuation() + y.valuation();
  if (x.is_exact() && y.is_exact()) {
    const Integer m = mantissa(x.digits(), p, x.digits().size()) *
                      mantissa(y.digits(), p, y.digits().size());
    return PAdic::from_digits(p, v, digits_of(m, p, 1), true);
  }
  const int r = std::min(x.relative_precision(), y.relative_precision());
  const auto count = static_cast<std::size_t>(r);
  const Integer modulus = p_pow(p, r);
  Integer m = mantissa(x.digits(), p, count) * mantissa(y.digits(), p, count);
  mpz_mod(m.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
  return PAdic::from_digits(p, v, digits_of(m, p, count), false);
}

PAdic inverse(const PAdic& x) {
  if (x.is_exact_zero()) throw DomainError("inverse of zero");
  if (x.is_zero_to_precision()) {
    throw PrecisionError("inverse of a value that is zero modulo p^" +
                         std::to_string(x.precision()));
  }
  const int p = x.prime();
  const int v = x.valuation();
  if (x.is_exact() && std::count_if(x.digits().begin(), x.digits().end(),
                                    [](int d) { return d != 0; }) == 1 &&
      x.digits()[0] == 1) {
    return PAdic::power(p, -v);
  }
  const int r = x.is_exact() ? std::max(static_cast<int>(x.digits().size()), kDefaultDigits)
                             : x.relative_precision();
  const Integer modulus = p_pow(p, r);
  const Integer m = mantissa(x.digits(), p, static_cast<std::size_t>(r));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), modulus.get_mpz_t());
  return PAdic::from_digits(p, -v, digits_of(inv, p, static_cast<std::size_t>(r)), false);
}

PAdic operator/(const PAdic& x, const PAdic& y) { return x * inverse(y); }

PAdic arith(ArithOp op, const PAdic& x, const std::optional<PAdic>& y) {
  const auto need_y = [&]() -> const PAdic& {
    if (!y) throw DomainError("binary operation needs two operands");
    return *y;
  };
  switch (op) {
    case ArithOp::add:
      return x + need_y();
    case ArithOp::mul:
      return x * need_y();
    case ArithOp::neg:
      return negate(x);
    case ArithOp::inv:
      return inverse(x);
  }
  throw DomainError("unknown operation");
}

PAdic shift(const PAdic& x, int e) {
  if (x.is_exact_zero()) return x;
  return PAdic::from_digits(x.prime(), x.window_start() + e,
                            std::vector<int>(x.digits().begin(), x.digits().end()),
                            x.is_exact());
}

NormValuation norm_and_valuation(const PAdic& x) {
  if (x.is_exact_zero()) return {Rational(0), std::nullopt};
  const int v = x.valuation();
  return {pow_p(x.prime(), -v), v};
}

Rational fractional_part(const PAdic& x) {
  if (x.is_exact_zero() || x.window_start() >= 0) return Rational(0);
  if (x.precision() < 0) {
    throw PrecisionError("negative digits are not all known (precision " +
                         std::to_string(x.precision()) + ")");
  }
  const int v = x.window_start();
  const Integer num = mantissa(x.digits(), x.prime(), static_cast<std::size_t>(-v));
  Rational q(num, p_pow(x.prime(), -v));
  q.canonicalize();
  return q;
}

int digit_at(const PAdic& x, int k) { return x.digit(k); }

UnitPhase character(const PAdic& x) { return UnitPhase(fractional_part(x)); }

int unit_leading_inverse(const PAdic& a) {
  a.valuation();
  return inverse_mod_p(a.digits()[0], a.prime());
}

CosetRep::CosetRep(int p) : digits_(PAdic::zero(p)) {}

CosetRep CosetRep::from_rational(const Rational& q, int p) {
  if (q < 0 || q >= 1 || !has_p_power_denominator(q, p)) {
    throw DomainError("coset representative must be a rational in [0, 1) with " +
                      std::to_string(p) + "-power denominator, got " + padwav::to_string(q));
  }
  return coset_rep(PAdic::from_rational(q, p, 1));
}

CosetRep coset_rep(const PAdic& x) {
  fractional_part(x);  // validates the window
  if (x.is_exact_zero() || x.window_start() >= 0) return CosetRep(x.prime());
  return CosetRep(x.truncated_below(0));
}

PAdic parse_padic(const std::string& text, int p, int target_precision) {
  require_prime(p);
  const std::string t = trim(text);
  if (t.rfind("v=", 0) == 0) return parse_digit_literal(t, p);
  return PAdic::from_rational(parse_rational(t), p, target_precision);
}

std::string to_literal(const PAdic& x) {
  if (x.is_exact()) return to_string(x.to_rational());
  std::string out = "v=" + std::to_string(x.window_start()) + ";digits=";
  for (std::size_t i = 0; i < x.digits().size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(x.digits()[i]);
  }
  return out;
}

}  // namespace padwav
