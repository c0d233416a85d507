#include "padwav/rational.hpp"

#include <cctype>

#include "padwav/errors.hpp"

namespace padwav {

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) {
    throw DomainError("p = " + std::to_string(p) + " is not a prime");
  }
}

Rational pow_p(int p, int e) {
  Integer base;
  mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(base);
  Rational q(Integer(1), base);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(const std::string& text, const std::string& whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("malformed rational literal '" + whole + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("malformed rational literal '" + whole + "'");
    }
  }
  Integer z(text.substr(i), 10);
  return negative ? Integer(-z) : z;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t, text));
  const Integer num = parse_integer(trim(t.substr(0, slash)), text);
  const std::string den_text = trim(t.substr(slash + 1));
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned in '" + text + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

int strip_factor(Integer& z, int p) {
  int count = 0;
  if (z == 0) return 0;
  while (mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    mpz_divexact_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    ++count;
  }
  return count;
}

bool has_p_power_denominator(const Rational& q, int p) {
  Integer den = q.get_den();
  strip_factor(den, p);
  return den == 1;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace padwav
