#pragma once

#include <gmpxx.h>

#include <string>

namespace padwav {

/// Exact rational numbers (GMP). Always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

bool is_prime(int p) noexcept;

/// Throws DomainError unless p is a prime.
void require_prime(int p);

/// p^e for any integer e, exactly.
Rational pow_p(int p, int e);

/// "m" for integers, "m/n" otherwise.
std::string to_string(const Rational& q);

/// Parses "m", "-m", "m/n"; throws ParseError on malformed text or n == 0.
Rational parse_rational(const std::string& text);

/// True when the reduced denominator of q is a power of p (including 1).
bool has_p_power_denominator(const Rational& q, int p);

/// Divides z by p as often as possible and returns the count (z != 0).
int strip_factor(Integer& z, int p);

double to_double(const Rational& q);

}  // namespace padwav
