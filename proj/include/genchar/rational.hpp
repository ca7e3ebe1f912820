#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace genchar {

/// Arbitrary-precision rational number. Always kept in canonical form
/// (positive denominator, gcd 1) by every arithmetic operation.
using Rational = mpq_class;

/// Canonical text form: "p/q" with q > 0, integers printed without "/1".
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

/// num/den in canonical form.
inline Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// n! as an exact integer.
mpz_class factorial(int n);

}  // namespace genchar
