#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ellfm {

using Rational = mpq_class;

/// Parses "p", "-p", "p/q" with q != 0. Leading '+' is accepted. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when integral) rendering.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// num/den in canonical form. mpq_class's two-argument constructor does not reduce.
inline Rational ratio(long num, long den) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

}  // namespace ellfm
