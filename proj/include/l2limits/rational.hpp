#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace l2limits {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

/// "p/q" (or "p" when q == 1), always in lowest terms.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p"; throws MalformedInput.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

}  // namespace l2limits
