#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace uu {

// Exact arbitrary-precision arithmetic. cpp_rational keeps every value in
// lowest terms with a positive denominator, so representation equality is
// value equality.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt pow2(unsigned n);

// numerator / 2^level
Rational dyadic(const BigInt& numerator, unsigned level);

// Canonical text form "p/q", e.g. "-5/12", "0/1".
std::string format_rational(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-'; rejects q <= 0 and junk.
std::optional<Rational> parse_rational(std::string_view text);

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
Rational abs_of(const Rational& r);
bool is_integer(const Rational& r);

}  // namespace uu
