#include "uu/rational.hpp"

#include <cctype>

namespace uu {

BigInt pow2(unsigned n) {
  BigInt one = 1;
  return one << n;
}

Rational dyadic(const BigInt& numerator, unsigned level) {
  return Rational(numerator, pow2(level));
}

std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  out += '/';
  out += denominator(r).str();
  return out;
}

namespace {

bool parse_int(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) return false;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = neg ? -value : value;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
    return Rational(num);
  }
  BigInt den;
  if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
  if (den <= 0) return std::nullopt;
  return Rational(num, den);
}

BigInt floor_of(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

BigInt ceil_of(const Rational& r) {
  return -floor_of(-r);
}

Rational abs_of(const Rational& r) {
  return r < 0 ? Rational(-r) : r;
}

bool is_integer(const Rational& r) {
  return denominator(r) == 1;
}

}  // namespace uu
