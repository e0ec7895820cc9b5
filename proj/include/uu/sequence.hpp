#pragma once

#include "uu/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uu {

// Eventually periodic element of 2^omega: finite prefix, then the tail word
// repeated forever. Construction canonicalizes, so equal infinite words have
// equal representations: the tail is primitive and the prefix is shortest
// (trailing prefix symbols matching the rotated tail are absorbed).
class SeqSpec {
 public:
  SeqSpec(std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> tail);
  static std::optional<SeqSpec> parse(std::string_view text);  // "prefix;tail"

  int bit(std::uint64_t n) const;
  const std::vector<std::uint8_t>& prefix() const { return prefix_; }
  const std::vector<std::uint8_t>& tail() const { return tail_; }
  std::string str() const;  // "0010;1"; empty prefix prints as ";1"

  bool operator==(const SeqSpec&) const = default;

 private:
  std::vector<std::uint8_t> prefix_;
  std::vector<std::uint8_t> tail_;
};

// Equality of the underlying infinite words, decided by comparing
// max(prefix lengths) + lcm(periods) leading symbols.
bool same_word(const SeqSpec& a, const SeqSpec& b);

SeqSpec flip_bit(const SeqSpec& s, std::uint64_t n);

struct LastZero {
  enum Kind { Index, None, Infinite } kind = None;
  std::uint64_t index = 0;  // valid when kind == Index
};

// Largest n with bit n == 0 for all-ones tails; None when the word is 1^w;
// Infinite when the tail itself contains a zero.
LastZero last_zero(const SeqSpec& s);

enum class SeqClass { InfinitelyManyZeros, RealizedEndpoint, MissingUnit };

// MissingUnit: eventually all ones with the last zero at some k >= 1
// preceded by another zero; exactly the sequences whose nested cell chain
// pinches onto an excluded endpoint.
SeqClass classify(const SeqSpec& s);

// Exact limit of the nested cell chain, or nullopt when the chain is empty
// (the MissingUnit class). The tail is applied as an affine contraction
// whose fixed point is computed in closed form; the result is then checked
// against the flagged cells through prefix + 3 * period levels.
std::optional<Rational> limit_point(const SeqSpec& s);

}  // namespace uu
