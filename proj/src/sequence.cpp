#include "uu/sequence.hpp"

#include "uu/dyadic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace uu {

namespace {

// Smallest d dividing word.size() with word = (first d symbols)^k.
std::size_t primitive_period(const std::vector<std::uint8_t>& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = word[i] == word[i % d];
    if (ok) return d;
  }
  return n;
}

}  // namespace

SeqSpec::SeqSpec(std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (tail_.empty()) throw std::invalid_argument("sequence tail must be nonempty");
  for (auto b : prefix_)
    if (b > 1) throw std::invalid_argument("sequence bits must be 0 or 1");
  for (auto b : tail_)
    if (b > 1) throw std::invalid_argument("sequence bits must be 0 or 1");
  tail_.resize(primitive_period(tail_));
  // Absorb prefix symbols that the rotated tail already produces.
  while (!prefix_.empty() && prefix_.back() == tail_.back()) {
    prefix_.pop_back();
    std::rotate(tail_.rbegin(), tail_.rbegin() + 1, tail_.rend());
  }
}

std::optional<SeqSpec> SeqSpec::parse(std::string_view text) {
  const auto sep = text.find(';');
  if (sep == std::string_view::npos) return std::nullopt;
  auto read_bits = [](std::string_view part, std::vector<std::uint8_t>& out) {
    for (char c : part) {
      if (c != '0' && c != '1') return false;
      out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return true;
  };
  std::vector<std::uint8_t> prefix, tail;
  if (!read_bits(text.substr(0, sep), prefix)) return std::nullopt;
  if (!read_bits(text.substr(sep + 1), tail)) return std::nullopt;
  if (tail.empty()) return std::nullopt;
  return SeqSpec(std::move(prefix), std::move(tail));
}

int SeqSpec::bit(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[static_cast<std::size_t>(n)];
  return tail_[static_cast<std::size_t>((n - prefix_.size()) % tail_.size())];
}

std::string SeqSpec::str() const {
  std::string out;
  out.reserve(prefix_.size() + tail_.size() + 1);
  for (auto b : prefix_) out += static_cast<char>('0' + b);
  out += ';';
  for (auto b : tail_) out += static_cast<char>('0' + b);
  return out;
}

bool same_word(const SeqSpec& a, const SeqSpec& b) {
  const std::uint64_t pre = std::max(a.prefix().size(), b.prefix().size());
  const std::uint64_t period = std::lcm<std::uint64_t>(a.tail().size(), b.tail().size());
  for (std::uint64_t n = 0; n < pre + period; ++n)
    if (a.bit(n) != b.bit(n)) return false;
  return true;
}

SeqSpec flip_bit(const SeqSpec& s, std::uint64_t n) {
  const std::size_t plen = s.prefix().size();
  const std::size_t tlen = s.tail().size();
  std::vector<std::uint8_t> prefix = s.prefix();
  std::vector<std::uint8_t> tail = s.tail();
  if (n >= plen) {
    // Materialize through bit n, then restart the tail from the right phase.
    for (std::uint64_t i = plen; i <= n; ++i)
      prefix.push_back(static_cast<std::uint8_t>(s.bit(i)));
    const std::size_t shift = static_cast<std::size_t>((n + 1 - plen) % tlen);
    std::rotate(tail.begin(), tail.begin() + shift, tail.end());
  }
  prefix[static_cast<std::size_t>(n)] ^= 1;
  return SeqSpec(std::move(prefix), std::move(tail));
}

LastZero last_zero(const SeqSpec& s) {
  for (auto b : s.tail())
    if (b == 0) return {LastZero::Infinite, 0};
  // All-ones tail: canonical form has no trailing ones in the prefix, but
  // scan defensively anyway.
  for (std::size_t i = s.prefix().size(); i-- > 0;)
    if (s.prefix()[i] == 0) return {LastZero::Index, i};
  return {LastZero::None, 0};
}

SeqClass classify(const SeqSpec& s) {
  const LastZero lz = last_zero(s);
  switch (lz.kind) {
    case LastZero::Infinite:
      return SeqClass::InfinitelyManyZeros;
    case LastZero::None:
      return SeqClass::RealizedEndpoint;
    case LastZero::Index:
      break;
  }
  if (lz.index >= 1 && s.bit(lz.index - 1) == 0) return SeqClass::MissingUnit;
  return SeqClass::RealizedEndpoint;
}

std::optional<Rational> limit_point(const SeqSpec& s) {
  if (classify(s) == SeqClass::MissingUnit) return std::nullopt;

  Cell cur = root_cell();
  for (auto b : s.prefix()) cur = child_cell(cur, b);

  // One tail period is a self-similar step only when the cell parity
  // returns; it flips iff period + sum(tail) is odd, so double up then.
  const std::size_t period = s.tail().size();
  std::uint64_t ones = 0;
  for (auto b : s.tail()) ones += b;
  const unsigned rounds = ((period + ones) % 2 == 0) ? 1 : 2;
  const unsigned span = static_cast<unsigned>(period * rounds);

  Rational rel_offset = 0;  // left offset of the descendant, in parent widths
  int parity = cell_parity(cur);
  for (unsigned i = 0; i < span; ++i) {
    const int bit = s.tail()[i % period];
    const bool right = bit == parity;
    if (right) rel_offset += dyadic(1, i + 1);
    parity = right ? 1 : 0;
  }

  const Rational width = dyadic(1, cur.level);
  const BigInt scale = pow2(span);
  const Rational limit =
      cur.interval.lo + rel_offset * width * Rational(scale, scale - 1);

  // Flag-respecting membership along the chain; a violation would mean the
  // classification and the geometry disagree.
  const std::uint64_t check_depth = s.prefix().size() + 3ull * span;
  Cell probe = root_cell();
  for (std::uint64_t n = 0; n <= check_depth; ++n) {
    if (!probe.interval.contains(limit))
      throw std::logic_error("limit_point: fixed point escapes its cell chain");
    if (n < check_depth) probe = child_cell(probe, s.bit(n));
  }
  return limit;
}

}  // namespace uu
