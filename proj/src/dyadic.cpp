#include "uu/dyadic.hpp"

#include <stdexcept>

namespace uu {

Label::Label(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("label bits must be 0 or 1");
}

std::optional<Label> Label::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') return std::nullopt;
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Label(std::move(bits));
}

Label Label::child(int bit) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.push_back(static_cast<std::uint8_t>(bit & 1));
  return Label(std::move(bits));
}

std::string Label::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out += static_cast<char>('0' + b);
  return out;
}

Cell root_cell() {
  return Cell{Label{}, Interval::closed(0, 1), 0, 0};
}

int cell_parity(const Cell& c) {
  return c.level == 0 ? 1 : static_cast<int>(c.position & 1);
}

Cell child_cell(const Cell& parent, int bit) {
  if (parent.level >= 62) throw std::invalid_argument("subdivision level too deep");
  const int b = bit & 1;
  const Rational mid = (parent.interval.lo + parent.interval.hi) / 2;
  const int parity = cell_parity(parent);
  // With even parity the 1-child takes the left half, with odd parity the
  // right half; either way the 1-child's new endpoint is closed.
  const bool one_is_left = parity == 0;
  const bool go_left = (b == 1) == one_is_left;
  Cell out;
  out.label = parent.label.child(b);
  out.level = parent.level + 1;
  if (go_left) {
    out.position = parent.position * 2;
    out.interval = Interval{parent.interval.lo, parent.interval.lo_closed, mid, b == 1};
  } else {
    out.position = parent.position * 2 + 1;
    out.interval = Interval{mid, b == 1, parent.interval.hi, parent.interval.hi_closed};
  }
  return out;
}

Cell cell(const Label& x) {
  Cell c = root_cell();
  for (auto b : x.bits()) c = child_cell(c, b);
  return c;
}

std::uint64_t position(const Label& x) {
  return cell(x).position;
}

Interval closure_interval(const Label& x) {
  const Cell c = cell(x);
  return Interval::closed(dyadic(c.position, c.level), dyadic(c.position + 1, c.level));
}

Label code_of_point(const Rational& p, unsigned depth) {
  if (p < 0 || p > 1) throw std::invalid_argument("code_of_point: point outside [0,1]");
  Cell c = root_cell();
  std::vector<std::uint8_t> bits;
  bits.reserve(depth);
  for (unsigned i = 0; i < depth; ++i) {
    Cell zero = child_cell(c, 0);
    if (zero.interval.contains(p)) {
      bits.push_back(0);
      c = std::move(zero);
    } else {
      Cell one = child_cell(c, 1);
      if (!one.interval.contains(p))
        throw std::logic_error("code_of_point: children do not cover parent");
      bits.push_back(1);
      c = std::move(one);
    }
  }
  return Label(std::move(bits));
}

}  // namespace uu
