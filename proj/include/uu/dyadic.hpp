#pragma once

#include "uu/interval.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uu {

// Finite binary word indexing a subdivision cell. The empty word is the root.
class Label {
 public:
  Label() = default;
  explicit Label(std::vector<std::uint8_t> bits);
  static std::optional<Label> parse(std::string_view text);  // "0010", "" = root

  Label child(int bit) const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::size_t level() const { return bits_.size(); }
  std::string str() const;

  bool operator==(const Label&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// A subdivision cell: the interval spans exactly
// [position/2^level, (position+1)/2^level] with flags set by the recursion.
struct Cell {
  Label label;
  Interval interval;
  std::uint64_t position = 0;
  unsigned level = 0;
};

Cell root_cell();

// The parity of a cell drives which child owns the midpoint. The root is
// treated as odd, so the midpoint 1/2 lands in the right child, labeled 1.
int cell_parity(const Cell& c);

// Splits the parent at its midpoint. Even parity: the 1-child is the left
// half with the midpoint closed; odd parity: the 1-child is the right half
// with the midpoint closed. The other child gets the midpoint open; the
// outer flags are inherited. Levels are capped at 62 so positions fit.
Cell child_cell(const Cell& parent, int bit);

Cell cell(const Label& x);
std::uint64_t position(const Label& x);

// Full closed dyadic interval over the cell, [pos/2^n, (pos+1)/2^n].
Interval closure_interval(const Label& x);

// The unique length-`depth` word whose cell chain contains p.
// Throws std::invalid_argument outside [0,1].
Label code_of_point(const Rational& p, unsigned depth);

}  // namespace uu
