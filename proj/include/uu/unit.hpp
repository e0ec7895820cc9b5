#pragma once

#include "uu/interval.hpp"
#include "uu/sequence.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace uu {

// One added point (point, row): the section at `point` gains `target` and
// gives up `lost`, which is the target with bit `row` turned back off.
struct PatchEvent {
  Rational point;
  std::uint64_t row = 0;
  SeqSpec target;
  SeqSpec lost;
};

// Row n of the base set: the displayed closed-form union.
IntervalSet row_formula(unsigned n);

// Row n assembled from the subdivision: closures of all 1-labeled cells at
// level n+1. Equal to row_formula(n); the two routes are kept independent.
IntervalSet row_constructive(unsigned n);

// Point membership in row n without materializing the row: the closed
// dyadic parent of p at level n+1 belongs to the row iff its position is
// 0 or 3 mod 4 (row 0 is the single cell [1/2,1]).
bool row_contains(const Rational& p, unsigned n);

// i-th sequence of the missing family u.(0,0).1^w, enumerated by |u|
// ascending, then by the binary value of u.
SeqSpec missing_unit(std::uint64_t i);

// Deterministic patch schedule: even steps take the next fresh missing
// sequence, odd steps re-target the oldest previously lost one. Each target
// with last zero at k is realized by adding (limit of flip(target, k+2),
// row k+2). Throws std::logic_error if a distinctness or limit invariant
// breaks.
std::vector<PatchEvent> unit_schedule(std::size_t events);

// Row n plus the patch points of the leading events that land in it.
IntervalSet staged_row(unsigned n, std::span<const PatchEvent> events);

// Sorted row indices below `depth` whose staged row contains p.
std::vector<std::uint64_t> section_unit(const Rational& p, unsigned depth,
                                        std::span<const PatchEvent> events);
std::vector<std::uint64_t> section_unit(const Rational& p, unsigned depth, std::size_t stage);

}  // namespace uu
