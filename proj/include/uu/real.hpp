#pragma once

#include "uu/interval.hpp"
#include "uu/sequence.hpp"
#include "uu/unit.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace uu {

enum class Side { Neg, Pos };

// One block of the (-1,1) decomposition: a half-open base strip carrying one
// row, plus an affinely embedded copy of the unit construction starting at
// copy_row_offset. Neg blocks embed orientation-preserving, Pos blocks
// reversed; either way t = 0 lands on the block's excluded endpoint.
struct Block {
  Side side = Side::Neg;
  std::uint64_t index = 0;
  Interval base;
  std::uint64_t base_row = 0;
  std::uint64_t copy_row_offset = 0;
  Rational map_offset;  // t |-> map_offset + map_scale * t
  Rational map_scale;

  Rational apply(const Rational& t) const { return map_offset + map_scale * t; }
  Rational invert(const Rational& x) const { return (x - map_offset) / map_scale; }
};

Block block(Side side, std::uint64_t n);

// The unique block whose base contains p; nullopt exactly at p == 0.
// Throws std::invalid_argument outside (-1,1).
std::optional<Block> block_of_point(const Rational& p);

// Included block endpoints: e_{2n} = -1/(n+2), e_{2n+1} = +1/(n+2).
// The pre-patch section of e_k is 0^k 1^w.
Rational endpoint(std::uint64_t k);

// 0^n 1 0 1^w: the one section each block fails to realize, because it
// would sit on the block's excluded endpoint.
SeqSpec missing_real(std::uint64_t n);

// One patch step: every row in `rows` gains the point `point` (= endpoint
// of the chosen index), realizing `target` and giving up `lost`.
struct RealStep {
  std::uint64_t endpoint_index = 0;
  Rational point;
  std::vector<std::uint64_t> rows;
  SeqSpec target;
  SeqSpec lost;
};

// Deterministic schedule mirroring the unit one: even steps take the next
// fresh missing sequence (smallest unused endpoint index >= last_zero + 1),
// odd steps the oldest pending lost word 0^j 1^w (smallest unused index
// >= j + 2). Endpoint indices 0 and 1 are never touched.
std::vector<RealStep> real_schedule_steps(std::size_t steps);
std::vector<PatchEvent> real_schedule(std::size_t steps);  // steps flattened

// Row r of the glued set: base strips plus block-mapped staged unit rows,
// with each copy's excluded-endpoint image removed and everything clipped
// to (-1,1). `depth` must be positive; the row set itself is exact in r.
IntervalSet a_row(std::uint64_t r, unsigned depth, std::size_t copy_stage);

// Contribution of a single block to row r (copies only at base_row != r).
IntervalSet block_row_piece(const Block& b, std::uint64_t r,
                            std::span<const PatchEvent> unit_events);

// Verifies that every half-open piece contributed by block n with its open
// end at the excluded endpoint (rows base..base+kmax) is completed to a
// closed part by the neighbor block's pieces.
bool gluing_check(std::uint64_t n, std::uint64_t kmax);

// Sorted rows below `depth` through (p, row) in the staged set: block
// membership (with the embedded copy at copy_stage) plus the rows patched
// at p by the first `stage` schedule steps.
std::vector<std::uint64_t> section_real(const Rational& p, unsigned depth,
                                        std::size_t stage, std::size_t copy_stage);

// Increasing bijection (-1,1) -> R, p |-> p/(1-|p|), with exact inverse.
Rational transport(const Rational& p);
Rational transport_inverse(const Rational& y);

}  // namespace uu
