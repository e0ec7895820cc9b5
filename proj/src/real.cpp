#include "uu/real.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace uu {

Block block(Side side, std::uint64_t n) {
  Block b;
  b.side = side;
  b.index = n;
  const Rational inner(1, n + 1);
  const Rational outer(1, n + 2);
  const Rational scale(1, (n + 1) * (n + 2));
  if (side == Side::Neg) {
    b.base = Interval{-inner, false, -outer, true};
    b.base_row = 2 * n;
    b.copy_row_offset = 2 * n + 1;
    b.map_offset = -inner;
    b.map_scale = scale;
  } else {
    b.base = Interval{outer, true, inner, false};
    b.base_row = 2 * n + 1;
    b.copy_row_offset = 2 * n + 2;
    b.map_offset = inner;
    b.map_scale = -scale;
  }
  return b;
}

std::optional<Block> block_of_point(const Rational& p) {
  if (p <= -1 || p >= 1) throw std::invalid_argument("block_of_point: point outside (-1,1)");
  if (p == 0) return std::nullopt;
  const Rational q = 1 / abs_of(p);  // in (1, oo); block index n has n+1 < q <= n+2
  const BigInt n = ceil_of(q) - 2;
  const Block b = block(p < 0 ? Side::Neg : Side::Pos, n.convert_to<std::uint64_t>());
  if (!b.base.contains(p)) throw std::logic_error("block_of_point: base lookup failed");
  return b;
}

Rational endpoint(std::uint64_t k) {
  const std::uint64_t n = k / 2;
  const Rational e(1, n + 2);
  return k % 2 == 0 ? -e : e;
}

SeqSpec missing_real(std::uint64_t n) {
  std::vector<std::uint8_t> prefix(static_cast<std::size_t>(n), 0);
  prefix.push_back(1);
  prefix.push_back(0);
  return SeqSpec(std::move(prefix), {1});
}

namespace {

SeqSpec all_ones_after(std::uint64_t j) {
  return SeqSpec(std::vector<std::uint8_t>(static_cast<std::size_t>(j), 0), {1});
}

// 0^j 1^w has prefix 0^j in canonical form.
std::uint64_t zeros_of_lost(const SeqSpec& s) {
  return s.prefix().size();
}

}  // namespace

std::vector<RealStep> real_schedule_steps(std::size_t steps) {
  std::vector<RealStep> out;
  out.reserve(steps);
  std::deque<SeqSpec> pending;
  std::uint64_t fresh = 0;
  std::set<std::uint64_t> used;
  std::set<std::string> seen_targets;

  for (std::size_t step = 0; step < steps; ++step) {
    const bool take_fresh = step % 2 == 0 || pending.empty();
    SeqSpec target = [&] {
      if (take_fresh) return missing_real(fresh++);
      SeqSpec t = pending.front();
      pending.pop_front();
      return t;
    }();
    if (!seen_targets.insert(target.str()).second)
      throw std::logic_error("real_schedule: target repeated");

    std::uint64_t min_index;
    if (take_fresh) {
      const LastZero lz = last_zero(target);
      if (lz.kind != LastZero::Index)
        throw std::logic_error("real_schedule: fresh target has no zero");
      min_index = lz.index + 1;
    } else {
      min_index = zeros_of_lost(target) + 2;
    }
    std::uint64_t k = min_index;
    while (used.count(k)) ++k;
    if (k < 2) throw std::logic_error("real_schedule: endpoint indices 0 and 1 are reserved");
    if (!used.insert(k).second) throw std::logic_error("real_schedule: endpoint index reused");

    std::vector<std::uint64_t> rows;
    for (std::uint64_t r = 0; r < k; ++r)
      if (target.bit(r) == 1) rows.push_back(r);
    SeqSpec lost = all_ones_after(k);
    pending.push_back(lost);
    out.push_back(
        RealStep{k, endpoint(k), std::move(rows), std::move(target), std::move(lost)});
  }
  return out;
}

std::vector<PatchEvent> real_schedule(std::size_t steps) {
  std::vector<PatchEvent> out;
  for (const RealStep& s : real_schedule_steps(steps))
    for (const std::uint64_t r : s.rows)
      out.push_back(PatchEvent{s.point, r, s.target, s.lost});
  return out;
}

namespace {

const Interval& ambient_interval() {
  static const Interval amb = Interval::open(-1, 1);
  return amb;
}

IntervalSet copy_piece(const Block& b, std::uint64_t copy_row,
                       std::span<const PatchEvent> unit_events) {
  const IntervalSet row = staged_row(static_cast<unsigned>(copy_row), unit_events);
  IntervalSet image = affine_image(row, b.map_offset, b.map_scale);
  // t = 0 sits on the endpoint excluded from the block.
  image = remove_point(image, b.apply(0));
  return intersect(image, IntervalSet(ambient_interval()));
}

}  // namespace

IntervalSet block_row_piece(const Block& b, std::uint64_t r,
                            std::span<const PatchEvent> unit_events) {
  if (r < b.copy_row_offset) return IntervalSet{};
  return copy_piece(b, r - b.copy_row_offset, unit_events);
}

IntervalSet a_row(std::uint64_t r, unsigned depth, std::size_t copy_stage) {
  if (depth == 0) throw std::invalid_argument("a_row: depth must be positive");
  const auto unit_events = unit_schedule(copy_stage);
  IntervalSet acc;
  for (std::uint64_t n = 0; 2 * n <= r; ++n) {
    for (const Side side : {Side::Neg, Side::Pos}) {
      const Block b = block(side, n);
      if (b.base_row > r && b.copy_row_offset > r) continue;
      if (b.base_row == r) acc = unite(acc, IntervalSet(b.base));
      if (r >= b.copy_row_offset) acc = unite(acc, block_row_piece(b, r, unit_events));
    }
  }
  return acc;
}

bool gluing_check(std::uint64_t n, std::uint64_t kmax) {
  if (n == 0) throw std::invalid_argument("gluing_check: block 0 has no inner neighbor");
  const std::vector<PatchEvent> no_events;
  for (const Side side : {Side::Neg, Side::Pos}) {
    const Block self = block(side, n);
    const Block neighbor = block(side, n - 1);
    const Rational shared = self.apply(0);  // the excluded endpoint, -/+ 1/(n+1)
    for (std::uint64_t k = 0; k <= kmax; ++k) {
      const std::uint64_t r = self.base_row + k;
      IntervalSet local = block_row_piece(self, r, no_events);
      if (self.base_row == r) local = unite(local, IntervalSet(self.base));
      // Does block n leave a half-open edge at the shared endpoint here?
      bool open_edge = false;
      for (const Interval& part : local.parts()) {
        if (side == Side::Neg && part.lo == shared && !part.lo_closed) open_edge = true;
        if (side == Side::Pos && part.hi == shared && !part.hi_closed) open_edge = true;
      }
      if (!open_edge) continue;
      local = unite(local, block_row_piece(neighbor, r, no_events));
      const auto part = local.part_containing(shared);
      if (!part) return false;
      // The neighbor's closed piece must carry the edge across the endpoint.
      if (!(part->lo < shared && shared < part->hi)) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> section_real(const Rational& p, unsigned depth,
                                        std::size_t stage, std::size_t copy_stage) {
  if (p <= -1 || p >= 1) throw std::invalid_argument("section_real: point outside (-1,1)");
  std::vector<std::uint64_t> rows;
  const auto b = block_of_point(p);
  if (b) {
    const Rational t = b->invert(p);
    const auto unit_events = unit_schedule(copy_stage);
    std::map<std::uint64_t, std::set<Rational>> patch_points;
    for (const PatchEvent& e : unit_events) patch_points[e.row].insert(e.point);
    for (std::uint64_t r = 0; r < depth; ++r) {
      bool in = r == b->base_row;
      if (!in && r >= b->copy_row_offset) {
        const std::uint64_t j = r - b->copy_row_offset;
        in = row_contains(t, static_cast<unsigned>(j));
        if (!in) {
          auto it = patch_points.find(j);
          in = it != patch_points.end() && it->second.count(t) > 0;
        }
      }
      if (in) rows.push_back(r);
    }
  }
  for (const RealStep& s : real_schedule_steps(stage)) {
    if (s.point != p) continue;
    for (const std::uint64_t r : s.rows) {
      if (r >= depth) continue;
      auto it = std::lower_bound(rows.begin(), rows.end(), r);
      if (it == rows.end() || *it != r) rows.insert(it, r);
    }
  }
  return rows;
}

Rational transport(const Rational& p) {
  if (p <= -1 || p >= 1) throw std::invalid_argument("transport: point outside (-1,1)");
  return p / (1 - abs_of(p));
}

Rational transport_inverse(const Rational& y) {
  return y / (1 + abs_of(y));
}

}  // namespace uu
