#include "uu/unit.hpp"

#include "uu/dyadic.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace uu {

IntervalSet row_formula(unsigned n) {
  if (n == 0) return IntervalSet(Interval::closed(Rational(1, 2), 1));
  std::vector<Interval> parts;
  const BigInt den = pow2(n + 1);
  parts.push_back(Interval::closed(0, Rational(1, den)));
  parts.push_back(Interval::closed(Rational(den - 1, den), 1));
  const BigInt kmax = pow2(n - 1) - 1;
  for (BigInt k = 1; k <= kmax; ++k)
    parts.push_back(Interval::closed(Rational(4 * k - 1, den), Rational(4 * k + 1, den)));
  return IntervalSet::from_parts(std::move(parts));
}

namespace {

void collect_one_closures(const Cell& c, unsigned level, std::vector<Interval>& out) {
  if (c.level == level) {
    const Cell one = child_cell(c, 1);
    out.push_back(Interval::closed(dyadic(one.position, one.level),
                                   dyadic(one.position + 1, one.level)));
    return;
  }
  collect_one_closures(child_cell(c, 0), level, out);
  collect_one_closures(child_cell(c, 1), level, out);
}

}  // namespace

IntervalSet row_constructive(unsigned n) {
  std::vector<Interval> parts;
  parts.reserve(static_cast<std::size_t>(1) << n);
  collect_one_closures(root_cell(), n, parts);
  return IntervalSet::from_parts(std::move(parts));
}

bool row_contains(const Rational& p, unsigned n) {
  if (p < 0 || p > 1) throw std::invalid_argument("row_contains: point outside [0,1]");
  if (n == 0) return p >= Rational(1, 2);
  const unsigned level = n + 1;
  const Rational scaled = p * pow2(level);
  const BigInt q = floor_of(scaled);
  const auto in_row = [](const BigInt& pos) {
    const BigInt m = pos % 4;
    return m == 0 || m == 3;
  };
  if (q < pow2(level) && in_row(q)) return true;
  if (is_integer(scaled) && q >= 1 && in_row(q - 1)) return true;
  return false;
}

SeqSpec missing_unit(std::uint64_t i) {
  std::uint64_t len = 0;
  std::uint64_t count = 1;
  while (i >= count) {
    i -= count;
    ++len;
    if (len > 62) throw std::invalid_argument("missing_unit index out of range");
    count <<= 1;
  }
  std::vector<std::uint8_t> prefix;
  prefix.reserve(static_cast<std::size_t>(len) + 2);
  for (std::uint64_t b = len; b-- > 0;)
    prefix.push_back(static_cast<std::uint8_t>((i >> b) & 1));
  prefix.push_back(0);
  prefix.push_back(0);
  return SeqSpec(std::move(prefix), {1});
}

std::vector<PatchEvent> unit_schedule(std::size_t events) {
  std::vector<PatchEvent> out;
  out.reserve(events);
  std::deque<SeqSpec> pending;
  std::uint64_t fresh = 0;
  std::set<std::string> seen;
  std::set<Rational> points;

  for (std::size_t step = 0; step < events; ++step) {
    SeqSpec target = [&] {
      if (step % 2 == 0 || pending.empty()) {
        SeqSpec t = missing_unit(fresh++);
        if (!seen.insert(t.str()).second)
          throw std::logic_error("unit_schedule: fresh target already seen");
        return t;
      }
      SeqSpec t = pending.front();
      pending.pop_front();
      return t;
    }();

    const LastZero lz = last_zero(target);
    if (lz.kind != LastZero::Index)
      throw std::logic_error("unit_schedule: target has no last zero");
    const std::uint64_t row = lz.index + 2;

    SeqSpec lost = flip_bit(target, row);
    if (classify(lost) == SeqClass::MissingUnit)
      throw std::logic_error("unit_schedule: lost sequence falls in the missing family");
    if (!seen.insert(lost.str()).second)
      throw std::logic_error("unit_schedule: lost sequence collides with an earlier one");

    const auto point = limit_point(lost);
    if (!point) throw std::logic_error("unit_schedule: lost sequence has empty limit");
    if (!points.insert(*point).second)
      throw std::logic_error("unit_schedule: patch point reused");

    out.push_back(PatchEvent{*point, row, std::move(target), lost});
    pending.push_back(std::move(lost));
  }
  return out;
}

IntervalSet staged_row(unsigned n, std::span<const PatchEvent> events) {
  IntervalSet row = row_constructive(n);
  std::vector<Interval> extra;
  for (const PatchEvent& e : events)
    if (e.row == n) extra.push_back(Interval::point(e.point));
  if (extra.empty()) return row;
  return unite(row, IntervalSet::from_parts(std::move(extra)));
}

std::vector<std::uint64_t> section_unit(const Rational& p, unsigned depth,
                                        std::span<const PatchEvent> events) {
  if (p < 0 || p > 1) throw std::invalid_argument("section_unit: point outside [0,1]");
  std::vector<std::uint64_t> rows;
  for (unsigned n = 0; n < depth; ++n)
    if (row_contains(p, n)) rows.push_back(n);
  for (const PatchEvent& e : events) {
    if (e.point != p || e.row >= depth) continue;
    auto it = std::lower_bound(rows.begin(), rows.end(), e.row);
    if (it == rows.end() || *it != e.row) rows.insert(it, e.row);
  }
  return rows;
}

std::vector<std::uint64_t> section_unit(const Rational& p, unsigned depth, std::size_t stage) {
  const auto events = unit_schedule(stage);
  return section_unit(p, depth, events);
}

}  // namespace uu
