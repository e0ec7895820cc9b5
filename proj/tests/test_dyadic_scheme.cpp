#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uu/dyadic.hpp"

#include <functional>

using namespace uu;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

Label lbl(std::initializer_list<int> bits) {
  std::vector<std::uint8_t> v;
  for (int b : bits) v.push_back(static_cast<std::uint8_t>(b));
  return Label(v);
}

void walk_cells(unsigned max_level, const std::function<void(const Cell&)>& fn) {
  std::function<void(const Cell&)> rec = [&](const Cell& c) {
    fn(c);
    if (c.level == max_level) return;
    rec(child_cell(c, 0));
    rec(child_cell(c, 1));
  };
  rec(root_cell());
}

}  // namespace

TEST_CASE("cells at the first two levels") {
  CHECK(cell(lbl({0})).interval == Interval{rat(0), true, rat(1, 2), false});
  CHECK(cell(lbl({1})).interval == Interval::closed(rat(1, 2), 1));
  CHECK(cell(lbl({1})).position == 1);

  CHECK(cell(lbl({0, 1})).interval == Interval::closed(0, rat(1, 4)));
  CHECK(cell(lbl({0, 1})).position == 0);
  CHECK(cell(lbl({0, 0})).interval == Interval::open(rat(1, 4), rat(1, 2)));
  CHECK(cell(lbl({0, 0})).position == 1);
  CHECK(cell(lbl({1, 0})).interval == Interval{rat(1, 2), true, rat(3, 4), false});
  CHECK(cell(lbl({1, 0})).position == 2);
  CHECK(cell(lbl({1, 1})).interval == Interval::closed(rat(3, 4), 1));
  CHECK(cell(lbl({1, 1})).position == 3);
}

TEST_CASE("position is the left-to-right index") {
  CHECK(position(Label{}) == 0);
  CHECK(position(lbl({0, 1})) == 0);
  CHECK(position(lbl({1, 1})) == 3);
  walk_cells(8, [](const Cell& c) {
    CHECK(c.position < (std::uint64_t{1} << c.level));
    CHECK(c.interval.lo == dyadic(c.position, c.level));
    CHECK(c.interval.hi == dyadic(c.position + 1, c.level));
  });
}

TEST_CASE("closure_interval is the closed dyadic hull") {
  CHECK(closure_interval(lbl({0, 0})) == Interval::closed(rat(1, 4), rat(1, 2)));
  CHECK(closure_interval(lbl({1, 1})) == Interval::closed(rat(3, 4), 1));
  CHECK(closure_interval(lbl({0, 1, 1})) == Interval::closed(0, rat(1, 8)));
  walk_cells(8, [](const Cell& c) {
    CHECK(IntervalSet(closure_interval(c.label)) == closure(IntervalSet(c.interval)));
  });
}

TEST_CASE("code_of_point walks the unique cell chain") {
  CHECK(code_of_point(rat(1, 2), 3) == lbl({1, 0, 1}));
  CHECK(code_of_point(rat(0), 4) == lbl({0, 1, 1, 1}));
  CHECK(code_of_point(rat(3, 8), 5) == lbl({0, 0, 1, 0, 1}));
  CHECK(code_of_point(rat(1), 4) == lbl({1, 1, 1, 1}));
  CHECK_THROWS_AS(code_of_point(rat(3, 2), 2), std::invalid_argument);
  CHECK_THROWS_AS(code_of_point(rat(-1, 8), 2), std::invalid_argument);
}

TEST_CASE("every level partitions the unit interval") {
  for (unsigned level = 0; level <= 11; ++level) {
    std::vector<Interval> parts;
    walk_cells(level, [&](const Cell& c) {
      if (c.level == level) parts.push_back(c.interval);
    });
    // Pairwise disjoint: the union of 2^level parts must resolve exactly to
    // [0,1], and every pairwise intersection must be empty.
    CHECK(IntervalSet::from_parts(parts) == IntervalSet(Interval::closed(0, 1)));
    Rational total = 0;
    for (const auto& iv : parts) total += iv.width();
    CHECK(total == 1);
  }
}

TEST_CASE("sibling cells are disjoint and cover the parent") {
  walk_cells(9, [](const Cell& c) {
    if (c.level >= 9) return;
    const Cell zero = child_cell(c, 0);
    const Cell one = child_cell(c, 1);
    const IntervalSet z{zero.interval}, o{one.interval};
    CHECK(intersect(z, o).empty());
    CHECK(unite(z, o) == IntervalSet(c.interval));
    // Nesting.
    CHECK(intersect(z, IntervalSet(c.interval)) == z);
    CHECK(intersect(o, IntervalSet(c.interval)) == o);
  });
}

TEST_CASE("cell width halves at every level") {
  walk_cells(10, [](const Cell& c) {
    CHECK(c.interval.width() == dyadic(1, c.level));
  });
}

TEST_CASE("the parent midpoint always lands in the 1-child") {
  walk_cells(9, [](const Cell& c) {
    if (c.level >= 9) return;
    const Rational mid = (c.interval.lo + c.interval.hi) / 2;
    CHECK(child_cell(c, 1).interval.contains(mid));
    CHECK(!child_cell(c, 0).interval.contains(mid));
  });
}

TEST_CASE("bracket pattern: new endpoints follow the period-4 layout") {
  // Each cell has exactly one endpoint created at its own level (the odd
  // numerator one); its flag follows the printed period-4 pattern. The flag
  // at the inherited endpoint comes from the parent, so positions 0 and 3
  // mod 4 are exactly the 1-labeled cells but need not be closed on both
  // sides below level 3.
  walk_cells(10, [](const Cell& c) {
    if (c.level < 2) return;
    const std::uint64_t j = c.position;
    const bool ends_in_one = c.label.bits().back() == 1;
    CHECK(ends_in_one == (j % 4 == 0 || j % 4 == 3));
    switch (j % 4) {
      case 0: CHECK(c.interval.hi_closed); break;   // [.,.]: new endpoint right
      case 1: CHECK(!c.interval.lo_closed); break;  // (.,.): new endpoint left
      case 2: CHECK(!c.interval.hi_closed); break;  // [.,.): new endpoint right
      case 3: CHECK(c.interval.lo_closed); break;   // [.,.]: new endpoint left
    }
  });
}

TEST_CASE("deep labels keep exact rational endpoints") {
  Cell c = root_cell();
  for (int i = 0; i < 40; ++i) c = child_cell(c, i % 2);
  CHECK(c.level == 40);
  CHECK(c.interval.width() == dyadic(1, 40));
  CHECK(c.interval.lo == dyadic(c.position, 40));
}
