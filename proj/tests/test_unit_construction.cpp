#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uu/dyadic.hpp"
#include "uu/unit.hpp"

#include <map>
#include <set>

using namespace uu;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

SeqSpec sp(std::initializer_list<int> prefix, std::initializer_list<int> tail) {
  std::vector<std::uint8_t> p, t;
  for (int b : prefix) p.push_back(static_cast<std::uint8_t>(b));
  for (int b : tail) t.push_back(static_cast<std::uint8_t>(b));
  return SeqSpec(std::move(p), std::move(t));
}

std::vector<std::uint64_t> rows_of(std::initializer_list<std::uint64_t> rows) {
  return std::vector<std::uint64_t>(rows);
}

}  // namespace

TEST_CASE("row formula fixtures") {
  CHECK(row_formula(0) == IntervalSet(Interval::closed(rat(1, 2), 1)));
  CHECK(row_formula(1) == IntervalSet::from_parts({Interval::closed(0, rat(1, 4)),
                                                   Interval::closed(rat(3, 4), 1)}));
  CHECK(row_formula(2) == IntervalSet::from_parts({Interval::closed(0, rat(1, 8)),
                                                   Interval::closed(rat(3, 8), rat(5, 8)),
                                                   Interval::closed(rat(7, 8), 1)}));
}

TEST_CASE("constructive rows match the closed-form rows exactly") {
  CHECK(row_constructive(0) == IntervalSet(Interval::closed(rat(1, 2), 1)));
  for (unsigned n = 0; n <= 12; ++n) CHECK(row_constructive(n) == row_formula(n));
}

TEST_CASE("pointwise row membership matches the materialized rows") {
  for (unsigned n = 0; n <= 10; ++n) {
    const IntervalSet row = row_constructive(n);
    for (std::uint64_t i = 0; i <= 512; ++i) {
      const Rational p = rat(i, 512);
      CHECK(row_contains(p, n) == row.contains(p));
    }
    CHECK(row_contains(rat(1, 3), n) == row.contains(rat(1, 3)));
    CHECK(row_contains(rat(2, 3), n) == row.contains(rat(2, 3)));
  }
}

TEST_CASE("missing family enumeration") {
  CHECK(missing_unit(0) == sp({0, 0}, {1}));
  CHECK(missing_unit(1) == sp({0, 0, 0}, {1}));
  CHECK(missing_unit(2) == sp({1, 0, 0}, {1}));
  CHECK(missing_unit(3) == sp({0, 0, 0, 0}, {1}));
  CHECK(missing_unit(4) == sp({0, 1, 0, 0}, {1}));
  CHECK(missing_unit(5) == sp({1, 0, 0, 0}, {1}));
  CHECK(missing_unit(6) == sp({1, 1, 0, 0}, {1}));
  // Exactly the MissingUnit class, pairwise distinct.
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < 64; ++i) {
    const SeqSpec m = missing_unit(i);
    CHECK(classify(m) == SeqClass::MissingUnit);
    CHECK(seen.insert(m.str()).second);
  }
}

TEST_CASE("schedule fixtures: first three events") {
  const auto events = unit_schedule(3);
  REQUIRE(events.size() == 3);

  CHECK(events[0].point == rat(3, 8));
  CHECK(events[0].row == 3);
  CHECK(events[0].target == sp({0, 0}, {1}));
  CHECK(events[0].lost == sp({0, 0, 1, 0}, {1}));

  CHECK(events[1].point == rat(13, 32));
  CHECK(events[1].row == 5);
  CHECK(events[1].target == sp({0, 0, 1, 0}, {1}));
  CHECK(events[1].lost == sp({0, 0, 1, 0, 1, 0}, {1}));

  CHECK(events[2].point == rat(5, 16));
  CHECK(events[2].row == 4);
  CHECK(events[2].target == sp({0, 0, 0}, {1}));
  CHECK(events[2].lost == sp({0, 0, 0, 1, 0}, {1}));
}

TEST_CASE("schedule events stay consistent") {
  const auto events = unit_schedule(40);
  std::set<Rational> points;
  std::set<std::string> targets;
  for (const PatchEvent& e : events) {
    CHECK(points.insert(e.point).second);
    CHECK(targets.insert(e.target.str()).second);
    // The lost word is the target with the patched row turned back off.
    CHECK(flip_bit(e.target, e.row) == e.lost);
    CHECK(limit_point(e.lost) == e.point);
    CHECK(classify(e.lost) == SeqClass::RealizedEndpoint);
    const LastZero lz = last_zero(e.target);
    REQUIRE(lz.kind == LastZero::Index);
    CHECK(e.row == lz.index + 2);
  }
}

TEST_CASE("schedule coverage: fresh targets come in order, losses return") {
  const auto events = unit_schedule(84);
  // Every missing sequence with a small index is targeted.
  for (std::uint64_t i = 0; i < 10; ++i) {
    const SeqSpec m = missing_unit(i);
    bool found = false;
    for (std::size_t s = 0; s < 40 && !found; ++s) found = events[s].target == m;
    CHECK(found);
  }
  // Every sequence lost in the first 40 events is re-targeted later.
  for (std::size_t s = 0; s < 40; ++s) {
    bool found = false;
    for (std::size_t t = s + 1; t < events.size() && !found; ++t)
      found = events[t].target == events[s].lost;
    CHECK(found);
  }
}

TEST_CASE("sections before patching equal the code bits") {
  CHECK(section_unit(rat(1, 2), 5, 0) == rows_of({0, 2, 3, 4}));
  CHECK(section_unit(rat(0), 4, 0) == rows_of({1, 2, 3}));
  CHECK(section_unit(rat(1), 6, 0) == rows_of({0, 1, 2, 3, 4, 5}));
  CHECK(section_unit(rat(1, 3), 12, 0).empty());

  for (std::uint64_t i = 0; i <= 256; ++i) {
    const Rational p = rat(i, 256);
    const Label code = code_of_point(p, 11);
    const auto section = section_unit(p, 10, 0);
    std::vector<std::uint64_t> expected;
    for (unsigned n = 0; n < 10; ++n)
      if (code.bits()[n] == 1) expected.push_back(n);
    CHECK(section == expected);
  }
}

TEST_CASE("sections after patching gain exactly the event rows") {
  CHECK(section_unit(rat(3, 8), 6, 0) == rows_of({2, 4, 5}));
  CHECK(section_unit(rat(3, 8), 6, 1) == rows_of({2, 3, 4, 5}));

  const auto events = unit_schedule(30);
  for (std::size_t m = 0; m < events.size(); ++m) {
    const PatchEvent& e = events[m];
    const unsigned depth = static_cast<unsigned>(e.row) + 4;
    const auto before = section_unit(e.point, depth, std::span(events).first(m));
    const auto after = section_unit(e.point, depth, std::span(events).first(m + 1));
    for (unsigned n = 0; n < depth; ++n) {
      const bool in_before = std::count(before.begin(), before.end(), n) > 0;
      const bool in_after = std::count(after.begin(), after.end(), n) > 0;
      CHECK(in_before == (e.lost.bit(n) == 1));
      CHECK(in_after == (e.target.bit(n) == 1));
    }
  }
}

TEST_CASE("staged rows stay closed and gain finitely many points") {
  const auto events = unit_schedule(30);
  const Interval unit = Interval::closed(0, 1);
  std::map<std::uint64_t, int> per_row;
  for (const PatchEvent& e : events) ++per_row[e.row];
  for (unsigned n = 0; n <= 12; ++n) {
    const IntervalSet row = staged_row(n, events);
    CHECK(closed_within(row, unit));
    CHECK(row.parts().size() <=
          row_constructive(n).parts().size() + static_cast<std::size_t>(per_row[n]));
  }
}

TEST_CASE("depth-10 sections separate points at distance >= 1/256") {
  std::vector<std::uint32_t> masks(1025);
  for (std::uint64_t i = 0; i <= 1024; ++i) {
    std::uint32_t mask = 0;
    for (unsigned n = 0; n < 10; ++n)
      if (row_contains(rat(i, 1024), n)) mask |= 1u << n;
    masks[i] = mask;
  }
  for (std::size_t i = 0; i <= 1024; ++i)
    for (std::size_t j = i + 4; j <= 1024; ++j) CHECK(masks[i] != masks[j]);
}
