#include "uu/verify.hpp"

#include "uu/dyadic.hpp"
#include "uu/real.hpp"
#include "uu/sequence.hpp"
#include "uu/unit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace uu {

bool VerifyReport::overall() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

class Checker {
 public:
  CheckResult* current = nullptr;

  void run(VerifyReport& report, std::string name, std::string params,
           const std::function<void()>& body) {
    report.checks.push_back(CheckResult{std::move(name), std::move(params), true, {}});
    current = &report.checks.back();
    body();
    current = nullptr;
  }

  void expect(bool ok, const std::function<std::string()>& witness) {
    if (ok || !current->pass) return;
    current->pass = false;
    current->witness = witness();
  }

  void expect(bool ok, const std::string& witness) {
    if (ok || !current->pass) return;
    current->pass = false;
    current->witness = witness;
  }
};

std::string param_str(std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) out << " ";
    out << k << "=" << v;
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// interval algebra material

struct SetGen {
  std::mt19937_64 rng{977231};

  Rational point() {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
  }

  Interval interval() {
    for (;;) {
      Rational a = point(), b = point();
      if (a == b) {
        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) return Interval::point(a);
        continue;
      }
      if (a > b) std::swap(a, b);
      std::bernoulli_distribution flag;
      return Interval{a, flag(rng), b, flag(rng)};
    }
  }

  IntervalSet set() {
    std::uniform_int_distribution<int> count(0, 4);
    std::vector<Interval> parts;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) parts.push_back(interval());
    return IntervalSet::from_parts(std::move(parts));
  }
};

std::vector<Rational> probe_points(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Rational> pts;
  for (const IntervalSet* s : {&a, &b})
    for (const Interval& iv : s->parts()) {
      pts.push_back(iv.lo);
      pts.push_back(iv.hi);
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) pts.push_back((pts[i] + pts[i + 1]) / 2);
  return pts;
}

void check_interval_algebra(Checker& ck, VerifyReport& report) {
  ck.run(report, "interval_canonical_idempotent", "sets=300", [&] {
    SetGen gen;
    for (int i = 0; i < 300; ++i) {
      const IntervalSet s = gen.set();
      ck.expect(IntervalSet::from_parts(s.parts()) == s, [&] { return to_text(s); });
      for (std::size_t j = 0; j + 1 < s.parts().size(); ++j) {
        const Interval& a = s.parts()[j];
        const Interval& b = s.parts()[j + 1];
        const bool separated =
            a.hi < b.lo || (a.hi == b.lo && !a.hi_closed && !b.lo_closed);
        ck.expect(separated, [&] { return to_text(s); });
      }
    }
  });

  ck.run(report, "interval_equality_by_membership", "pairs=300", [&] {
    SetGen gen;
    for (int i = 0; i < 300; ++i) {
      const IntervalSet a = gen.set();
      const IntervalSet b = gen.set();
      bool same = true;
      for (const Rational& p : probe_points(a, b))
        if (a.contains(p) != b.contains(p)) same = false;
      ck.expect((a == b) == same,
                [&] { return to_text(a) + " vs " + to_text(b); });
    }
  });

  ck.run(report, "interval_algebra_laws", "triples=200", [&] {
    SetGen gen;
    for (int i = 0; i < 200; ++i) {
      const IntervalSet a = gen.set(), b = gen.set(), c = gen.set();
      ck.expect(unite(a, b) == unite(b, a), [&] { return to_text(a) + " | " + to_text(b); });
      ck.expect(intersect(a, b) == intersect(b, a),
                [&] { return to_text(a) + " & " + to_text(b); });
      ck.expect(unite(unite(a, b), c) == unite(a, unite(b, c)), "associativity (union)");
      ck.expect(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)),
                "associativity (intersection)");
      ck.expect(intersect(a, unite(b, c)) == unite(intersect(a, b), intersect(a, c)),
                "distributivity");
      ck.expect(closure(closure(a)) == closure(a), [&] { return to_text(a); });
      ck.expect(closure(unite(a, b)) == unite(closure(a), closure(b)), "closure additivity");
      ck.expect(unite(closure(a), closure(unite(a, b))) == closure(unite(a, b)),
                "closure monotonicity");
    }
  });

  ck.run(report, "interval_closed_within_characterization", "sets=200", [&] {
    SetGen gen;
    const Interval amb = Interval::open(-10, 10);
    for (int i = 0; i < 200; ++i) {
      const IntervalSet s = gen.set();
      bool expected = true;
      for (const Interval& iv : s.parts()) {
        if (iv.is_point()) continue;
        for (const Rational* e : {&iv.lo, &iv.hi})
          if (*e > amb.lo && *e < amb.hi && !s.contains(*e)) expected = false;
      }
      ck.expect(closed_within(s, amb) == expected, [&] { return to_text(s); });
    }
  });
}

// ---------------------------------------------------------------------------
// dyadic scheme material

void walk_cells(unsigned max_level, const std::function<void(const Cell&)>& fn) {
  std::function<void(const Cell&)> rec = [&](const Cell& c) {
    fn(c);
    if (c.level == max_level) return;
    rec(child_cell(c, 0));
    rec(child_cell(c, 1));
  };
  rec(root_cell());
}

void check_dyadic(Checker& ck, VerifyReport& report, unsigned depth) {
  const unsigned partition_levels = std::min(depth, 14u);
  ck.run(report, "cells_partition", param_str({{"levels", partition_levels}}), [&] {
    for (unsigned level = 0; level <= partition_levels; ++level) {
      std::vector<Interval> parts;
      walk_cells(level, [&](const Cell& c) {
        if (c.level == level) parts.push_back(c.interval);
      });
      ck.expect(parts.size() == (std::size_t{1} << level),
                param_str({{"level", level}}));
      ck.expect(IntervalSet::from_parts(parts) == IntervalSet(Interval::closed(0, 1)),
                param_str({{"level", level}}));
    }
  });

  const unsigned tree_levels = std::min(depth, 10u);
  ck.run(report, "sibling_cells_disjoint", param_str({{"levels", tree_levels}}), [&] {
    walk_cells(tree_levels, [&](const Cell& c) {
      if (c.level >= tree_levels) return;
      const IntervalSet z{child_cell(c, 0).interval}, o{child_cell(c, 1).interval};
      ck.expect(intersect(z, o).empty(), [&] { return c.label.str(); });
    });
  });

  ck.run(report, "cell_nesting_exact", param_str({{"levels", tree_levels}}), [&] {
    walk_cells(tree_levels, [&](const Cell& c) {
      if (c.level >= tree_levels) return;
      const IntervalSet z{child_cell(c, 0).interval}, o{child_cell(c, 1).interval};
      ck.expect(unite(z, o) == IntervalSet(c.interval), [&] { return c.label.str(); });
      ck.expect(intersect(z, IntervalSet(c.interval)) == z, [&] { return c.label.str(); });
    });
  });

  ck.run(report, "cell_width_shrinkage", param_str({{"levels", tree_levels}}), [&] {
    walk_cells(tree_levels, [&](const Cell& c) {
      ck.expect(c.interval.width() == dyadic(1, c.level), [&] { return c.label.str(); });
    });
  });

  ck.run(report, "midpoint_in_one_child", param_str({{"levels", tree_levels}}), [&] {
    walk_cells(tree_levels, [&](const Cell& c) {
      if (c.level >= tree_levels) return;
      const Rational mid = (c.interval.lo + c.interval.hi) / 2;
      ck.expect(child_cell(c, 1).interval.contains(mid), [&] { return c.label.str(); });
      ck.expect(!child_cell(c, 0).interval.contains(mid), [&] { return c.label.str(); });
    });
  });

  ck.run(report, "closure_interval_matches", param_str({{"levels", tree_levels}}), [&] {
    walk_cells(tree_levels, [&](const Cell& c) {
      ck.expect(IntervalSet(closure_interval(c.label)) == closure(IntervalSet(c.interval)),
                [&] { return c.label.str(); });
    });
  });

  ck.run(report, "bracket_pattern", param_str({{"levels", tree_levels}}), [&] {
    // The flag at each cell's own-level (odd numerator) endpoint follows the
    // period-4 layout, and 1-labeled cells sit at positions 0,3 mod 4.
    walk_cells(tree_levels, [&](const Cell& c) {
      if (c.level < 2) return;
      const std::uint64_t j = c.position;
      const bool ends_in_one = c.label.bits().back() == 1;
      ck.expect(ends_in_one == (j % 4 == 0 || j % 4 == 3), [&] { return c.label.str(); });
      bool flag_ok = true;
      switch (j % 4) {
        case 0: flag_ok = c.interval.hi_closed; break;
        case 1: flag_ok = !c.interval.lo_closed; break;
        case 2: flag_ok = !c.interval.hi_closed; break;
        case 3: flag_ok = c.interval.lo_closed; break;
      }
      ck.expect(flag_ok, [&] { return c.label.str(); });
    });
  });
}

// ---------------------------------------------------------------------------
// sequence coding material

std::vector<std::vector<std::uint8_t>> words(unsigned len) {
  std::vector<std::vector<std::uint8_t>> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
    std::vector<std::uint8_t> w(len);
    for (unsigned i = 0; i < len; ++i) w[i] = (v >> (len - 1 - i)) & 1;
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<Rational> pinch_oracle(const SeqSpec& s, unsigned depth) {
  std::vector<Cell> chain;
  Cell c = root_cell();
  for (unsigned n = 0; n < depth; ++n) {
    c = child_cell(c, s.bit(n));
    chain.push_back(c);
  }
  const Interval& last = chain[depth - 1].interval;
  const Interval& prev = chain[depth - 2].interval;
  const Rational pinch = last.lo == prev.lo ? last.lo : last.hi;
  for (const Cell& link : chain)
    if (!link.interval.contains(pinch)) return std::nullopt;
  return pinch;
}

void check_sequences(Checker& ck, VerifyReport& report, unsigned depth) {
  const unsigned max_prefix = std::min(depth, 8u);
  ck.run(report, "emptiness_oracle", param_str({{"prefixes", max_prefix}}), [&] {
    for (unsigned len = 1; len <= max_prefix; ++len) {
      for (auto& w : words(len)) {
        const SeqSpec s(w, {1});
        const auto fast = limit_point(s);
        const auto brute = pinch_oracle(s, 40);
        ck.expect(fast == brute, [&] { return s.str(); });
        ck.expect((fast == std::nullopt) == (classify(s) == SeqClass::MissingUnit),
                  [&] { return s.str(); });
      }
    }
  });

  ck.run(report, "code_round_trip", "prefixes<=5 tails<=3", [&] {
    for (unsigned plen = 0; plen <= 5; ++plen)
      for (auto& p : words(plen))
        for (unsigned tlen = 1; tlen <= 3; ++tlen)
          for (auto& t : words(tlen)) {
            const SeqSpec s(p, t);
            const auto limit = limit_point(s);
            if (!limit) continue;
            const Label code = code_of_point(*limit, 12);
            for (unsigned n = 0; n < 12; ++n)
              ck.expect(code.bits()[n] == s.bit(n), [&] { return s.str(); });
          }
  });

  ck.run(report, "limit_injectivity", "prefixes<=5 tails<=3", [&] {
    std::map<Rational, std::string> seen;
    for (unsigned plen = 0; plen <= 5; ++plen)
      for (auto& p : words(plen))
        for (unsigned tlen = 1; tlen <= 3; ++tlen)
          for (auto& t : words(tlen)) {
            const SeqSpec s(p, t);
            const auto limit = limit_point(s);
            if (!limit) continue;
            auto [it, inserted] = seen.emplace(*limit, s.str());
            ck.expect(inserted || it->second == s.str(),
                      [&] { return format_rational(*limit); });
          }
  });

  ck.run(report, "period_fixed_point", "specs=6", [&] {
    const std::vector<SeqSpec> specs = {
        SeqSpec({}, {0}),       SeqSpec({}, {0, 1}),    SeqSpec({1, 0}, {1}),
        SeqSpec({0, 1}, {1, 1, 0}), SeqSpec({}, {1, 0, 0}), SeqSpec({0, 0, 1}, {0, 1})};
    for (const SeqSpec& s : specs) {
      const auto limit = limit_point(s);
      ck.expect(limit.has_value(), [&] { return s.str(); });
      if (!limit) continue;
      Cell c0 = root_cell();
      for (auto b : s.prefix()) c0 = child_cell(c0, b);
      Cell c1 = c0;
      std::uint64_t n = s.prefix().size();
      for (unsigned round = 0; round < 2; ++round) {
        for (std::size_t i = 0; i < s.tail().size(); ++i, ++n) c1 = child_cell(c1, s.bit(n));
        if (cell_parity(c1) == cell_parity(c0)) break;
      }
      const Rational scale = c1.interval.width() / c0.interval.width();
      ck.expect(c1.interval.lo + (*limit - c0.interval.lo) * scale == *limit,
                [&] { return s.str(); });
    }
  });
}

// ---------------------------------------------------------------------------
// unit construction material

void check_unit(Checker& ck, VerifyReport& report, unsigned depth, std::size_t stage) {
  const unsigned rows = std::min(depth, 12u);
  ck.run(report, "rows_formula_vs_constructive", param_str({{"rows", rows}}), [&] {
    for (unsigned n = 0; n <= rows; ++n)
      ck.expect(row_constructive(n) == row_formula(n), param_str({{"row", n}}));
  });

  const unsigned grid_bits = std::min(depth, 10u);
  ck.run(report, "code_section_agreement", param_str({{"grid", grid_bits}}), [&] {
    const std::uint64_t grid = std::uint64_t{1} << grid_bits;
    for (std::uint64_t i = 0; i <= grid; ++i) {
      const Rational p(i, grid);
      const Label code = code_of_point(p, grid_bits + 1);
      for (unsigned n = 0; n < grid_bits; ++n)
        ck.expect(row_contains(p, n) == (code.bits()[n] == 1),
                  [&] { return format_rational(p); });
    }
  });

  ck.run(report, "section_uniqueness", param_str({{"grid", grid_bits}}), [&] {
    const std::uint64_t grid = std::uint64_t{1} << grid_bits;
    // Depth-d sections separate points at distance >= 2^-(d-2): four grid
    // units. Exactly one cell-width apart can still share the cell at level
    // d-2 (its two endpoints) and only splits two levels further down.
    const std::uint64_t gap = 4;
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(grid) + 1);
    for (std::uint64_t i = 0; i <= grid; ++i) {
      std::uint32_t mask = 0;
      for (unsigned n = 0; n < grid_bits; ++n)
        if (row_contains(Rational(i, grid), n)) mask |= 1u << n;
      masks[static_cast<std::size_t>(i)] = mask;
    }
    for (std::uint64_t i = 0; i <= grid; ++i)
      for (std::uint64_t j = i + gap; j <= grid; ++j)
        ck.expect(masks[static_cast<std::size_t>(i)] != masks[static_cast<std::size_t>(j)],
                  [&] {
                    return format_rational(Rational(i, grid)) + " vs " +
                           format_rational(Rational(j, grid));
                  });
  });

  ck.run(report, "unit_patch_soundness", param_str({{"events", stage}}), [&] {
    const auto events = unit_schedule(stage);
    std::set<Rational> points;
    for (std::size_t m = 0; m < events.size(); ++m) {
      const PatchEvent& e = events[m];
      ck.expect(points.insert(e.point).second, [&] { return format_rational(e.point); });
      ck.expect(flip_bit(e.target, e.row) == e.lost, [&] { return e.target.str(); });
      ck.expect(limit_point(e.lost) == e.point, [&] { return e.lost.str(); });
      const unsigned span = static_cast<unsigned>(e.row) + 4;
      const auto before = section_unit(e.point, span, std::span(events).first(m));
      const auto after = section_unit(e.point, span, std::span(events).first(m + 1));
      for (unsigned n = 0; n < span; ++n) {
        const bool was = std::count(before.begin(), before.end(), n) > 0;
        const bool now = std::count(after.begin(), after.end(), n) > 0;
        ck.expect(was == (e.lost.bit(n) == 1), [&] { return e.lost.str(); });
        ck.expect(now == (e.target.bit(n) == 1), [&] { return e.target.str(); });
      }
    }
  });

  ck.run(report, "unit_staged_rows_closed",
         param_str({{"rows", rows}, {"events", stage}}), [&] {
           const auto events = unit_schedule(stage);
           const Interval unit = Interval::closed(0, 1);
           for (unsigned n = 0; n <= rows; ++n)
             ck.expect(closed_within(staged_row(n, events), unit), param_str({{"row", n}}));
         });

  ck.run(report, "unit_schedule_coverage", param_str({{"events", stage}}), [&] {
    const std::size_t horizon = 2 * stage + 4;
    const auto events = unit_schedule(horizon);
    for (std::uint64_t i = 0; i < (stage + 1) / 2; ++i) {
      const SeqSpec m = missing_unit(i);
      bool found = false;
      for (std::size_t s = 0; s < stage && !found; ++s) found = events[s].target == m;
      ck.expect(found, [&] { return m.str(); });
    }
    for (std::size_t s = 0; s < stage; ++s) {
      bool found = false;
      for (std::size_t t = s + 1; t < events.size() && !found; ++t)
        found = events[t].target == events[s].lost;
      ck.expect(found, [&] { return events[s].lost.str(); });
    }
  });
}

// ---------------------------------------------------------------------------
// real construction material

void check_real(Checker& ck, VerifyReport& report, unsigned depth, std::size_t stage,
                std::size_t copy_stage) {
  ck.run(report, "block_tiling", param_str({{"blocks", depth}}), [&] {
    std::vector<Interval> neg, pos;
    for (std::uint64_t n = 0; n <= depth; ++n) {
      neg.push_back(block(Side::Neg, n).base);
      pos.push_back(block(Side::Pos, n).base);
    }
    ck.expect(IntervalSet::from_parts(neg) ==
                  IntervalSet(Interval{Rational(-1), false, Rational(-1, depth + 2), true}),
              "negative side");
    ck.expect(IntervalSet::from_parts(pos) ==
                  IntervalSet(Interval{Rational(1, depth + 2), true, Rational(1), false}),
              "positive side");
    for (const auto& iv : neg) ck.expect(!iv.contains(0), "0 covered");
    for (const auto& iv : pos) ck.expect(!iv.contains(0), "0 covered");
  });

  const std::uint64_t content_blocks = std::min<std::uint64_t>(6, depth / 2);
  ck.run(report, "copy_row_content", param_str({{"blocks", content_blocks}}), [&] {
    const std::vector<PatchEvent> none;
    for (std::uint64_t n = 0; n <= content_blocks; ++n) {
      const Block b = block(Side::Neg, n);
      const Rational lo = -Rational(2 * n + 3, 2 * (n + 1) * (n + 2));
      ck.expect(block_row_piece(b, 2 * n + 1, none) ==
                    IntervalSet(Interval::closed(lo, endpoint(2 * n))),
                param_str({{"block", n}}));
    }
  });

  const std::uint64_t max_row = std::min<unsigned>(depth, 10u);
  ck.run(report, "rows_closed_within_ambient",
         param_str({{"rows", max_row}, {"copy_stage", copy_stage}}), [&] {
           const Interval amb = Interval::open(-1, 1);
           for (const std::size_t cs : std::set<std::size_t>{0, 5, copy_stage}) {
             for (std::uint64_t r = 0; r <= max_row; ++r)
               ck.expect(closed_within(a_row(r, depth, cs), amb), param_str({{"row", r}}));
           }
         });

  ck.run(report, "patched_rows_closed", param_str({{"steps", stage}}), [&] {
    const Interval amb = Interval::open(-1, 1);
    const auto steps = real_schedule_steps(stage);
    for (std::uint64_t r = 0; r <= max_row; ++r) {
      std::vector<Interval> extra;
      for (const RealStep& s : steps)
        for (std::uint64_t row : s.rows)
          if (row == r) extra.push_back(Interval::point(s.point));
      const IntervalSet patched = unite(a_row(r, depth, 0), IntervalSet::from_parts(extra));
      ck.expect(closed_within(patched, amb), param_str({{"row", r}}));
    }
  });

  const std::uint64_t glue_blocks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(6, depth / 2));
  ck.run(report, "gluing", param_str({{"blocks", glue_blocks}, {"kmax", std::min(depth, 8u)}}),
         [&] {
           for (std::uint64_t n = 1; n <= glue_blocks; ++n)
             ck.expect(gluing_check(n, std::min(depth, 8u)), param_str({{"block", n}}));
         });

  ck.run(report, "endpoint_sections", param_str({{"indices", std::min(depth, 8u)}}), [&] {
    for (std::uint64_t k = 0; k <= std::min(depth, 8u); ++k) {
      const auto section = section_real(endpoint(k), depth + 4, 0, 0);
      std::vector<std::uint64_t> expected;
      for (std::uint64_t r = k; r < depth + 4; ++r) expected.push_back(r);
      ck.expect(section == expected, [&] { return format_rational(endpoint(k)); });
    }
  });

  ck.run(report, "missing_family_avoided", "blocks<=4 grid=128", [&] {
    std::set<Rational> candidates;
    for (std::uint64_t k = 0; k <= 10; ++k) candidates.insert(endpoint(k));
    for (std::uint64_t n = 0; n <= 4; ++n)
      for (const Side side : {Side::Neg, Side::Pos}) {
        const Block b = block(side, n);
        for (std::uint64_t i = 0; i <= 128; ++i) {
          const Rational image = b.apply(Rational(i, 128));
          if (image > -1 && image < 1 && image != 0) candidates.insert(image);
        }
      }
    for (const Rational& p : candidates) {
      const auto b = block_of_point(p);
      if (!b) continue;
      const Rational t = b->invert(p);
      const Label code = code_of_point(t, 14);
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(b->base_row), 0);
      bits.push_back(1);
      bits.insert(bits.end(), code.bits().begin(), code.bits().end());
      const SeqSpec section(std::move(bits), {1});
      const SeqSpec unit_word(code.bits(), {1});
      ck.expect(limit_point(unit_word) == t, [&] { return format_rational(p); });
      for (std::uint64_t m = 0; m <= 6; ++m)
        ck.expect(!same_word(section, missing_real(m)), [&] { return format_rational(p); });
    }
  });

  ck.run(report, "real_patch_soundness", param_str({{"steps", stage}}), [&] {
    const auto steps = real_schedule_steps(stage);
    std::set<std::uint64_t> used;
    std::set<std::string> targets;
    for (std::size_t m = 0; m < steps.size(); ++m) {
      const RealStep& s = steps[m];
      ck.expect(s.endpoint_index >= 2, param_str({{"step", m}}));
      ck.expect(used.insert(s.endpoint_index).second, param_str({{"step", m}}));
      ck.expect(targets.insert(s.target.str()).second, [&] { return s.target.str(); });
      const unsigned span = static_cast<unsigned>(s.endpoint_index) + 4;
      const auto before = section_real(s.point, span, m, 0);
      const auto after = section_real(s.point, span, m + 1, 0);
      for (unsigned r = 0; r < span; ++r) {
        const bool was = std::count(before.begin(), before.end(), r) > 0;
        const bool now = std::count(after.begin(), after.end(), r) > 0;
        ck.expect(was == (s.lost.bit(r) == 1), [&] { return s.lost.str(); });
        ck.expect(now == (s.target.bit(r) == 1), [&] { return s.target.str(); });
      }
    }
  });

  ck.run(report, "real_schedule_coverage", param_str({{"steps", stage}}), [&] {
    const auto steps = real_schedule_steps(2 * stage + 4);
    for (std::size_t s = 0; s < stage; ++s) {
      bool found = false;
      for (std::size_t t = s + 1; t < steps.size() && !found; ++t)
        found = steps[t].target == steps[s].lost;
      ck.expect(found, [&] { return steps[s].lost.str(); });
    }
  });

  ck.run(report, "v0_v1_v2_fixture", param_str({{"steps", std::min<std::size_t>(stage, 3)}}),
         [&] {
           const auto steps = real_schedule_steps(std::min<std::size_t>(stage, 3));
           const std::vector<std::pair<Rational, std::vector<std::uint64_t>>> expected = {
               {Rational(-1, 3), {0}}, {Rational(-1, 4), {2, 3}}, {Rational(1, 3), {1}}};
           for (std::size_t i = 0; i < steps.size() && i < expected.size(); ++i) {
             ck.expect(steps[i].point == expected[i].first,
                       [&] { return format_rational(steps[i].point); });
             ck.expect(steps[i].rows == expected[i].second,
                       [&] { return format_rational(steps[i].point); });
           }
         });

  ck.run(report, "transport_bijection", "grid=1000", [&] {
    Rational prev;
    bool first = true;
    for (long long i = -499; i <= 499; ++i) {
      const Rational p(i, 500);
      const Rational y = transport(p);
      ck.expect(transport_inverse(y) == p, [&] { return format_rational(p); });
      if (!first) ck.expect(y > prev, [&] { return format_rational(p); });
      prev = y;
      first = false;
    }
  });
}

}  // namespace

VerifyReport verify_unit(unsigned depth, std::size_t stage) {
  VerifyReport report;
  Checker ck;
  check_interval_algebra(ck, report);
  check_dyadic(ck, report, depth);
  check_sequences(ck, report, depth);
  check_unit(ck, report, depth, stage);
  return report;
}

VerifyReport verify_real(unsigned depth, std::size_t stage, std::size_t copy_stage) {
  VerifyReport report;
  Checker ck;
  check_real(ck, report, depth, stage, copy_stage);
  return report;
}

std::string report_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.params.empty()) out << " (" << c.params << ")";
    if (!c.pass) out << "  witness: " << c.witness;
    out << "\n";
  }
  out << (report.overall() ? "OVERALL PASS" : "OVERALL FAIL") << " (" << report.checks.size()
      << " checks)\n";
  return out.str();
}

Json report_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json item{{"name", c.name}, {"params", c.params}, {"pass", c.pass}};
    if (!c.pass) item["witness"] = c.witness;
    checks.push_back(std::move(item));
  }
  return Json{{"checks", checks}, {"overall", report.overall()}};
}

}  // namespace uu
