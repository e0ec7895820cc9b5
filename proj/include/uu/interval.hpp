#pragma once

#include "uu/rational.hpp"

#include <optional>
#include <vector>

namespace uu {

// One interval with independently open or closed endpoints. Degenerate
// point intervals are allowed and are closed on both sides.
struct Interval {
  Rational lo;
  bool lo_closed = true;
  Rational hi;
  bool hi_closed = true;

  // Validating factory: requires lo < hi, or lo == hi with both ends closed.
  // Throws std::invalid_argument otherwise.
  static Interval make(Rational lo, bool lo_closed, Rational hi, bool hi_closed);
  static Interval closed(Rational lo, Rational hi);
  static Interval open(Rational lo, Rational hi);
  static Interval point(Rational p);

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& p) const;

  bool operator==(const Interval&) const = default;
};

Interval closure(const Interval& iv);
std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Canonical finite union of pairwise disjoint, maximal intervals sorted by
// lo. Two IntervalSets describe the same point set iff they compare equal.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval iv) : parts_{std::move(iv)} {}

  // Normalizes an arbitrary collection: sorts, merges overlaps and parts
  // touching at an endpoint that at least one side includes.
  static IntervalSet from_parts(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Rational& p) const;
  std::optional<Interval> part_containing(const Rational& p) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet closure(const IntervalSet& s);

// Point-set s minus {p}; splits or trims the affected part if any.
IntervalSet remove_point(const IntervalSet& s, const Rational& p);

// x |-> offset + scale * x applied to every part; scale must be nonzero.
IntervalSet affine_image(const IntervalSet& s, const Rational& offset, const Rational& scale);

bool subset_of(const IntervalSet& s, const Interval& ambient);

// Relative closedness: closure(s) ∩ ambient == s. Throws if s ⊄ ambient.
bool closed_within(const IntervalSet& s, const Interval& ambient);

std::string to_text(const Interval& iv);
std::string to_text(const IntervalSet& s);

}  // namespace uu
