#include "uu/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace uu {

Interval Interval::make(Rational lo, bool lo_closed, Rational hi, bool hi_closed) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  if (lo == hi && !(lo_closed && hi_closed))
    throw std::invalid_argument("degenerate interval must be closed on both sides");
  return Interval{std::move(lo), lo_closed, std::move(hi), hi_closed};
}

Interval Interval::closed(Rational lo, Rational hi) {
  return make(std::move(lo), true, std::move(hi), true);
}

Interval Interval::open(Rational lo, Rational hi) {
  return make(std::move(lo), false, std::move(hi), false);
}

Interval Interval::point(Rational p) {
  Rational q = p;
  return make(std::move(p), true, std::move(q), true);
}

bool Interval::contains(const Rational& p) const {
  if (p < lo || p > hi) return false;
  if (p == lo && !lo_closed) return false;
  if (p == hi && !hi_closed) return false;
  return true;
}

Interval closure(const Interval& iv) {
  return Interval{iv.lo, true, iv.hi, true};
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Rational lo;
  bool lo_closed;
  if (a.lo > b.lo) {
    lo = a.lo;
    lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    lo = b.lo;
    lo_closed = b.lo_closed;
  } else {
    lo = a.lo;
    lo_closed = a.lo_closed && b.lo_closed;
  }
  Rational hi;
  bool hi_closed;
  if (a.hi < b.hi) {
    hi = a.hi;
    hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    hi = b.hi;
    hi_closed = b.hi_closed;
  } else {
    hi = a.hi;
    hi_closed = a.hi_closed && b.hi_closed;
  }
  if (lo > hi) return std::nullopt;
  if (lo == hi && !(lo_closed && hi_closed)) return std::nullopt;
  return Interval{std::move(lo), lo_closed, std::move(hi), hi_closed};
}

IntervalSet IntervalSet::from_parts(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.lo_closed != b.lo_closed) return a.lo_closed;  // closed start first
    if (a.hi != b.hi) return a.hi < b.hi;
    return b.hi_closed && !a.hi_closed;
  });
  IntervalSet out;
  for (auto& next : parts) {
    if (out.parts_.empty()) {
      out.parts_.push_back(std::move(next));
      continue;
    }
    Interval& acc = out.parts_.back();
    const bool joins =
        next.lo < acc.hi || (next.lo == acc.hi && (acc.hi_closed || next.lo_closed));
    if (!joins) {
      out.parts_.push_back(std::move(next));
      continue;
    }
    if (next.hi > acc.hi) {
      acc.hi = std::move(next.hi);
      acc.hi_closed = next.hi_closed;
    } else if (next.hi == acc.hi) {
      acc.hi_closed = acc.hi_closed || next.hi_closed;
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& p) const {
  return part_containing(p).has_value();
}

std::optional<Interval> IntervalSet::part_containing(const Rational& p) const {
  // First part that does not end strictly before p.
  auto it = std::partition_point(parts_.begin(), parts_.end(), [&](const Interval& iv) {
    return iv.hi < p || (iv.hi == p && !iv.hi_closed);
  });
  if (it == parts_.end() || !it->contains(p)) return std::nullopt;
  return *it;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntervalSet::from_parts(std::move(parts));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts;
  std::size_t i = 0, j = 0;
  while (i < a.parts().size() && j < b.parts().size()) {
    const Interval& x = a.parts()[i];
    const Interval& y = b.parts()[j];
    if (auto iv = intersect(x, y)) parts.push_back(std::move(*iv));
    // Advance whichever part ends first; on an exact tie advance both.
    if (x.hi < y.hi || (x.hi == y.hi && !x.hi_closed && y.hi_closed)) {
      ++i;
    } else if (y.hi < x.hi || (x.hi == y.hi && x.hi_closed && !y.hi_closed)) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return IntervalSet::from_parts(std::move(parts));
}

IntervalSet closure(const IntervalSet& s) {
  std::vector<Interval> parts;
  parts.reserve(s.parts().size());
  for (const Interval& iv : s.parts()) parts.push_back(closure(iv));
  return IntervalSet::from_parts(std::move(parts));
}

IntervalSet remove_point(const IntervalSet& s, const Rational& p) {
  std::vector<Interval> parts;
  parts.reserve(s.parts().size() + 1);
  for (const Interval& iv : s.parts()) {
    if (!iv.contains(p)) {
      parts.push_back(iv);
      continue;
    }
    if (iv.is_point()) continue;  // drop the isolated point
    if (p == iv.lo) {
      parts.push_back(Interval{iv.lo, false, iv.hi, iv.hi_closed});
    } else if (p == iv.hi) {
      parts.push_back(Interval{iv.lo, iv.lo_closed, iv.hi, false});
    } else {
      parts.push_back(Interval{iv.lo, iv.lo_closed, p, false});
      parts.push_back(Interval{p, false, iv.hi, iv.hi_closed});
    }
  }
  return IntervalSet::from_parts(std::move(parts));
}

IntervalSet affine_image(const IntervalSet& s, const Rational& offset, const Rational& scale) {
  if (scale == 0) throw std::invalid_argument("affine_image requires nonzero scale");
  std::vector<Interval> parts;
  parts.reserve(s.parts().size());
  for (const Interval& iv : s.parts()) {
    Rational a = offset + scale * iv.lo;
    Rational b = offset + scale * iv.hi;
    if (scale > 0) {
      parts.push_back(Interval{std::move(a), iv.lo_closed, std::move(b), iv.hi_closed});
    } else {
      parts.push_back(Interval{std::move(b), iv.hi_closed, std::move(a), iv.lo_closed});
    }
  }
  return IntervalSet::from_parts(std::move(parts));
}

bool subset_of(const IntervalSet& s, const Interval& ambient) {
  return intersect(s, IntervalSet(ambient)) == s;
}

bool closed_within(const IntervalSet& s, const Interval& ambient) {
  if (!subset_of(s, ambient))
    throw std::invalid_argument("closed_within: set not contained in ambient interval");
  return intersect(closure(s), IntervalSet(ambient)) == s;
}

std::string to_text(const Interval& iv) {
  std::string out;
  out += iv.lo_closed ? '[' : '(';
  out += format_rational(iv.lo);
  out += ", ";
  out += format_rational(iv.hi);
  out += iv.hi_closed ? ']' : ')';
  return out;
}

std::string to_text(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < s.parts().size(); ++i) {
    if (i) out += " u ";
    out += to_text(s.parts()[i]);
  }
  return out;
}

}  // namespace uu
