#include "uu/harness.hpp"

#include "uu/real.hpp"
#include "uu/unit.hpp"

namespace uu {

Json query_row(Space space, std::uint64_t n, unsigned depth, std::size_t stage,
               std::size_t copy_stage) {
  if (space == Space::Unit) {
    const auto events = unit_schedule(stage);
    return to_json(staged_row(static_cast<unsigned>(n), events));
  }
  IntervalSet row = a_row(n, depth, copy_stage);
  std::vector<Interval> extra;
  for (const RealStep& s : real_schedule_steps(stage))
    for (std::uint64_t r : s.rows)
      if (r == n) extra.push_back(Interval::point(s.point));
  if (!extra.empty()) row = unite(row, IntervalSet::from_parts(std::move(extra)));
  return to_json(row);
}

Json query_decode(Space space, const Rational& point, unsigned depth, std::size_t stage,
                  std::size_t copy_stage) {
  const auto rows = space == Space::Unit ? section_unit(point, depth, stage)
                                         : section_real(point, depth, stage, copy_stage);
  Json out = Json::array();
  for (auto r : rows) out.push_back(r);
  return out;
}

Json query_encode(const SeqSpec& spec) {
  const auto limit = limit_point(spec);
  return limit ? Json(format_rational(*limit)) : Json("empty");
}

Json query_schedule(Space space, std::size_t steps) {
  Json out = Json::array();
  if (space == Space::Unit) {
    for (const PatchEvent& e : unit_schedule(steps)) out.push_back(to_json(e));
  } else {
    for (const PatchEvent& e : real_schedule(steps)) out.push_back(to_json(e));
  }
  return out;
}

}  // namespace uu
