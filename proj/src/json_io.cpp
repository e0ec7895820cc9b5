#include "uu/json_io.hpp"

namespace uu {

Json to_json(const Rational& r) {
  return format_rational(r);
}

Json to_json(const Interval& iv) {
  return Json{{"lo", format_rational(iv.lo)},
              {"lo_closed", iv.lo_closed},
              {"hi", format_rational(iv.hi)},
              {"hi_closed", iv.hi_closed}};
}

Json to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const Interval& iv : s.parts()) out.push_back(to_json(iv));
  return out;
}

Json to_json(const Cell& c) {
  return Json{{"label", c.label.str()}, {"position", c.position}, {"interval", to_json(c.interval)}};
}

Json to_json(const SeqSpec& s) {
  return s.str();
}

Json to_json(const PatchEvent& e) {
  return Json{{"point", format_rational(e.point)},
              {"row", e.row},
              {"target", e.target.str()},
              {"lost", e.lost.str()}};
}

Json to_json(const Block& b) {
  return Json{{"side", b.side == Side::Neg ? "NEG" : "POS"},
              {"index", b.index},
              {"base", to_json(b.base)},
              {"base_row", b.base_row},
              {"copy_row_offset", b.copy_row_offset},
              {"map", Json{{"c", format_rational(b.map_offset)}, {"s", format_rational(b.map_scale)}}}};
}

Json to_json(const RealStep& s) {
  Json rows = Json::array();
  for (auto r : s.rows) rows.push_back(r);
  return Json{{"endpoint_index", s.endpoint_index},
              {"point", format_rational(s.point)},
              {"rows", rows},
              {"target", s.target.str()},
              {"lost", s.lost.str()}};
}

std::optional<Interval> interval_from_json(const Json& j) {
  if (!j.is_object()) return std::nullopt;
  if (!j.contains("lo") || !j.contains("hi") || !j.contains("lo_closed") || !j.contains("hi_closed"))
    return std::nullopt;
  if (!j["lo"].is_string() || !j["hi"].is_string()) return std::nullopt;
  if (!j["lo_closed"].is_boolean() || !j["hi_closed"].is_boolean()) return std::nullopt;
  const auto lo = parse_rational(j["lo"].get<std::string>());
  const auto hi = parse_rational(j["hi"].get<std::string>());
  if (!lo || !hi) return std::nullopt;
  try {
    return Interval::make(*lo, j["lo_closed"].get<bool>(), *hi, j["hi_closed"].get<bool>());
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<IntervalSet> interval_set_from_json(const Json& j) {
  if (!j.is_array()) return std::nullopt;
  std::vector<Interval> parts;
  for (const Json& item : j) {
    auto iv = interval_from_json(item);
    if (!iv) return std::nullopt;
    parts.push_back(std::move(*iv));
  }
  return IntervalSet::from_parts(std::move(parts));
}

}  // namespace uu
