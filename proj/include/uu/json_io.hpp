#pragma once

#include "uu/dyadic.hpp"
#include "uu/interval.hpp"
#include "uu/real.hpp"
#include "uu/sequence.hpp"
#include "uu/unit.hpp"

#include <json.hpp>

namespace uu {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  // "p/q"
Json to_json(const Interval& iv);
Json to_json(const IntervalSet& s);
Json to_json(const Cell& c);
Json to_json(const SeqSpec& s);  // "prefix;tail"
Json to_json(const PatchEvent& e);
Json to_json(const Block& b);
Json to_json(const RealStep& s);

std::optional<Interval> interval_from_json(const Json& j);
std::optional<IntervalSet> interval_set_from_json(const Json& j);

}  // namespace uu
