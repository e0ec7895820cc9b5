#pragma once

#include "uu/json_io.hpp"

#include <string>
#include <vector>

namespace uu {

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = true;
  std::string witness;  // exact rational text, set when pass == false
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool overall() const;
};

// Runs every invariant of the interval algebra, the subdivision scheme, the
// sequence coding, and the unit-space construction, scaled by depth/stage.
VerifyReport verify_unit(unsigned depth, std::size_t stage);

// Runs every invariant of the glued (-1,1) construction.
VerifyReport verify_real(unsigned depth, std::size_t stage, std::size_t copy_stage);

std::string report_text(const VerifyReport& report);
Json report_json(const VerifyReport& report);

}  // namespace uu
