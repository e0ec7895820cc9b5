#pragma once

#include <cstddef>
#include <string>

namespace uu {

// Static SVG diagrams: one horizontal strip per row, filled bars for the
// interval parts, open endpoints drawn as unfilled notches, patch points as
// dots. Output is deterministic for fixed arguments.
std::string render_unit_svg(unsigned depth, std::size_t stage);
std::string render_real_svg(unsigned depth, std::size_t stage, std::size_t copy_stage);

}  // namespace uu
