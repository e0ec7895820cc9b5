#pragma once

#include "uu/json_io.hpp"
#include "uu/verify.hpp"

#include <string>

namespace uu {

enum class Space { Unit, Real };

// Staged row as JSON. Unit rows take the patch points of the first `stage`
// events; real rows take the embedded copies at `copy_stage` plus the
// endpoint patches of the first `stage` steps.
Json query_row(Space space, std::uint64_t n, unsigned depth, std::size_t stage,
               std::size_t copy_stage);

// Sorted section rows of a point. Throws std::invalid_argument when the
// point lies outside the space.
Json query_decode(Space space, const Rational& point, unsigned depth, std::size_t stage,
                  std::size_t copy_stage);

// Limit point of an eventually periodic word: "p/q" or "empty".
Json query_encode(const SeqSpec& spec);

// Patch schedule as a PatchEvent array (real steps flattened).
Json query_schedule(Space space, std::size_t steps);

}  // namespace uu
