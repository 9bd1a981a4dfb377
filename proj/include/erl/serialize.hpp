#pragma once

#include <string>

#include "erl/realize.hpp"

namespace erl {

// JSON triple format:
//   {horizon, target, X: {cycles: [{id, length, points}], infinity},
//    Y: {...}, phi: [[source_point, target_point], ...]}
// Flat point map so external tools can re-verify the commuting diagram
// without knowing the anchor convention. Target entries are decimal
// strings so arbitrary-precision values survive the round trip.
// Output bytes are deterministic for identical inputs.
std::string serialize_triple(const RealizationTriple& triple);

RealizationTriple parse_triple(const std::string& text);

}  // namespace erl
