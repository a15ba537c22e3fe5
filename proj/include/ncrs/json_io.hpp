#pragma once

// JSON form of presentations:
//   {"field":{"kind":"Q"}, "alphabet":["X","Y"], "dim":2,
//    "initial":["1","0"], "final":["1","0"],
//    "matrix":{"X":[["0","1"],["0","0"]], "Y":[["0","0"],["1","0"]]}}
// Scalars are strings; field is {"kind":"Fp","p":p} over 𝔽_p.

#include <string>
#include <string_view>

#include "ncrs/series.hpp"

namespace ncrs {

std::string to_json(const LinearPresentation& A);
/// Throws std::invalid_argument on malformed input.
LinearPresentation presentation_from_json(std::string_view text);

/// {"field", "alphabet", "interior", "epsilon", "leaves", "mu"}; words as
/// letter strings, "" for the empty word.
std::string to_json(const NormalPresentation& N);

}  // namespace ncrs
