#pragma once

#include <string>

#include "foelner/crossed.hpp"
#include "foelner/trig_poly.hpp"

namespace foelner {

// Wire formats:
//   TrigPoly:      [{"freq": int, "re": float, "im": float}, ...]
//   CrossedSymbol: {"theta": float,
//                   "terms": [{"group": int, "fourier": <TrigPoly>}, ...]}
// Malformed input throws std::invalid_argument naming the offending field.

TrigPoly trig_poly_from_json(const std::string& text);
std::string trig_poly_to_json(const TrigPoly& g);

CrossedSymbol crossed_symbol_from_json(const std::string& text);
std::string crossed_symbol_to_json(const CrossedSymbol& x);

CrossedSymbol crossed_symbol_from_file(const std::string& path);

}  // namespace foelner
