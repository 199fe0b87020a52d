#pragma once

#include <string>

#include "json.hpp"

namespace tcalc {

// 15 significant digits; a 15-digit decimal survives the double round trip,
// so emitted JSON re-parses and re-emits byte-identically.
std::string format_double15(double x);

// Deterministic compact serialisation: insertion-ordered keys, exact
// rationals already carried as "p/q" strings, doubles via format_double15.
std::string canonical_json(const nlohmann::ordered_json& j);

}  // namespace tcalc
