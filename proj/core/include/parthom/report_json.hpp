#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "parthom/synthesis.hpp"

namespace parthom {

// Integers that fit in 64 bits are emitted as JSON numbers, anything larger
// as a decimal string.
nlohmann::json json_integer(const Integer& v);

// Versioned report schema:
// { "schema": 1, "n": int, "filter": spec-string, "betti": {"<i>": int},
//   "decomposition": [{"degree": int, "composition": [ints],
//                      "multiplicity": int, "specht_dim": int}],
//   "euler": int, "verified": {"oracle": bool|null, "lefschetz": bool|null} }
// Interval summands carry an extra "upper" array; with_shapes adds an ASCII
// "shape" string per entry.
nlohmann::json report_to_json(const DecompositionReport& report,
                              const std::string& filter_spec,
                              std::optional<bool> oracle_ok,
                              std::optional<bool> lefschetz_ok,
                              bool with_shapes = false);

}  // namespace parthom
