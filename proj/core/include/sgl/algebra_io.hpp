#pragma once

// JSON file format for algebras:
//   {"field": "Q" | {"GF": p},
//    "basis": [{"name", "label", "parity": 0|1}],
//    "products": [{"left", "right", "result": [{"basis", "coeff": "p/q"}]}],
//    "distinguished": label | null}
// Omitted products are zero.

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sgl/algebra.hpp"

namespace sgl {

using ojson = nlohmann::ordered_json;

/// Throws ParseError with a JSON-path location on any malformed input.
Algebra algebra_from_json(const ojson& doc);
Algebra parse_algebra(std::string_view text);
Algebra load_algebra(const std::string& path);

/// Canonical form: products ordered by (left, right) basis index, result
/// terms by basis index, coefficients as strings.
ojson algebra_to_json(const Algebra& alg);
std::string emit_algebra(const Algebra& alg);

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace sgl
