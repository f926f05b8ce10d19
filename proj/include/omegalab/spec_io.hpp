#pragma once

#include <string_view>

#include "json.hpp"
#include "omegalab/ring.hpp"

namespace omegalab {

// Ring specs as JSON objects:
//   {"kind": "zn", "n": 12}
//   {"kind": "product", "factors": [<spec>, <spec>, ...]}
//   {"kind": "poly_quotient", "p": 2, "f": [1, 1, 1]}   (constant term first)
//   {"kind": "table", "add": [[...], ...], "mul": [[...], ...]}
// Malformed input raises Error{InvalidSpec}.
RingSpec ring_spec_from_json(const nlohmann::json& j);
RingSpec parse_ring_spec(std::string_view text);
nlohmann::ordered_json to_json(const RingSpec& spec);

}  // namespace omegalab
