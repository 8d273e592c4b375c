#pragma once

#include <string>

#include "houghton/element.hpp"
#include "json.hpp"

namespace houghton {

// {"n": int, "v": [int], "exc": [[[ray,coord],[ray,coord]], ...]}
// exc sorted lexicographically; field order is fixed so output is bit-exact.
nlohmann::ordered_json element_to_json(const Element& g);
Element element_from_json(const nlohmann::json& j);
Element element_from_json_text(const std::string& text);

}  // namespace houghton
