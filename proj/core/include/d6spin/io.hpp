// JSON forms of elements, points of Z^15 and derived data.
#pragma once

#include <string>
#include <vector>

#include "d6spin/coherent.hpp"
#include "d6spin/element.hpp"
#include "d6spin/ud.hpp"

namespace d6 {

struct LoadedElement {
  Element b;
  Level level = Level::infinity();
};

// Compact "[[...6 ints],...]" with row i holding b_{i,i..i+5}.
std::string rows_to_json(const Element& b);

// {"level": <int or "inf">, "b": [[6 ints] x 6]}
std::string element_to_json(const Element& b, const Level& level);
std::string elements_to_json(const std::vector<Element>& bs, const Level& level);

// Throws std::invalid_argument on malformed input. A missing "level" reads
// as the infinite level.
LoadedElement element_from_json(const std::string& text);

// {"vars": [15 names], "x": [15 ints]}
std::string point_to_json(const UDPoint& x);

// Accepts either a bare array of 15 integers or the object form above.
UDPoint point_from_json(const std::string& text);

// {"eps": [7], "phi": [7], "wt": [7]}
std::string stats_to_json(const Element& b, const Level& level);

// {"l": int, "a": [7], "b0": element, "b": element}
std::string decomposition_to_json(const Decomposition& d);

// [{"a": [7], "element": element}, ...]
std::string minimal_set_to_json(Int l);

}  // namespace d6
