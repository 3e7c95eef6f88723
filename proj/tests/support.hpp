#pragma once

#include <initializer_list>
#include <tuple>

#include "d6spin/element.hpp"

namespace d6::test {

// Element with the listed (i, j, value) entries and zeros elsewhere.
inline Element entries(std::initializer_list<std::tuple<int, int, Int>> cells) {
  Element b;
  for (const auto& [i, j, v] : cells) b(i, j) += v;
  return b;
}

inline Element ones(std::initializer_list<std::pair<int, int>> cells) {
  Element b;
  for (const auto& [i, j] : cells) b(i, j) += 1;
  return b;
}

}  // namespace d6::test
