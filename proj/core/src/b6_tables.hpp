#pragma once

#include <array>
#include <vector>

namespace d6::detail {

// coef * b_ij
struct Cell {
  int coef, i, j;
};

struct Inequality {
  std::vector<Cell> lhs;
  bool strict;
  std::vector<Cell> rhs;
};

struct Shift {
  int i, j, delta;
};

// The blocks (E_1)..(E_14), stored at index 0..13. The (F_j) blocks are the
// same inequalities with strict and weak comparisons exchanged.
const std::array<std::vector<Inequality>, 14>& e_blocks();

// Updates of e_0 for each case; f_0 applies the negated updates.
const std::array<std::vector<Shift>, 14>& e0_shifts();

}  // namespace d6::detail
