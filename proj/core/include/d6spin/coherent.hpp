// Minimal elements of B^{6,l}, the shifted crystals T_lambda (x) B^{6,l} (x)
// T_mu, and the embeddings of B^{6,l} into B^{6,inf} that form a coherent
// family.
#pragma once

#include <vector>

#include "d6spin/element.hpp"
#include "d6spin/lattice.hpp"

namespace d6 {

struct MinimalCoeffs {
  std::array<Int, kNodes> a{};

  // a_0 + a_1 + 2a_2 + 2a_3 + 2a_4 + a_5 + a_6
  Int level() const;
};

Element minimal_from_coeffs(const MinimalCoeffs& a);

// All nonnegative coefficient vectors of the given level, in lexicographic order.
std::vector<MinimalCoeffs> coefficient_solutions(Int l);

// Sorted and deduplicated.
std::vector<Element> minimal_set(Int l);

bool is_minimal(const Element& b, Int l);

struct ShiftedElement {
  Weight lambda{};
  Element b;
  Weight mu{};
  Int level = 0;
};

struct ShiftStats {
  Int epsilon;
  Int phi;
  Int wt;
};

ShiftStats shift_stats(const ShiftedElement& s, int k);

// Entrywise b - b0. Throws std::invalid_argument if b0 is not a minimal
// element of level l or b is not in B^{6,l}.
Element embed(Int l, const Element& b0, const Element& b);

struct Decomposition {
  Int l;
  MinimalCoeffs a;
  Element b0;
  Element b;
};

// Inverse of the embeddings: recovers (l, b0, b) with embed(l, b0, b) = bp.
// Throws std::invalid_argument for the zero element or an invalid bp.
Decomposition decompose(const Element& bp);

}  // namespace d6
