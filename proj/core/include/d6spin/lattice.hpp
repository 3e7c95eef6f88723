// Cartan data of the affine type D_6^(1) and arithmetic on the classical
// weight lattice P_cl, written in the basis of fundamental weights.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace d6 {

using Int = std::int64_t;

inline constexpr int kNodes = 7;

using Weight = std::array<Int, kNodes>;

struct CartanData {
  std::array<std::array<int, kNodes>, kNodes> a;
  std::array<int, kNodes> cvee;
  std::array<int, kNodes> dcoef;
};

const CartanData& cartan();

// Throws std::out_of_range unless 0 <= j, k <= 6.
int cartan_entry(int j, int k);

// Pairing with the canonical central element.
Int level_of(const Weight& w);

Weight fundamental_weight(int k);

Weight operator+(const Weight& u, const Weight& v);
Weight operator-(const Weight& u, const Weight& v);
Weight operator-(const Weight& u);

void check_node(int k);

// Raised when none, or more than one, of a family of mutually exclusive
// case conditions holds for an input.
class ConditionFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace d6
