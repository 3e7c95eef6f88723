// The ultra-discretized geometric crystal on Z^15 and its isomorphism with
// B^{6,inf}.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "d6spin/element.hpp"
#include "d6spin/lattice.hpp"
#include "d6spin/tropical.hpp"

namespace d6 {

inline constexpr int kUdDim = 15;

using UDPoint = std::array<Int, kUdDim>;

// Coordinate positions; X63 is x_6^(3), and so on.
enum UdVar : int { X63, X44, X33, X22, X52, X43, X32, X62, X42, X51, X11, X21, X31, X41, X61 };

// {"x6_3", "x4_4", ..., "x6_1"} in coordinate order.
const std::vector<std::string>& ud_variable_names();

Int ud_weight(const UDPoint& x, int k);
Int ud_epsilon(const UDPoint& x, int k);
Int ud_phi(const UDPoint& x, int k);

// The action e_k^c, evaluated by inlined arithmetic.
UDPoint apply_ec(const UDPoint& x, int k, Int c);

// The same action evaluated through the compiled formula trees.
UDPoint apply_ec_compiled(const UDPoint& x, int k, Int c);

inline UDPoint ud_apply_e(const UDPoint& x, int k) { return apply_ec(x, k, 1); }
inline UDPoint ud_apply_f(const UDPoint& x, int k) { return apply_ec(x, k, -1); }

// f_k for k = 1..6 by the explicit branch conditions.
UDPoint f_branch(const UDPoint& x, int k);

// Indices 1..14 of the (F-breve) blocks holding at x.
std::vector<int> f0_holding(const UDPoint& x);
// Throws ConditionFault unless exactly one block holds.
int f0_select(const UDPoint& x);
UDPoint f0_table(const UDPoint& x);

UDPoint omega(const Element& b);
Element omega_inv(const UDPoint& x);

// Slot names of the formula trees: the 15 coordinates followed by "c".
const std::vector<std::string>& ec_formula_slots();

// The expression giving coordinate `coord` of e_k^c(x), parsed from text.
const trop::TropExpr& ec_formula(int k, int coord);
const trop::Compiled& ec_formula_compiled(int k, int coord);

}  // namespace d6
