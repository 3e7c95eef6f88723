// Kashiwara operators and statistics on B^{6,l} and B^{6,inf}.
#pragma once

#include <optional>

#include "d6spin/element.hpp"
#include "d6spin/lattice.hpp"

namespace d6 {

Int weight_component(const Element& b, int k);
Weight weight(const Element& b);

Int epsilon(const Element& b, const Level& spec, int k);
// Throws std::logic_error if phi_k - epsilon_k differs from wt_k.
Int phi(const Element& b, const Level& spec, int k);
Weight epsilon_vector(const Element& b, const Level& spec);
Weight phi_vector(const Element& b, const Level& spec);

enum class Family { E, F };

// Index 1..14 of the unique condition block (E_j) or (F_j) holding at b.
// Throws ConditionFault when no block or several blocks hold.
int select_condition(const Element& b, Family family);

// Every block index whose inequalities all hold at b.
std::vector<int> holding_conditions(const Element& b, Family family);

// std::nullopt is the crystal zero: the result left B^{6,l}.
std::optional<Element> apply_e(const Element& b, const Level& spec, int k);
std::optional<Element> apply_f(const Element& b, const Level& spec, int k);

enum class Op { E, F };
std::optional<Element> apply(const Element& b, const Level& spec, Op op, int k);

}  // namespace d6
