#include "d6spin/crystal.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "b6_tables.hpp"

namespace d6 {

namespace {

Int max_of(std::initializer_list<Int> xs) { return std::max(xs); }

// The maxima added to the level in epsilon_0, epsilon_6, phi_0 and phi_6.
Int quantity_a1(const Element& b) {
  return max_of({-b(5, 6) - b(5, 7) - b(5, 8) - b(5, 9) - b(5, 10),
                 -b(1, 3) - b(2, 3) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 3) - b(3, 4) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 3) - b(4, 5) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(2, 4) - b(3, 4) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(2, 4) - b(4, 5) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(3, 5) - b(4, 5) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 3) - b(1, 4) - b(1, 5) - b(2, 3) - b(2, 4) - b(2, 5) - b(2, 6) - b(2, 7),
                 -b(1, 3) - b(1, 4) - b(2, 3) - b(2, 4) - b(3, 6) - b(3, 7) - b(3, 8),
                 -b(1, 3) - b(1, 4) - b(2, 3) - b(3, 5) - b(3, 6) - b(3, 7) - b(3, 8),
                 -b(1, 3) - b(2, 3) - b(2, 5) - b(3, 5) - b(3, 6) - b(3, 7) - b(3, 8),
                 -b(1, 3) - b(1, 4) - b(3, 4) - b(3, 5) - b(3, 6) - b(3, 7) - b(3, 8),
                 -b(1, 3) - b(2, 5) - b(3, 4) - b(3, 5) - b(3, 6) - b(3, 7) - b(3, 8),
                 -b(2, 4) - b(2, 5) - b(3, 4) - b(3, 5) - b(3, 6) - b(3, 7) - b(3, 8)});
}

Int quantity_a2(const Element& b) {
  return max_of({-b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4) - b(1, 5),
                 -b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4) - 2 * b(1, 5) + b(2, 2) + b(2, 3) +
                     b(2, 4) - b(3, 3) - b(3, 4) - b(3, 5),
                 -b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4) - 2 * b(1, 5) + b(2, 2) + b(2, 3) +
                     b(2, 4) - b(3, 3) - b(3, 4) - 2 * b(3, 5) + b(4, 4) - b(5, 5)});
}

Int quantity_a3(const Element& b) {
  return max_of({-b(1, 1) - b(1, 2) + b(2, 3) + b(2, 4) + b(2, 5) + b(2, 6) + b(2, 7) - b(5, 6) -
                     b(5, 7) - b(5, 8) - b(5, 9) - b(5, 10),
                 -b(1, 1) - b(1, 2) - b(1, 3) + b(2, 4) + b(2, 5) + b(2, 6) + b(2, 7) - b(4, 6) -
                     b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 1) - b(1, 2) - b(1, 3) + b(2, 3) + b(2, 4) + b(2, 5) + b(2, 6) + b(2, 7) -
                     b(3, 4) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 1) - b(1, 2) - b(1, 3) + b(2, 3) + b(2, 4) + b(2, 5) + b(2, 6) + b(2, 7) -
                     b(4, 5) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 1) - b(1, 2) + b(2, 3) + b(2, 5) + b(2, 6) + b(2, 7) - b(3, 4) - b(4, 6) -
                     b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 1) - b(1, 2) + b(2, 3) + b(2, 5) + b(2, 6) + b(2, 7) - b(4, 5) - b(4, 6) -
                     b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 1) - b(1, 2) + b(2, 3) + b(2, 4) + b(2, 5) + b(2, 6) + b(2, 7) - b(3, 5) -
                     b(4, 5) - b(4, 6) - b(4, 7) - b(4, 8) - b(4, 9),
                 -b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4) - b(1, 5),
                 -b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4) + b(2, 5) + b(2, 6) + b(2, 7) - b(3, 6) -
                     b(3, 7) - b(3, 8),
                 -b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4) + b(2, 4) + b(2, 5) + b(2, 6) + b(2, 7) -
                     b(3, 5) - b(3, 6) - b(3, 7) - b(3, 8),
                 -b(1, 1) - b(1, 2) - b(1, 3) + b(2, 4) + b(2, 6) + b(2, 7) - b(3, 5) - b(3, 6) -
                     b(3, 7) - b(3, 8),
                 -b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4) + b(2, 3) + b(2, 4) + b(2, 5) + b(2, 6) +
                     b(2, 7) - b(3, 4) - b(3, 5) - b(3, 6) - b(3, 7) - b(3, 8),
                 -b(1, 1) - b(1, 2) - b(1, 3) + b(2, 3) + b(2, 4) + b(2, 6) + b(2, 7) - b(3, 4) -
                     b(3, 5) - b(3, 6) - b(3, 7) - b(3, 8),
                 -b(1, 1) - b(1, 2) + b(2, 3) + b(2, 6) + b(2, 7) - b(3, 4) - b(3, 5) - b(3, 6) -
                     b(3, 7) - b(3, 8)});
}

Int quantity_a4(const Element& b) {
  return max_of({-b(5, 6) - b(5, 7) - b(5, 8) - b(5, 9) - b(5, 10),
                 b(3, 5) - b(4, 4) + b(5, 5) - b(5, 6) - b(5, 7) - b(5, 8) - b(5, 9) - b(5, 10),
                 b(1, 5) - b(2, 2) - b(2, 3) - b(2, 4) + b(3, 3) + b(3, 4) + 2 * b(3, 5) - b(4, 4) +
                     b(5, 5) - b(5, 6) - b(5, 7) - b(5, 8) - b(5, 9) - b(5, 10)});
}

Int raw_epsilon(const Element& b, Int l, int k) {
  switch (k) {
    case 0:
      return l + quantity_a1(b);
    case 1:
      return b(1, 2);
    case 2:
      return max_of({b(1, 3), -b(1, 2) + b(1, 3) + b(2, 3)});
    case 3:
      return max_of({b(1, 4), -b(1, 3) + b(1, 4) + b(2, 4),
                     -b(1, 3) + b(1, 4) - b(2, 3) + b(2, 4) + b(3, 4)});
    case 4:
      return max_of({b(1, 5), -b(1, 4) + b(1, 5) + b(2, 5),
                     -b(1, 4) + b(1, 5) - b(2, 4) + b(2, 5) + b(3, 5),
                     -b(1, 4) + b(1, 5) - b(2, 4) + b(2, 5) - b(3, 4) + b(3, 5) + b(4, 5)});
    case 5:
      return max_of({b(1, 1) + b(1, 2) + b(1, 3) + b(1, 4) - b(2, 2) - b(2, 3) - b(2, 4) - b(2, 5),
                     b(1, 1) + b(1, 2) + b(1, 3) + b(1, 4) - b(2, 2) - b(2, 3) - b(2, 4) -
                         2 * b(2, 5) + b(3, 3) + b(3, 4) - b(4, 4) - b(4, 5)});
    default:
      return l + quantity_a2(b);
  }
}

Int raw_phi(const Element& b, Int l, int k) {
  switch (k) {
    case 0:
      return l + quantity_a3(b);
    case 1:
      return b(1, 1) - b(2, 2);
    case 2:
      return max_of({b(2, 2) - b(3, 3), b(1, 2) + b(2, 2) - b(2, 3) - b(3, 3)});
    case 3:
      return max_of({b(3, 3) - b(4, 4), b(2, 3) + b(3, 3) - b(3, 4) - b(4, 4),
                     b(1, 3) + b(2, 3) - b(2, 4) + b(3, 3) - b(3, 4) - b(4, 4)});
    case 4:
      return max_of(
          {b(4, 4) - b(5, 5), b(3, 4) + b(4, 4) - b(4, 5) - b(5, 5),
           b(2, 4) + b(3, 4) - b(3, 5) + b(4, 4) - b(4, 5) - b(5, 5),
           b(1, 4) + b(2, 4) - b(2, 5) + b(3, 4) - b(3, 5) + b(4, 4) - b(4, 5) - b(5, 5)});
    case 5:
      return max_of({b(4, 5), b(2, 5) - b(3, 3) - b(3, 4) + b(4, 4) + 2 * b(4, 5)});
    default:
      return l + quantity_a4(b);
  }
}

Int linear(const Element& b, const std::vector<detail::Cell>& form) {
  Int s = 0;
  for (const auto& c : form) s += c.coef * b(c.i, c.j);
  return s;
}

bool block_holds(const Element& b, const std::vector<detail::Inequality>& block, bool swap) {
  for (const auto& q : block) {
    Int l = linear(b, q.lhs), r = linear(b, q.rhs);
    bool strict = q.strict != swap;
    if (strict ? !(l > r) : !(l >= r)) return false;
  }
  return true;
}

using Cells = std::initializer_list<detail::Shift>;

// Exactly one entry of `holds` must be true; returns its index.
template <std::size_t N>
std::size_t unique_case(const std::array<bool, N>& holds, int k) {
  std::size_t found = N, count = 0;
  for (std::size_t i = 0; i < N; ++i)
    if (holds[i]) found = i, ++count;
  if (count != 1)
    throw ConditionFault("operator " + std::to_string(k) + ": " + std::to_string(count) +
                         " cases hold");
  return found;
}

void shift(Element& b, Cells cells, int sign) {
  for (const auto& c : cells) b(c.i, c.j) += sign * c.delta;
}

// The f-updates for k = 1..6; e applies them negated. The e-side selects
// with strict and weak comparisons exchanged.
void classical_step(Element& r, int k, bool raise) {
  const Element& b = r;
  const int sign = raise ? -1 : 1;
  auto gt = [raise](Int x, Int y) { return raise ? x >= y : x > y; };
  auto le = [raise](Int x, Int y) { return raise ? x < y : x <= y; };
  switch (k) {
    case 1:
      shift(r, {{1, 1, -1}, {1, 2, 1}, {6, 10, -1}, {6, 11, 1}}, sign);
      return;
    case 2:
      if (gt(b(1, 2), b(2, 3)))
        shift(r, {{1, 2, -1}, {1, 3, 1}, {5, 9, -1}, {5, 10, 1}}, sign);
      else
        shift(r, {{2, 2, -1}, {2, 3, 1}, {6, 9, -1}, {6, 10, 1}}, sign);
      return;
    case 3: {
      std::array<bool, 3> c = {gt(b(1, 3), b(2, 4)) && gt(b(1, 3) + b(2, 3), b(2, 4) + b(3, 4)),
                               le(b(1, 3), b(2, 4)) && gt(b(2, 3), b(3, 4)),
                               le(b(1, 3) + b(2, 3), b(2, 4) + b(3, 4)) && le(b(2, 3), b(3, 4))};
      switch (unique_case(c, k)) {
        case 0:
          shift(r, {{1, 3, -1}, {1, 4, 1}, {4, 8, -1}, {4, 9, 1}}, sign);
          break;
        case 1:
          shift(r, {{2, 3, -1}, {2, 4, 1}, {5, 8, -1}, {5, 9, 1}}, sign);
          break;
        default:
          shift(r, {{3, 3, -1}, {3, 4, 1}, {6, 8, -1}, {6, 9, 1}}, sign);
      }
      return;
    }
    case 4: {
      Int p1 = b(1, 4), q1 = b(2, 5);
      Int p2 = b(1, 4) + b(2, 4), q2 = b(2, 5) + b(3, 5);
      Int p3 = p2 + b(3, 4), q3 = q2 + b(4, 5);
      std::array<bool, 4> c = {
          gt(p1, q1) && gt(p2, q2) && gt(p3, q3),
          le(p1, q1) && gt(b(2, 4), b(3, 5)) && gt(b(2, 4) + b(3, 4), b(3, 5) + b(4, 5)),
          le(p2, q2) && le(b(2, 4), b(3, 5)) && gt(b(3, 4), b(4, 5)),
          le(p3, q3) && le(b(2, 4) + b(3, 4), b(3, 5) + b(4, 5)) && le(b(3, 4), b(4, 5))};
      switch (unique_case(c, k)) {
        case 0:
          shift(r, {{1, 4, -1}, {1, 5, 1}, {3, 7, -1}, {3, 8, 1}}, sign);
          break;
        case 1:
          shift(r, {{2, 4, -1}, {2, 5, 1}, {4, 7, -1}, {4, 8, 1}}, sign);
          break;
        case 2:
          shift(r, {{3, 4, -1}, {3, 5, 1}, {5, 7, -1}, {5, 8, 1}}, sign);
          break;
        default:
          shift(r, {{4, 4, -1}, {4, 5, 1}, {6, 7, -1}, {6, 8, 1}}, sign);
      }
      return;
    }
    case 5:
      if (gt(b(2, 5) + b(4, 4) + b(4, 5), b(3, 3) + b(3, 4)))
        shift(r, {{2, 5, -1}, {2, 6, 1}, {3, 6, -1}, {3, 7, 1}}, sign);
      else
        shift(r, {{4, 5, -1}, {4, 6, 1}, {5, 6, -1}, {5, 7, 1}}, sign);
      return;
    default: {
      Int u1 = b(1, 5) + b(3, 3) + b(3, 4) + b(3, 5), v1 = b(2, 2) + b(2, 3) + b(2, 4);
      Int u2 = u1 + b(3, 5) + b(5, 5), v2 = v1 + b(4, 4);
      std::array<bool, 3> c = {gt(u1, v1) && gt(u2, v2),
                               le(u1, v1) && gt(b(3, 5) + b(5, 5), b(4, 4)),
                               le(u2, v2) && le(b(3, 5) + b(5, 5), b(4, 4))};
      switch (unique_case(c, k)) {
        case 0:
          shift(r, {{1, 5, -1}, {1, 6, 1}, {2, 6, -1}, {2, 7, 1}}, sign);
          break;
        case 1:
          shift(r, {{3, 5, -1}, {3, 6, 1}, {4, 6, -1}, {4, 7, 1}}, sign);
          break;
        default:
          shift(r, {{5, 5, -1}, {5, 6, 1}, {6, 6, -1}, {6, 7, 1}}, sign);
      }
    }
  }
}

}  // namespace

Int weight_component(const Element& b, int k) {
  check_node(k);
  switch (k) {
    case 0:
      return -b(1, 1) - b(1, 2) + b(2, 3) + b(2, 4) + b(2, 5) + b(2, 6) + b(2, 7);
    case 1:
      return b(1, 1) - b(1, 2) - b(2, 2);
    case 2:
      return b(1, 2) - b(1, 3) + b(2, 2) - b(2, 3) - b(3, 3);
    case 3:
      return b(1, 3) - b(1, 4) + b(2, 3) - b(2, 4) + b(3, 3) - b(3, 4) - b(4, 4);
    case 4:
      return b(1, 4) - b(1, 5) + b(2, 4) - b(2, 5) + b(3, 4) - b(3, 5) + b(4, 4) - b(4, 5) -
             b(5, 5);
    case 5:
      return -b(1, 1) - b(1, 2) - b(1, 3) - b(1, 4) + b(2, 2) + b(2, 3) + b(2, 4) + 2 * b(2, 5) -
             b(3, 3) - b(3, 4) + b(4, 4) + 2 * b(4, 5);
    case 6:
      return b(1, 1) + b(1, 2) + b(1, 3) + b(1, 4) + 2 * b(1, 5) - b(2, 2) - b(2, 3) - b(2, 4) +
             b(3, 3) + b(3, 4) + 2 * b(3, 5) - b(4, 4) + b(5, 5) - b(5, 6) - b(5, 7) - b(5, 8) -
             b(5, 9) - b(5, 10);
  }
  return 0;
}

Weight weight(const Element& b) {
  Weight w{};
  for (int k = 0; k < kNodes; ++k) w[k] = weight_component(b, k);
  return w;
}

Int epsilon(const Element& b, const Level& spec, int k) {
  check_node(k);
  return raw_epsilon(b, spec.offset(), k);
}

Int phi(const Element& b, const Level& spec, int k) {
  check_node(k);
  Int p = raw_phi(b, spec.offset(), k);
  if (p - raw_epsilon(b, spec.offset(), k) != weight_component(b, k))
    throw std::logic_error("phi_" + std::to_string(k) + " - epsilon_" + std::to_string(k) +
                           " differs from wt_" + std::to_string(k));
  return p;
}

Weight epsilon_vector(const Element& b, const Level& spec) {
  Weight w{};
  for (int k = 0; k < kNodes; ++k) w[k] = epsilon(b, spec, k);
  return w;
}

Weight phi_vector(const Element& b, const Level& spec) {
  Weight w{};
  for (int k = 0; k < kNodes; ++k) w[k] = phi(b, spec, k);
  return w;
}

std::vector<int> holding_conditions(const Element& b, Family family) {
  std::vector<int> out;
  const auto& blocks = detail::e_blocks();
  for (int j = 0; j < 14; ++j)
    if (block_holds(b, blocks[j], family == Family::F)) out.push_back(j + 1);
  return out;
}

int select_condition(const Element& b, Family family) {
  auto hs = holding_conditions(b, family);
  if (hs.size() != 1) {
    std::string msg = std::string(family == Family::E ? "E" : "F") + "-conditions holding: {";
    for (std::size_t i = 0; i < hs.size(); ++i) msg += (i ? "," : "") + std::to_string(hs[i]);
    throw ConditionFault(msg + "}");
  }
  return hs.front();
}

std::optional<Element> apply(const Element& b, const Level& spec, Op op, int k) {
  check_node(k);
  Element r = b;
  const bool raise = op == Op::E;
  if (k == 0) {
    int j = select_condition(b, raise ? Family::E : Family::F);
    for (const auto& c : detail::e0_shifts()[j - 1]) r(c.i, c.j) += raise ? c.delta : -c.delta;
  } else {
    classical_step(r, k, raise);
  }
  if (!spec.is_infinite() && !is_valid(r, spec)) return std::nullopt;
  return r;
}

std::optional<Element> apply_e(const Element& b, const Level& spec, int k) {
  return apply(b, spec, Op::E, k);
}

std::optional<Element> apply_f(const Element& b, const Level& spec, int k) {
  return apply(b, spec, Op::F, k);
}

}  // namespace d6
