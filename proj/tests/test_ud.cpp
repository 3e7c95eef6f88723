#include <doctest.h>

#include <random>

#include "d6spin/crystal.hpp"
#include "d6spin/ud.hpp"
#include "support.hpp"

using namespace d6;

namespace {

UDPoint point(std::initializer_list<std::pair<UdVar, Int>> cells) {
  UDPoint x{};
  for (const auto& [v, n] : cells) x[v] = n;
  return x;
}

UDPoint random_point(std::mt19937_64& rng, Int r) {
  std::uniform_int_distribution<Int> d(-r, r);
  UDPoint x;
  for (auto& v : x) v = d(rng);
  return x;
}

const UDPoint kF0Ones = point(
    {{X63, 1}, {X44, 1}, {X33, 1}, {X22, 1}, {X52, 1}, {X43, 1}, {X32, 1}, {X11, 1}, {X21, 1}});

}  // namespace

TEST_CASE("variable order") {
  const std::vector<std::string> names = {"x6_3", "x4_4", "x3_3", "x2_2", "x5_2",
                                          "x4_3", "x3_2", "x6_2", "x4_2", "x5_1",
                                          "x1_1", "x2_1", "x3_1", "x4_1", "x6_1"};
  CHECK(ud_variable_names() == names);
  auto slots = names;
  slots.push_back("c");
  CHECK(ec_formula_slots() == slots);
}

TEST_CASE("weights and epsilon") {
  for (int k = 0; k < kNodes; ++k) {
    CHECK(ud_weight(UDPoint{}, k) == 0);
    CHECK(ud_epsilon(UDPoint{}, k) == 0);
  }
  const UDPoint x = point({{X11, -1}});
  CHECK(ud_weight(x, 1) == -2);
  CHECK(ud_weight(x, 0) == 0);
  CHECK(ud_epsilon(point({{X63, 2}}), 6) == -2);
  CHECK_THROWS(ud_weight(x, 7));
  std::mt19937_64 rng(3);
  for (int n = 0; n < 100; ++n) {
    const UDPoint y = random_point(rng, 30);
    for (int k = 0; k < kNodes; ++k) CHECK(ud_phi(y, k) == ud_weight(y, k) + ud_epsilon(y, k));
  }
}

TEST_CASE("e_k^c at the origin") {
  CHECK(apply_ec(UDPoint{}, 1, 3) == point({{X11, 3}}));
  CHECK(apply_ec(UDPoint{}, 2, 1) == point({{X22, 1}}));
  CHECK(ud_apply_f(UDPoint{}, 2) == point({{X21, -1}}));
  CHECK(ud_apply_f(UDPoint{}, 5) == point({{X51, -1}}));
  CHECK(ud_apply_f(ud_apply_e(UDPoint{}, 1), 1) == UDPoint{});
  CHECK_THROWS(apply_ec(UDPoint{}, -1, 1));
}

TEST_CASE("f_k branch tables agree with e_k^{-1}") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 3000; ++n) {
    const UDPoint x = random_point(rng, n < 1000 ? 3 : 25);
    for (int k = 1; k <= 6; ++k) CHECK(f_branch(x, k) == ud_apply_f(x, k));
  }
  CHECK_THROWS(f_branch(UDPoint{}, 0));
}

TEST_CASE("f_0 case table") {
  CHECK(f0_select(UDPoint{}) == 1);
  CHECK(f0_table(UDPoint{}) == kF0Ones);
  CHECK(apply_ec(UDPoint{}, 0, -1) == kF0Ones);
  std::mt19937_64 rng(5);
  for (int n = 0; n < 2000; ++n) {
    const UDPoint x = random_point(rng, n < 1000 ? 2 : 20);
    CHECK(f0_holding(x).size() == 1);
    CHECK(f0_table(x) == apply_ec(x, 0, -1));
  }
}

TEST_CASE("omega") {
  const Level inf = Level::infinity();
  CHECK(omega(Element{}) == UDPoint{});
  CHECK(omega_inv(UDPoint{}) == Element{});
  const Element f1 = *apply_f(Element{}, inf, 1);
  CHECK(omega(f1) == point({{X11, -1}}));
  CHECK(omega_inv(point({{X11, -1}})) == f1);
  const Element f0 = *apply_f(Element{}, inf, 0);
  CHECK(omega(f0) == kF0Ones);
  CHECK(omega(f0) == f0_table(UDPoint{}));
  std::mt19937_64 rng(9);
  for (int n = 0; n < 1000; ++n) {
    const UDPoint x = random_point(rng, 10);
    const Element b = omega_inv(x);
    CHECK(is_valid(b, inf));
    CHECK(omega(b) == x);
  }
}

TEST_CASE("parsed formulas against independent transcriptions") {
  const auto& slots = ec_formula_slots();
  auto same = [&](int k, int coord, const std::string& text) {
    const trop::TropExpr mine = trop::parse_tropical(text);
    const auto r = trop::check_equiv(ec_formula(k, coord), mine, trop::Box{-40, 40}, 3000, 1);
    INFO("k=" << k << " coordinate " << slots[coord] << " vs " << text);
    CHECK(r.equal);
  };
  same(1, X11, "x1_1 + c");
  same(1, X22, "x2_2");
  same(2, X22, "x2_2 + max(c + x2_2 + x2_1, x3_2 + x1_1) - max(x2_2 + x2_1, x3_2 + x1_1)");
  same(2, X21, "x2_1 + c - max(c + x2_2 + x2_1, x3_2 + x1_1) + max(x2_2 + x2_1, x3_2 + x1_1)");
  same(5, X63, "x6_3");
  same(6, X11, "x1_1");
  for (int k = 0; k < kNodes; ++k)
    for (int coord = 0; coord < kUdDim; ++coord)
      CHECK(trop::free_variables(ec_formula(k, coord)).size() <= slots.size());
}

TEST_CASE("compiled and inlined actions agree") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<Int> c(-30, 30);
  for (int n = 0; n < 500; ++n) {
    const UDPoint x = random_point(rng, 30);
    for (int k = 0; k < kNodes; ++k) {
      const Int cc = c(rng);
      CHECK(apply_ec_compiled(x, k, cc) == apply_ec(x, k, cc));
    }
  }
}
