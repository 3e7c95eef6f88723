#include <doctest.h>

#include <algorithm>

#include "d6spin/crystal.hpp"
#include "d6spin/explorer.hpp"
#include "support.hpp"

using namespace d6;
using d6::test::entries;
using d6::test::ones;

namespace {

const Level kInf = Level::infinity();
const Element kB0 = ones({{1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}, {6, 11}});
const Element kB1 = ones({{1, 1}, {2, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 10}});
const Element kB2 = ones({{1, 1},
                          {1, 5},
                          {2, 2},
                          {2, 6},
                          {3, 6},
                          {3, 8},
                          {4, 7},
                          {4, 9},
                          {5, 8},
                          {5, 10},
                          {6, 9},
                          {6, 11}});
const Element kF1Zero = entries({{1, 1, -1}, {1, 2, 1}, {6, 10, -1}, {6, 11, 1}});

bool has(const std::vector<Violation>& vs, Violation::Kind kind, int a, int b = -1) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
    return v.kind == kind && v.a == a && (b < 0 || v.b == b);
  });
}

}  // namespace

TEST_CASE("validate") {
  CHECK(is_valid(Element{}, kInf));
  CHECK(is_valid(kB0, Level::finite(1)));
  CHECK(is_valid(kB2, Level::finite(2)));
  CHECK_FALSE(is_valid(kB0, Level::finite(2)));

  const auto v = validate(entries({{1, 1, -1}}), Level::finite(1));
  CHECK(has(v, Violation::Kind::Nonnegativity, 1, 1));
  CHECK(has(v, Violation::Kind::RowSum, 1));
  CHECK(v.front().describe().find('(') != std::string::npos);

  CHECK(is_valid(kF1Zero, kInf));
  CHECK_FALSE(is_valid(entries({{1, 1, -1}, {1, 2, 1}}), kInf));
}

TEST_CASE("level spec") {
  CHECK(Level::parse("inf").is_infinite());
  CHECK(Level::parse("3") == Level::finite(3));
  CHECK(Level::finite(2).to_string() == "2");
  CHECK_THROWS(Level::finite(-1));
  CHECK_THROWS(Level::parse("x"));
  CHECK_THROWS_AS(Level::infinity().value(), std::logic_error);
}

TEST_CASE("weights") {
  for (int k = 0; k < kNodes; ++k) CHECK(weight_component(Element{}, k) == 0);
  CHECK(weight_component(kF1Zero, 1) == -2);
  CHECK(weight_component(kF1Zero, 2) == 1);
  CHECK_THROWS(weight_component(kF1Zero, 7));
}

TEST_CASE("epsilon and phi") {
  CHECK(epsilon(Element{}, kInf, 0) == 0);
  CHECK(epsilon(kB2, Level::finite(2), 4) == 1);
  CHECK(phi(kB2, Level::finite(2), 2) == 1);
  for (int k = 0; k < kNodes; ++k) CHECK(phi(Element{}, kInf, k) == 0);
  CHECK(phi(kF1Zero, kInf, 1) == -1);
  for (Int l : {1, 2, 3})
    for (int k = 1; k <= 6; ++k) CHECK(epsilon(Element::diag(l), Level::finite(l), k) == 0);
  CHECK(epsilon(Element::diag(1), Level::finite(1), 0) == 1);
}

TEST_CASE("condition selection") {
  CHECK(select_condition(Element{}, Family::E) == 14);
  CHECK(select_condition(Element{}, Family::F) == 1);
  // Every quantity compared in the blocks vanishes at b^0_0, as at the origin.
  CHECK(select_condition(kB0, Family::E) == 14);
  CHECK(select_condition(kB0, Family::F) == 1);
  CHECK(holding_conditions(Element{}, Family::E) == std::vector<int>{14});
}

TEST_CASE("e and f at the origin of B^{6,inf}") {
  const auto f1 = apply_f(Element{}, kInf, 1);
  REQUIRE(f1);
  CHECK(*f1 == kF1Zero);
  CHECK(apply_e(kF1Zero, kInf, 1) == Element{});

  CHECK(apply_f(Element{}, kInf, 5) == entries({{4, 5, -1}, {4, 6, 1}, {5, 6, -1}, {5, 7, 1}}));

  // Case (F_1); reading the row-5 gain at (5,9) would leave B^{6,inf}.
  CHECK(apply_f(Element{}, kInf, 0) == entries({{1, 1, 1},
                                                {1, 6, -1},
                                                {2, 2, 1},
                                                {2, 7, -1},
                                                {3, 6, 1},
                                                {3, 8, -1},
                                                {4, 7, 1},
                                                {4, 9, -1},
                                                {5, 8, 1},
                                                {5, 10, -1},
                                                {6, 9, 1},
                                                {6, 11, -1}}));
  CHECK_FALSE(is_valid(entries({{1, 1, 1},
                                {1, 6, -1},
                                {2, 2, 1},
                                {2, 7, -1},
                                {3, 6, 1},
                                {3, 8, -1},
                                {4, 7, 1},
                                {4, 9, -1},
                                {5, 9, 1},
                                {5, 10, -1},
                                {6, 9, 1},
                                {6, 11, -1}}),
                       kInf));

  // Case (E_14): the row-5 and row-6 decrements sit on the diagonal.
  CHECK(apply_e(Element{}, kInf, 0) == entries({{1, 1, -1},
                                                {1, 3, 1},
                                                {2, 2, -1},
                                                {2, 4, 1},
                                                {3, 3, -1},
                                                {3, 5, 1},
                                                {4, 4, -1},
                                                {4, 6, 1},
                                                {5, 5, -1},
                                                {5, 10, 1},
                                                {6, 6, -1},
                                                {6, 11, 1}}));
}

TEST_CASE("finite level zero") {
  CHECK_FALSE(apply_e(Element::diag(1), Level::finite(1), 1));
  const auto f = apply_f(kB1, Level::finite(1), 1);
  REQUIRE(f);
  CHECK(*f == ones({{1, 2}, {2, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 11}}));
}

TEST_CASE("operators are total and closed on a ball of B^{6,inf}") {
  for (const auto& b : ball(Element{}, kInf, 3)) {
    for (int k = 0; k < kNodes; ++k) {
      for (Op op : {Op::E, Op::F}) {
        const auto r = apply(b, kInf, op, k);
        REQUIRE(r);
        CHECK(is_valid(*r, kInf));
        CHECK(apply(*r, kInf, op == Op::E ? Op::F : Op::E, k) == b);
      }
    }
  }
}
