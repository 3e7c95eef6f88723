#include <doctest.h>

#include <set>

#include "d6spin/coherent.hpp"
#include "d6spin/crystal.hpp"
#include "d6spin/explorer.hpp"
#include "support.hpp"

using namespace d6;
using d6::test::entries;
using d6::test::ones;

namespace {

const Level kInf = Level::infinity();

// The seven generators b^0_k, transcribed entry by entry.
const std::array<Element, kNodes> kGenerators = {
    ones({{1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}, {6, 11}}),
    ones({{1, 1}, {2, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 10}}),
    ones({{1, 1},
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
          {6, 11}}),
    ones({{1, 1},
          {1, 4},
          {2, 2},
          {2, 5},
          {3, 3},
          {3, 6},
          {4, 6},
          {4, 9},
          {5, 7},
          {5, 10},
          {6, 8},
          {6, 11}}),
    ones({{1, 1},
          {1, 3},
          {2, 2},
          {2, 4},
          {3, 3},
          {3, 5},
          {4, 4},
          {4, 6},
          {5, 6},
          {5, 10},
          {6, 7},
          {6, 11}}),
    ones({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 11}}),
    ones({{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}}),
};

MinimalCoeffs unit(int k) {
  MinimalCoeffs a;
  a.a[k] = 1;
  return a;
}

}  // namespace

TEST_CASE("minimal elements are sums of generators") {
  for (int k = 0; k < kNodes; ++k) CHECK(minimal_from_coeffs(unit(k)) == kGenerators[k]);
  for (const auto& a : coefficient_solutions(3)) {
    Element sum;
    for (int k = 0; k < kNodes; ++k)
      for (Int n = 0; n < a.a[k]; ++n) sum = sum + kGenerators[k];
    CHECK(minimal_from_coeffs(a) == sum);
    CHECK(a.level() == 3);
  }
}

TEST_CASE("minimal set sizes and minimality") {
  CHECK(minimal_set(1).size() == 4);
  CHECK(minimal_set(2).size() == 13);
  for (Int l : {1, 2, 3})
    for (const auto& b : minimal_set(l)) {
      CHECK(is_valid(b, Level::finite(l)));
      CHECK(is_minimal(b, l));
    }
  CHECK(is_minimal(Element::diag(1), 1));
  CHECK_FALSE(is_minimal(ones({{1, 2}, {2, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 11}}), 1));

  std::set<Weight> eps;
  for (const auto& b : minimal_set(1)) eps.insert(epsilon_vector(b, Level::finite(1)));
  CHECK(eps == std::set<Weight>{fundamental_weight(0), fundamental_weight(1), fundamental_weight(5),
                                fundamental_weight(6)});
}

TEST_CASE("minimal elements are exactly the level-l elements of least pairing") {
  for (Int l : {1, 2}) {
    std::set<Element> scanned;
    for (const auto& b : enumerate_level(l))
      if (level_of(epsilon_vector(b, Level::finite(l))) == l) scanned.insert(b);
    const auto ms = minimal_set(l);
    CHECK(scanned == std::set<Element>(ms.begin(), ms.end()));
  }
}

TEST_CASE("shifted statistics") {
  const Element b0 = kGenerators[3] + kGenerators[5];
  const Level l3 = Level::finite(3);
  ShiftedElement plain{Weight{}, b0, Weight{}, 3};
  for (int k = 0; k < kNodes; ++k) {
    const auto s = shift_stats(plain, k);
    CHECK(s.epsilon == epsilon(b0, l3, k));
    CHECK(s.phi == phi(b0, l3, k));
    CHECK(s.wt == weight_component(b0, k));
  }
  ShiftedElement cancel{epsilon_vector(b0, l3), b0, -phi_vector(b0, l3), 3};
  for (int k = 0; k < kNodes; ++k) {
    CHECK(shift_stats(cancel, k).epsilon == 0);
    CHECK(shift_stats(cancel, k).phi == 0);
  }
  const Element b = Element::diag(2);
  ShiftedElement one{fundamental_weight(1), b, Weight{}, 2};
  for (int k = 0; k < kNodes; ++k)
    CHECK(shift_stats(one, k).epsilon == epsilon(b, Level::finite(2), k) - (k == 1 ? 1 : 0));
}

TEST_CASE("embed") {
  CHECK(embed(1, Element::diag(1), Element::diag(1)).is_zero());
  const Element fb1 = ones({{1, 2}, {2, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 11}});
  const Element image = embed(1, kGenerators[1], fb1);
  CHECK(image == entries({{1, 1, -1}, {1, 2, 1}, {6, 10, -1}, {6, 11, 1}}));
  CHECK(image == *apply_f(Element{}, kInf, 1));
  CHECK_THROWS_AS(embed(1, fb1, fb1), std::invalid_argument);
  CHECK_THROWS_AS(embed(1, kGenerators[1], Element::diag(2)), std::invalid_argument);
  for (const auto& b : enumerate_level(2)) {
    const Element bp = embed(2, kGenerators[2], b);
    for (int i = 1; i <= 6; ++i) {
      Int row = 0;
      for (int j = i; j <= i + 5; ++j) row += bp(i, j);
      CHECK(row == 0);
    }
  }
}

TEST_CASE("decompose") {
  const Element f1 = *apply_f(Element{}, kInf, 1);
  const Decomposition d = decompose(f1);
  CHECK(d.a.a == std::array<Int, kNodes>{0, 1, 0, 0, 0, 0, 0});
  CHECK(d.l == 1);
  CHECK(d.b0 == kGenerators[1]);
  CHECK(d.b == ones({{1, 2}, {2, 6}, {3, 7}, {4, 8}, {5, 9}, {6, 11}}));

  const Element f0 = *apply_f(Element{}, kInf, 0);
  const Decomposition d0 = decompose(f0);
  CHECK(is_valid(d0.b, Level::finite(d0.l)));
  CHECK(embed(d0.l, d0.b0, d0.b) == f0);

  CHECK_THROWS_AS(decompose(Element{}), std::invalid_argument);
  CHECK_THROWS_AS(decompose(entries({{1, 1, 1}})), std::invalid_argument);

  for (const auto& bp : ball(Element{}, kInf, 3)) {
    if (bp.is_zero()) continue;
    const Decomposition r = decompose(bp);
    CHECK(is_minimal(r.b0, r.l));
    CHECK(embed(r.l, r.b0, r.b) == bp);
  }
}
