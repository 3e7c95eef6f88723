#include <doctest.h>

#include <random>

#include "d6spin/lattice.hpp"

using namespace d6;

TEST_CASE("cartan entries") {
  CHECK(cartan_entry(1, 1) == 2);
  CHECK(cartan_entry(0, 2) == -1);
  CHECK(cartan_entry(0, 1) == 0);
  CHECK(cartan_entry(4, 6) == -1);
  CHECK(cartan_entry(5, 6) == 0);
  CHECK_THROWS_AS(cartan_entry(7, 0), std::out_of_range);
  CHECK_THROWS_AS(cartan_entry(0, -1), std::out_of_range);
}

TEST_CASE("cartan matrix shape") {
  for (int j = 0; j < kNodes; ++j) {
    for (int k = 0; k < kNodes; ++k) {
      CHECK(cartan_entry(j, k) == cartan_entry(k, j));
      int expected = 0;
      if (j == k)
        expected = 2;
      else if ((j >= 1 && j <= 4 && k == j + 1) || (k >= 1 && k <= 4 && j == k + 1))
        expected = -1;
      else if ((j == 0 && k == 2) || (j == 2 && k == 0) || (j == 4 && k == 6) || (j == 6 && k == 4))
        expected = -1;
      CHECK(cartan_entry(j, k) == expected);
    }
  }
}

TEST_CASE("central element annihilates every simple root") {
  for (int k = 0; k < kNodes; ++k) {
    int s = 0;
    for (int j = 0; j < kNodes; ++j) s += cartan().cvee[j] * cartan_entry(j, k);
    CHECK(s == 0);
  }
  CHECK(cartan().cvee == std::array<int, kNodes>{1, 1, 2, 2, 2, 1, 1});
  CHECK(cartan().dcoef == std::array<int, kNodes>{1, 1, 2, 2, 2, 1, 1});
}

TEST_CASE("level of weights") {
  CHECK(level_of(fundamental_weight(0)) == 1);
  CHECK(level_of(fundamental_weight(2)) == 2);
  CHECK(level_of(Weight{}) == 0);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> d(-100, 100);
  for (int n = 0; n < 200; ++n) {
    Weight u, v;
    for (auto& x : u) x = d(rng);
    for (auto& x : v) x = d(rng);
    CHECK(level_of(u + v) == level_of(u) + level_of(v));
    CHECK(level_of(u - v) == level_of(u) - level_of(v));
    CHECK(level_of(-u) == -level_of(u));
  }
}
