#include <doctest.h>

#include <algorithm>
#include <set>

#include "d6spin/explorer.hpp"

using namespace d6;

namespace {

// Every assignment of one unit per row, filtered by validate.
std::vector<Element> naive_level_one() {
  std::vector<Element> out;
  std::array<int, 6> pos{};
  for (int code = 0; code < 6 * 6 * 6 * 6 * 6 * 6; ++code) {
    int c = code;
    for (auto& p : pos) {
      p = c % 6;
      c /= 6;
    }
    Element b;
    for (int i = 1; i <= 6; ++i) b(i, i + pos[i - 1]) = 1;
    if (is_valid(b, Level::finite(1))) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("enumeration of small levels") {
  CHECK(enumerate_level(0) == std::vector<Element>{Element{}});
  const auto b1 = enumerate_level(1);
  CHECK(b1.size() == 32);
  CHECK(b1 == naive_level_one());
  CHECK(enumerate_backtrack(2) == enumerate_bfs(2));
  CHECK(std::is_sorted(b1.begin(), b1.end()));

  int highest = 0;
  for (const auto& b : b1) {
    bool all_zero = true;
    for (int k = 1; k <= 6; ++k) all_zero = all_zero && epsilon(b, Level::finite(1), k) == 0;
    if (all_zero) {
      ++highest;
      CHECK(b == Element::diag(1));
    }
  }
  CHECK(highest == 1);
}

TEST_CASE("affine node keeps B^{6,l} closed") {
  const Level l2 = Level::finite(2);
  const auto b2 = enumerate_level(2);
  const std::set<Element> all(b2.begin(), b2.end());
  for (const auto& b : b2)
    for (Op op : {Op::E, Op::F})
      if (const auto r = apply(b, l2, op, 0)) CHECK(all.count(*r) == 1);
}

TEST_CASE("balls") {
  const Level inf = Level::infinity();
  CHECK(ball(Element{}, inf, 0) == std::vector<Element>{Element{}});
  std::set<Element> step;
  step.insert(Element{});
  for (int k = 0; k < kNodes; ++k) {
    step.insert(*apply_e(Element{}, inf, k));
    step.insert(*apply_f(Element{}, inf, k));
  }
  CHECK(step.size() == 15);
  const auto r1 = ball(Element{}, inf, 1);
  CHECK(std::set<Element>(r1.begin(), r1.end()) == step);
  const auto r2 = ball(Element{}, inf, 2);
  CHECK(std::includes(r2.begin(), r2.end(), r1.begin(), r1.end()));
  for (const auto& b : r2) CHECK(is_valid(b, inf));
}

TEST_CASE("crystal graph and DOT export") {
  CHECK(export_dot(CrystalGraph{}) == "digraph crystal { }");

  const auto single = export_dot(build_graph({Element::diag(1)}, Level::finite(1)));
  CHECK(single.find("n0 ") != std::string::npos);
  CHECK(single.find("->") == std::string::npos);

  const Level l1 = Level::finite(1);
  const auto g = build_graph(enumerate_level(1), l1);
  CHECK(g.vertices.size() == 32);
  for (const auto& e : g.edges) CHECK(apply_f(e.source, l1, e.k) == e.target);
  std::size_t expected = 0;
  for (const auto& b : g.vertices)
    for (int k = 0; k < kNodes; ++k) expected += apply_f(b, l1, k) ? 1 : 0;
  CHECK(g.edges.size() == expected);

  const auto text = export_dot(g);
  CHECK(text == export_dot(build_graph(enumerate_level(1), l1)));
  std::size_t nodes = 0;
  for (std::size_t p = text.find("label=\"["); p != std::string::npos;
       p = text.find("label=\"[", p + 1))
    ++nodes;
  CHECK(nodes == 32);
}
