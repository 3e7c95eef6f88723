#include "d6spin/explorer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "d6spin/io.hpp"

namespace d6 {

namespace {

using ElementSet = std::unordered_set<Element, ElementHash>;

std::vector<Element> sorted(const ElementSet& s) {
  std::vector<Element> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::array<Int, 6>> compositions(Int l) {
  std::vector<std::array<Int, 6>> out;
  std::array<Int, 6> cur{};
  auto rec = [&](auto&& self, int i, Int left) -> void {
    if (i == 5) {
      cur[5] = left;
      out.push_back(cur);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, l);
  return out;
}

// The constraints that involve only rows 1..r, checked once row r is set.
bool rows_consistent(const Element& b, int r) {
  auto span = [&](int i, int from, int to) {
    Int s = 0;
    for (int j = from; j <= to; ++j) s += b(i, j);
    return s;
  };
  for (int i = 1; i < r; ++i) {
    const int t = r - i;
    if (span(i, i, 6 - t) != span(r, r, 5 + t)) return false;
  }
  const int i = r - 1;
  if (i >= 1)
    for (int t = i; t <= 5; ++t)
      if (span(i, i, t) < span(i + 1, i + 1, t + 1)) return false;
  return true;
}

}  // namespace

std::vector<Element> enumerate_backtrack(Int l) {
  if (l < 0) throw std::invalid_argument("level must be nonnegative");
  const auto comps = compositions(l);
  std::vector<Element> out;
  Element b;
  auto rec = [&](auto&& self, int r) -> void {
    if (r > 6) {
      out.push_back(b);
      return;
    }
    for (const auto& c : comps) {
      for (int d = 0; d < 6; ++d) b(r, r + d) = c[d];
      if (rows_consistent(b, r)) self(self, r + 1);
    }
    for (int d = 0; d < 6; ++d) b(r, r + d) = 0;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> enumerate_bfs(Int l) {
  const Level spec = Level::finite(l);
  const Element seed = Element::diag(l);
  ElementSet seen{seed};
  std::deque<Element> queue{seed};
  while (!queue.empty()) {
    Element b = queue.front();
    queue.pop_front();
    for (int k = 1; k <= 6; ++k)
      for (Op op : {Op::E, Op::F})
        if (auto r = apply(b, spec, op, k); r && seen.insert(*r).second) queue.push_back(*r);
  }
  return sorted(seen);
}

std::vector<Element> enumerate_level(Int l) {
  auto a = enumerate_backtrack(l);
  auto b = enumerate_bfs(l);
  if (a != b)
    throw std::logic_error("enumeration oracles disagree at level " + std::to_string(l) + ": " +
                           std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  return a;
}

std::vector<Element> ball(const Element& start, const Level& spec, int radius) {
  ElementSet seen{start};
  std::vector<Element> frontier{start};
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<Element> next;
    for (const auto& b : frontier)
      for (int k = 0; k < kNodes; ++k)
        for (Op op : {Op::E, Op::F})
          if (auto y = apply(b, spec, op, k); y && seen.insert(*y).second) next.push_back(*y);
    frontier = std::move(next);
  }
  return sorted(seen);
}

CrystalGraph build_graph(std::vector<Element> vertices, const Level& spec, bool include_affine) {
  CrystalGraph g;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  const ElementSet members(vertices.begin(), vertices.end());
  for (const auto& u : vertices)
    for (int k = include_affine ? 0 : 1; k < kNodes; ++k)
      if (auto v = apply_f(u, spec, k); v && members.count(*v)) g.edges.push_back({u, k, *v});
  std::sort(g.edges.begin(), g.edges.end());
  g.vertices = std::move(vertices);
  return g;
}

std::string export_dot(const CrystalGraph& g) {
  if (g.vertices.empty() && g.edges.empty()) return "digraph crystal { }";
  static const char* colors[kNodes] = {"black",  "red",    "blue", "darkgreen",
                                       "orange", "purple", "brown"};
  std::vector<Element> verts = g.vertices;
  std::sort(verts.begin(), verts.end());
  auto id = [&](const Element& e) {
    return std::lower_bound(verts.begin(), verts.end(), e) - verts.begin();
  };
  std::vector<CrystalEdge> edges = g.edges;
  std::sort(edges.begin(), edges.end());
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t i = 0; i < verts.size(); ++i)
    os << "  n" << i << " [label=\"" << rows_to_json(verts[i]) << "\"];\n";
  for (const auto& e : edges)
    os << "  n" << id(e.source) << " -> n" << id(e.target) << " [label=\"" << e.k << "\", color=\""
       << colors[e.k] << "\"];\n";
  os << "}";
  return os.str();
}

}  // namespace d6
