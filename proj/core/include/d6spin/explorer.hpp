// Enumeration of B^{6,l}, operator balls in B^{6,inf}, and crystal graphs.
#pragma once

#include <string>
#include <vector>

#include "d6spin/crystal.hpp"
#include "d6spin/element.hpp"

namespace d6 {

// Row-by-row backtracking over compositions of l, pruned by the cross-row
// equalities and inequalities as soon as a row is fixed. Sorted.
std::vector<Element> enumerate_backtrack(Int l);

// Closure of diag(l) under e_k and f_k for k = 1..6. Sorted.
std::vector<Element> enumerate_bfs(Int l);

// Both of the above; throws std::logic_error if they disagree.
std::vector<Element> enumerate_level(Int l);

// Elements reachable from start by at most `radius` operators e_k, f_k
// (k = 0..6). Sorted.
std::vector<Element> ball(const Element& start, const Level& spec, int radius);

struct CrystalEdge {
  Element source;
  int k;
  Element target;

  auto operator<=>(const CrystalEdge&) const = default;
};

struct CrystalGraph {
  std::vector<Element> vertices;
  std::vector<CrystalEdge> edges;
};

// Vertices sorted; an edge (u, k, v) for every f_k(u) = v inside the vertex set.
CrystalGraph build_graph(std::vector<Element> vertices, const Level& spec,
                         bool include_affine = true);

std::string export_dot(const CrystalGraph& g);

}  // namespace d6
