#include "d6spin/coherent.hpp"

#include <algorithm>

#include "d6spin/crystal.hpp"

namespace d6 {

Int MinimalCoeffs::level() const { return a[0] + a[1] + 2 * (a[2] + a[3] + a[4]) + a[5] + a[6]; }

Element minimal_from_coeffs(const MinimalCoeffs& c) {
  const auto [a0, a1, a2, a3, a4, a5, a6] = c.a;
  const Int rows[6][6] = {
      {a1 + a2 + a3 + a4 + a6, a5, a4, a3, a2, a0}, {a2 + a3 + a4 + a6, a5, a4, a3, a1 + a2, a0},
      {a3 + a4 + a6, a5, a4, a2 + a3, a1, a0 + a2}, {a4 + a6, a5, a3 + a4, a2, a1, a0 + a2 + a3},
      {a6, a4 + a5, a3, a2, a1, a0 + a2 + a3 + a4}, {a6, a4, a3, a2, a1, a0 + a2 + a3 + a4 + a5},
  };
  Element b;
  for (int i = 1; i <= 6; ++i)
    for (int d = 0; d < 6; ++d) b(i, i + d) = rows[i - 1][d];
  return b;
}

std::vector<MinimalCoeffs> coefficient_solutions(Int l) {
  std::vector<MinimalCoeffs> out;
  if (l < 0) return out;
  MinimalCoeffs cur;
  constexpr int w[kNodes] = {1, 1, 2, 2, 2, 1, 1};
  auto rec = [&](auto&& self, int k, Int left) -> void {
    if (k == kNodes) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (Int v = 0; v * w[k] <= left; ++v) {
      cur.a[k] = v;
      self(self, k + 1, left - v * w[k]);
    }
    cur.a[k] = 0;
  };
  rec(rec, 0, l);
  return out;
}

std::vector<Element> minimal_set(Int l) {
  std::vector<Element> out;
  for (const auto& a : coefficient_solutions(l)) out.push_back(minimal_from_coeffs(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_minimal(const Element& b, Int l) {
  return level_of(epsilon_vector(b, Level::finite(l))) == l;
}

ShiftStats shift_stats(const ShiftedElement& s, int k) {
  const Level spec = Level::finite(s.level);
  return {epsilon(s.b, spec, k) - s.lambda[k], phi(s.b, spec, k) + s.mu[k],
          weight_component(s.b, k) + s.lambda[k] + s.mu[k]};
}

Element embed(Int l, const Element& b0, const Element& b) {
  const Level spec = Level::finite(l);
  if (!is_valid(b0, spec) || !is_minimal(b0, l))
    throw std::invalid_argument("b0 is not a minimal element of level " + std::to_string(l));
  if (!is_valid(b, spec))
    throw std::invalid_argument("b is not an element of level " + std::to_string(l));
  return b - b0;
}

Decomposition decompose(const Element& bp) {
  if (!is_valid(bp, Level::infinity()))
    throw std::invalid_argument("input is not an element of B^{6,inf}");
  if (bp.is_zero()) throw std::invalid_argument("the zero element has no unique decomposition");
  auto B = [&](int i, int j) { return bp(i, j); };
  const Int a1 = std::max(
      {-B(1, 1) + B(2, 2), -B(1, 1) - B(1, 2) + B(2, 2) + B(2, 3),
       -B(1, 1) - B(1, 2) - B(1, 3) + B(2, 2) + B(2, 3) + B(2, 4),
       -B(1, 1) - B(1, 2) - B(1, 3) - B(1, 4) + B(2, 2) + B(2, 3) + B(2, 4) + B(2, 5), Int{0}});
  const Int a2 = std::max({-B(2, 2) + B(3, 3), -B(2, 2) - B(2, 3) + B(3, 3) + B(3, 4),
                           -B(2, 2) - B(2, 3) - B(2, 4) + B(3, 3) + B(3, 4) + B(3, 5), -B(1, 5),
                           -B(2, 6) - a1, Int{0}});
  const Int a3 = std::max({-B(3, 3) + B(4, 4), -B(3, 3) - B(3, 4) + B(4, 4) + B(4, 5), -B(1, 4),
                           -B(2, 5), -B(3, 6) - a2, Int{0}});
  const Int a4 =
      std::max({-B(4, 4) + B(5, 5), -B(1, 3), -B(2, 4), -B(3, 5), -B(4, 6) - a3, Int{0}});
  const Int a5 = std::max({-B(1, 2), -B(2, 3), -B(3, 4), -B(4, 5), -B(5, 6) - a4, Int{0}});
  const Int a6 = std::max({-B(1, 1) - a1 - a2 - a3 - a4, -B(2, 2) - a2 - a3 - a4,
                           -B(3, 3) - a3 - a4, -B(4, 4) - a4, -B(5, 5), Int{0}});
  const Int s1 = B(1, 1), s2 = s1 + B(1, 2), s3 = s2 + B(1, 3), s4 = s3 + B(1, 4),
            s5 = s4 + B(1, 5);
  const Int a0 =
      std::max({s1 - a2 - a3 - a4 - a5, s2 - a2 - a3 - a4, s3 - a2 - a3, s4 - a2, s5, Int{0}});

  Decomposition d;
  d.a.a = {a0, a1, a2, a3, a4, a5, a6};
  d.l = d.a.level();
  d.b0 = minimal_from_coeffs(d.a);
  d.b = bp + d.b0;
  return d;
}

}  // namespace d6
