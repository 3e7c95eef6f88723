#include "d6spin/ud.hpp"

#include <algorithm>
#include <bitset>
#include <initializer_list>

#include "ud_formulas.hpp"

namespace d6 {

namespace {

Int max_of(std::initializer_list<Int> xs) { return std::max(xs); }

// The fourteen terms whose maximum K is epsilon_0(x).
using Terms = std::array<Int, 14>;

Terms k_terms(const UDPoint& x) {
  return {x[X61],
          x[X22] + x[X21] - x[X33] - x[X32] + x[X51],
          x[X22] - x[X33] + x[X31] - x[X42] + x[X51],
          x[X22] - x[X33] + x[X41],
          x[X32] + x[X31] - x[X43] - x[X42] + x[X51],
          x[X32] - x[X43] + x[X41],
          x[X42] + x[X41] - x[X62],
          x[X22] + x[X21] - x[X63],
          x[X22] + x[X21] + x[X62] - x[X44] - x[X43],
          x[X22] + x[X21] - x[X32] - x[X44] + x[X42],
          x[X22] + x[X21] - x[X33] - x[X32] + x[X43] + x[X42] - x[X52],
          x[X22] + x[X31] - x[X44],
          x[X22] - x[X33] + x[X31] + x[X43] - x[X52],
          x[X32] + x[X31] - x[X52]};
}

using Mask = std::bitset<14>;

Mask mask(std::initializer_list<int> terms) {
  Mask m;
  for (int t : terms) m.set(static_cast<std::size_t>(t - 1));
  return m;
}

Mask all_but(std::initializer_list<int> terms) { return ~mask(terms); }

// max_i (T_i + c [i in m])
Int shifted_max(const Terms& t, const Mask& m, Int c) {
  Int r = t[0] + (m[0] ? c : 0);
  for (std::size_t i = 1; i < t.size(); ++i) r = std::max(r, t[i] + (m[i] ? c : 0));
  return r;
}

// For parts P_0..P_{n-1}, the increments M_{j+1} - M_j where M_j adds c to
// the first j parts before taking the maximum. They sum to c.
template <std::size_t N>
std::array<Int, N> chain_increments(const std::array<Int, N>& parts, Int c) {
  std::array<Int, N + 1> m{};
  for (std::size_t j = 0; j <= N; ++j) {
    Int best = parts[0] + (j > 0 ? c : 0);
    for (std::size_t i = 1; i < N; ++i) best = std::max(best, parts[i] + (i < j ? c : 0));
    m[j] = best;
  }
  std::array<Int, N> d{};
  for (std::size_t j = 0; j < N; ++j) d[j] = m[j + 1] - m[j];
  return d;
}

UDPoint apply_e0(const UDPoint& x, Int c) {
  const Terms t = k_terms(x);
  const Int K = shifted_max(t, Mask{}, c);
  auto M = [&](const Mask& m) { return shifted_max(t, m, c); };
  static const Mask s31 = mask({1, 3, 4, 5, 6, 7, 12, 13, 14});
  static const Mask s33 = mask({1, 5, 6, 7, 14});
  static const Mask s41 = mask({1, 4, 6, 7});
  static const Mask s44 = mask({1, 2, 3, 4, 5, 6, 7, 11, 13, 14});
  static const Mask s5 = mask({1, 2, 3, 4, 5, 6, 7});
  static const Mask s61 = mask({1});
  static const Mask s63 = all_but({8});
  static const Mask wide = all_but({8, 9});
  static const Mask s_10 = mask({10});
  static const Mask s_17 = mask({1, 7});

  // Common maximum of the updates of x_4^(2) and x_4^(3).
  const Int n = max_of({c + t[0] + M(wide), c + t[1] + K, c + t[2] + K, c + t[3] + K, c + t[4] + K,
                        c + t[5] + M(s_10), c + t[6] + M(wide), t[7] + M(s_17), t[8] + M(s61),
                        c + t[9] + K, c + t[10] + K, c + t[11] + K, c + t[12] + K, c + t[13] + K});

  UDPoint y = x;
  y[X22] -= c;
  y[X11] -= c;
  y[X21] -= c;
  y[X33] += -c + M(s33) - K;
  y[X32] += -c + M(s31) - M(s33);
  y[X31] += K - M(s31);
  y[X44] += -c + M(s44) - K;
  y[X43] += -c + n - K - M(s44);
  y[X42] += K + M(s41) - n;
  y[X41] += K - M(s41);
  y[X52] += -c + M(s5) - K;
  y[X51] += K - M(s5);
  y[X63] += -c + M(s63) - K;
  y[X62] += M(s61) - M(s63);
  y[X61] += K - M(s61);
  return y;
}

template <std::size_t N>
void add_increments(UDPoint& y, const std::array<Int, N>& parts, const std::array<int, N>& coords,
                    Int c) {
  auto d = chain_increments(parts, c);
  for (std::size_t i = 0; i < N; ++i) y[coords[i]] += d[i];
}

}  // namespace

const std::vector<std::string>& ud_variable_names() {
  static const std::vector<std::string> names = {"x6_3", "x4_4", "x3_3", "x2_2", "x5_2",
                                                 "x4_3", "x3_2", "x6_2", "x4_2", "x5_1",
                                                 "x1_1", "x2_1", "x3_1", "x4_1", "x6_1"};
  return names;
}

Int ud_weight(const UDPoint& x, int k) {
  check_node(k);
  const Int s4 = x[X44] + x[X43] + x[X42] + x[X41];
  switch (k) {
    case 0:
      return -x[X22] - x[X21];
    case 1:
      return 2 * x[X11] - x[X22] - x[X21];
    case 2:
      return -x[X11] + 2 * x[X22] + 2 * x[X21] - x[X33] - x[X32] - x[X31];
    case 3:
      return -x[X22] - x[X21] + 2 * (x[X33] + x[X32] + x[X31]) - s4;
    case 4:
      return -x[X33] - x[X32] - x[X31] + 2 * s4 - x[X52] - x[X51] - x[X63] - x[X62] - x[X61];
    case 5:
      return -s4 + 2 * x[X52] + 2 * x[X51];
    default:
      return -s4 + 2 * x[X63] + 2 * x[X62] + 2 * x[X61];
  }
}

Int ud_epsilon(const UDPoint& x, int k) {
  check_node(k);
  switch (k) {
    case 0: {
      const Terms t = k_terms(x);
      return *std::max_element(t.begin(), t.end());
    }
    case 1:
      return -x[X11] + x[X22];
    case 2:
      return max_of({-x[X22] + x[X33], x[X11] - 2 * x[X22] - x[X21] + x[X33] + x[X32]});
    case 3:
      return max_of(
          {-x[X33] + x[X44], x[X22] - 2 * x[X33] - x[X32] + x[X44] + x[X43],
           x[X22] + x[X21] - 2 * x[X33] - 2 * x[X32] - x[X31] + x[X44] + x[X43] + x[X42]});
    case 4:
      return max_of({-x[X44] + x[X63], x[X33] - 2 * x[X44] - x[X43] + x[X52] + x[X63],
                     x[X33] + x[X32] - 2 * x[X44] - 2 * x[X43] - x[X42] + x[X52] + x[X63] + x[X62],
                     x[X33] + x[X32] + x[X31] - 2 * x[X44] - 2 * x[X43] - 2 * x[X42] - x[X41] +
                         x[X52] + x[X51] + x[X63] + x[X62]});
    case 5:
      return max_of({x[X44] - x[X52], x[X44] + x[X43] + x[X42] - 2 * x[X52] - x[X51]});
    default:
      return max_of({-x[X63], x[X44] + x[X43] - 2 * x[X63] - x[X62],
                     x[X44] + x[X43] + x[X42] + x[X41] - 2 * x[X63] - 2 * x[X62] - x[X61]});
  }
}

Int ud_phi(const UDPoint& x, int k) { return ud_weight(x, k) + ud_epsilon(x, k); }

UDPoint apply_ec(const UDPoint& x, int k, Int c) {
  check_node(k);
  UDPoint y = x;
  switch (k) {
    case 0:
      return apply_e0(x, c);
    case 1:
      y[X11] += c;
      break;
    case 2:
      add_increments<2>(y, {x[X22] + x[X21], x[X32] + x[X11]}, {X22, X21}, c);
      break;
    case 3:
      add_increments<3>(y,
                        {x[X33] + 2 * x[X32] + x[X31], x[X22] + x[X32] + x[X31] + x[X43],
                         x[X22] + x[X21] + x[X43] + x[X42]},
                        {X33, X32, X31}, c);
      break;
    case 4:
      add_increments<4>(y,
                        {x[X44] + 2 * x[X43] + 2 * x[X42] + x[X41],
                         x[X33] + x[X43] + 2 * x[X42] + x[X41] + x[X52],
                         x[X33] + x[X32] + x[X42] + x[X41] + x[X52] + x[X62],
                         x[X33] + x[X32] + x[X31] + x[X52] + x[X51] + x[X62]},
                        {X44, X43, X42, X41}, c);
      break;
    case 5:
      add_increments<2>(y, {x[X52] + x[X51], x[X43] + x[X42]}, {X52, X51}, c);
      break;
    default:
      add_increments<3>(y,
                        {x[X63] + 2 * x[X62] + x[X61], x[X44] + x[X43] + x[X62] + x[X61],
                         x[X44] + x[X43] + x[X42] + x[X41]},
                        {X63, X62, X61}, c);
  }
  return y;
}

UDPoint f_branch(const UDPoint& x, int k) {
  check_node(k);
  if (k == 0) throw std::invalid_argument("f_branch covers k = 1..6; use f0_table for k = 0");
  UDPoint y = x;
  auto pick = [&](std::initializer_list<std::pair<bool, int>> cases) {
    int hits = 0, coord = -1;
    for (const auto& [holds, v] : cases)
      if (holds) ++hits, coord = v;
    if (hits != 1)
      throw ConditionFault("f_" + std::to_string(k) + ": " + std::to_string(hits) +
                           " branches hold");
    y[coord] -= 1;
  };
  switch (k) {
    case 1:
      y[X11] -= 1;
      break;
    case 2: {
      const bool up = x[X22] + x[X21] > x[X11] + x[X32];
      pick({{up, X22}, {!up, X21}});
      break;
    }
    case 3: {
      const Int a = x[X33] + x[X32], b = x[X22] + x[X43];
      const Int p = x[X33] + 2 * x[X32] + x[X31], q = x[X22] + x[X21] + x[X43] + x[X42];
      const Int r = x[X32] + x[X31], s = x[X21] + x[X42];
      pick({{a > b && p > q, X33}, {a <= b && r > s, X32}, {r <= s && p <= q, X31}});
      break;
    }
    case 4: {
      const Int a = x[X44] + x[X43], b = x[X33] + x[X52];
      const Int p = x[X44] + 2 * x[X43] + x[X42], q = x[X33] + x[X32] + x[X52] + x[X62];
      const Int u = x[X44] + 2 * x[X43] + 2 * x[X42] + x[X41];
      const Int v = x[X33] + x[X32] + x[X31] + x[X52] + x[X51] + x[X62];
      const Int r = x[X43] + x[X42], s = x[X32] + x[X62];
      const Int g = x[X43] + 2 * x[X42] + x[X41], h = x[X32] + x[X31] + x[X51] + x[X62];
      const Int m = x[X42] + x[X41], n = x[X31] + x[X51];
      pick({{a > b && p > q && u > v, X44},
            {a <= b && r > s && g > h, X43},
            {p <= q && r <= s && m > n, X42},
            {m <= n && g <= h && u <= v, X41}});
      break;
    }
    case 5: {
      const bool up = x[X52] + x[X51] > x[X43] + x[X42];
      pick({{up, X52}, {!up, X51}});
      break;
    }
    default: {
      const Int a = x[X63] + x[X62], b = x[X44] + x[X43];
      const Int p = x[X63] + 2 * x[X62] + x[X61], q = x[X44] + x[X43] + x[X42] + x[X41];
      const Int r = x[X62] + x[X61], s = x[X42] + x[X41];
      pick({{a > b && p > q, X63}, {a <= b && r > s, X62}, {r <= s && p <= q, X61}});
    }
  }
  return y;
}

namespace {

struct Term {
  int coef, var;
};

struct Inequality {
  std::vector<Term> lhs;
  bool strict;
  std::vector<Term> rhs;
};

// clang-format off
const std::array<std::vector<Inequality>, 14>& f0_blocks() {
  static const std::array<std::vector<Inequality>, 14> blocks = {{
    {
      {{{-1,X63},{1,X22},{1,X21}}, false, {{1,X61}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X63},{1,X22},{1,X21}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{1,X61}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{1,X61}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{1,X61}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X44},{1,X22},{1,X31}}, false, {{1,X61}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X44},{1,X22},{1,X31}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X44},{1,X22},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X44},{1,X22},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X44},{1,X22},{1,X31}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{1,X61}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, false, {{1,X61}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, false, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, false, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, true, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X52},{1,X32},{1,X31}}, false, {{1,X61}}},
      {{{-1,X52},{1,X32},{1,X31}}, false, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X52},{1,X32},{1,X31}}, false, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X52},{1,X32},{1,X31}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X52},{1,X32},{1,X31}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X52},{1,X32},{1,X31}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X52},{1,X32},{1,X31}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X52},{1,X32},{1,X31}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X52},{1,X32},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X52},{1,X32},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X52},{1,X32},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X52},{1,X32},{1,X31}}, true, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X52},{1,X32},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}}},
    {
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, false, {{1,X61}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X33},{1,X22},{1,X41}}, false, {{1,X61}}},
      {{{-1,X33},{1,X22},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X33},{1,X22},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{1,X41}}, false, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X33},{1,X22},{1,X41}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X33},{1,X22},{1,X41}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X33},{1,X22},{1,X41}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X33},{1,X22},{1,X41}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X33},{1,X22},{1,X41}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X33},{1,X22},{1,X41}}, true, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X33},{1,X22},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X33},{1,X22},{1,X41}}, false, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, false, {{1,X61}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, false, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, false, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}, true, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X43},{1,X32},{1,X41}}, false, {{1,X61}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X43},{1,X32},{1,X41}}, false, {{-1,X62},{1,X42},{1,X41}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X43},{1,X32},{1,X41}}, true, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{-1,X62},{1,X42},{1,X41}}, false, {{1,X61}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X33},{1,X22},{1,X41}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X43},{1,X32},{1,X41}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X44},{1,X22},{1,X31}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{-1,X62},{1,X42},{1,X41}}, true, {{-1,X52},{1,X32},{1,X31}}}},
    {
      {{{1,X61}}, true, {{-1,X33},{1,X22},{-1,X32},{1,X51},{1,X21}}},
      {{{1,X61}}, true, {{-1,X33},{1,X22},{-1,X42},{1,X51},{1,X31}}},
      {{{1,X61}}, true, {{-1,X33},{1,X22},{1,X41}}},
      {{{1,X61}}, true, {{-1,X43},{1,X32},{-1,X42},{1,X51},{1,X31}}},
      {{{1,X61}}, true, {{-1,X43},{1,X32},{1,X41}}},
      {{{1,X61}}, true, {{-1,X62},{1,X42},{1,X41}}},
      {{{1,X61}}, true, {{-1,X63},{1,X22},{1,X21}}},
      {{{1,X61}}, true, {{-1,X44},{1,X22},{-1,X43},{1,X62},{1,X21}}},
      {{{1,X61}}, true, {{-1,X44},{1,X22},{-1,X32},{1,X42},{1,X21}}},
      {{{1,X61}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{-1,X32},{1,X42},{1,X21}}},
      {{{1,X61}}, true, {{-1,X44},{1,X22},{1,X31}}},
      {{{1,X61}}, true, {{-1,X33},{1,X22},{-1,X52},{1,X43},{1,X31}}},
      {{{1,X61}}, true, {{-1,X52},{1,X32},{1,X31}}}}
  }};
  return blocks;
}

const std::array<std::array<int, kUdDim>, 14>& f0_increments() {
  static const std::array<std::array<int, kUdDim>, 14> inc = {{
    {1,1,1,1,1,1,1,0,0,0,1,1,0,0,0},
    {0,1,1,1,1,1,1,1,0,0,1,1,0,0,0},
    {0,1,1,1,1,0,1,1,1,0,1,1,0,0,0},
    {0,0,1,1,1,1,1,1,1,0,1,1,0,0,0},
    {0,1,1,1,1,0,0,1,1,0,1,1,1,0,0},
    {0,0,1,1,0,1,1,1,1,1,1,1,0,0,0},
    {0,0,1,1,1,1,0,1,1,0,1,1,1,0,0},
    {0,0,0,1,1,1,1,1,1,0,1,1,1,0,0},
    {0,0,1,1,0,1,0,1,1,1,1,1,1,0,0},
    {0,0,1,1,0,1,0,1,0,1,1,1,1,1,0},
    {0,0,0,1,0,1,1,1,1,1,1,1,1,0,0},
    {0,0,0,1,0,1,1,1,0,1,1,1,1,1,0},
    {0,0,0,1,0,0,1,1,1,1,1,1,1,1,0},
    {0,0,0,1,0,0,1,0,1,1,1,1,1,1,1}
  }};
  return inc;
}
// clang-format on

Int linear(const UDPoint& x, const std::vector<Term>& form) {
  Int s = 0;
  for (const auto& t : form) s += t.coef * x[t.var];
  return s;
}

}  // namespace

std::vector<int> f0_holding(const UDPoint& x) {
  std::vector<int> out;
  const auto& blocks = f0_blocks();
  for (int j = 0; j < 14; ++j) {
    bool ok = true;
    for (const auto& q : blocks[j]) {
      const Int l = linear(x, q.lhs), r = linear(x, q.rhs);
      if (q.strict ? !(l > r) : !(l >= r)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(j + 1);
  }
  return out;
}

int f0_select(const UDPoint& x) {
  auto hs = f0_holding(x);
  if (hs.size() != 1)
    throw ConditionFault("F-breve conditions holding: " + std::to_string(hs.size()));
  return hs.front();
}

UDPoint f0_table(const UDPoint& x) {
  const auto& inc = f0_increments()[f0_select(x) - 1];
  UDPoint y = x;
  for (int i = 0; i < kUdDim; ++i) y[i] += inc[i];
  return y;
}

UDPoint omega(const Element& b) {
  auto row = [&](int i, int to) {
    Int s = 0;
    for (int j = i; j <= to; ++j) s += b(i, j);
    return s;
  };
  UDPoint x{};
  x[X11] = b(1, 1);
  x[X21] = b(2, 2);
  x[X22] = row(1, 2);
  x[X31] = b(3, 3);
  x[X32] = row(2, 3);
  x[X33] = row(1, 3);
  x[X41] = b(4, 4);
  x[X42] = row(3, 4);
  x[X43] = row(2, 4);
  x[X44] = row(1, 4);
  x[X51] = row(4, 5);
  x[X52] = row(2, 5);
  x[X61] = b(5, 5);
  x[X62] = row(3, 5);
  x[X63] = row(1, 5);
  return x;
}

Element omega_inv(const UDPoint& x) {
  Element b;
  const Int rows[6][6] = {
      {x[X11], x[X22] - x[X11], x[X33] - x[X22], x[X44] - x[X33], x[X63] - x[X44], -x[X63]},
      {x[X21], x[X32] - x[X21], x[X43] - x[X32], x[X52] - x[X43], x[X63] - x[X52], -x[X63]},
      {x[X31], x[X42] - x[X31], x[X62] - x[X42], x[X52] - x[X62], x[X44] - x[X52], -x[X44]},
      {x[X41], x[X51] - x[X41], x[X62] - x[X51], x[X43] - x[X62], x[X33] - x[X43], -x[X33]},
      {x[X61], x[X51] - x[X61], x[X42] - x[X51], x[X32] - x[X42], x[X22] - x[X32], -x[X22]},
      {x[X61], x[X41] - x[X61], x[X31] - x[X41], x[X21] - x[X31], x[X11] - x[X21], -x[X11]},
  };
  for (int i = 1; i <= 6; ++i)
    for (int d = 0; d < 6; ++d) b(i, i + d) = rows[i - 1][d];
  return b;
}

namespace {

struct FormulaTable {
  std::vector<std::string> slots;
  std::array<std::array<trop::TropExpr, kUdDim>, kNodes> exprs;
  std::vector<std::vector<trop::Compiled>> compiled;

  FormulaTable() : slots(ud_variable_names()) {
    slots.push_back("c");
    trop::Macros macros;
    for (const auto& [name, text] : detail::definitions())
      macros[name] = trop::parse_tropical(text, macros);
    compiled.resize(kNodes);
    for (int k = 0; k < kNodes; ++k)
      for (int i = 0; i < kUdDim; ++i) {
        exprs[k][i] = trop::parse_tropical(detail::updates()[k][i], macros);
        compiled[k].emplace_back(exprs[k][i], slots);
      }
  }
};

const FormulaTable& formulas() {
  static const FormulaTable table;
  return table;
}

}  // namespace

const std::vector<std::string>& ec_formula_slots() { return formulas().slots; }

const trop::TropExpr& ec_formula(int k, int coord) {
  check_node(k);
  return formulas().exprs.at(k).at(static_cast<std::size_t>(coord));
}

const trop::Compiled& ec_formula_compiled(int k, int coord) {
  check_node(k);
  return formulas().compiled.at(k).at(static_cast<std::size_t>(coord));
}

UDPoint apply_ec_compiled(const UDPoint& x, int k, Int c) {
  check_node(k);
  std::array<Int, kUdDim + 1> v{};
  std::copy(x.begin(), x.end(), v.begin());
  v[kUdDim] = c;
  UDPoint y{};
  for (int i = 0; i < kUdDim; ++i) y[i] = formulas().compiled[k][i](v);
  return y;
}

}  // namespace d6
