#include "d6spin/lattice.hpp"

namespace d6 {

const CartanData& cartan() {
  static const CartanData data = [] {
    CartanData d{};
    for (int k = 0; k < kNodes; ++k) d.a[k][k] = 2;
    auto link = [&](int i, int j) { d.a[i][j] = d.a[j][i] = -1; };
    for (int j = 1; j <= 4; ++j) link(j, j + 1);
    link(0, 2);
    link(4, 6);
    d.cvee = {1, 1, 2, 2, 2, 1, 1};
    d.dcoef = {1, 1, 2, 2, 2, 1, 1};
    return d;
  }();
  return data;
}

void check_node(int k) {
  if (k < 0 || k >= kNodes)
    throw std::out_of_range("node index " + std::to_string(k) + " outside 0..6");
}

int cartan_entry(int j, int k) {
  check_node(j);
  check_node(k);
  return cartan().a[j][k];
}

Int level_of(const Weight& w) {
  Int s = 0;
  for (int k = 0; k < kNodes; ++k) s += cartan().cvee[k] * w[k];
  return s;
}

Weight fundamental_weight(int k) {
  check_node(k);
  Weight w{};
  w[k] = 1;
  return w;
}

Weight operator+(const Weight& u, const Weight& v) {
  Weight r{};
  for (int k = 0; k < kNodes; ++k) r[k] = u[k] + v[k];
  return r;
}

Weight operator-(const Weight& u, const Weight& v) {
  Weight r{};
  for (int k = 0; k < kNodes; ++k) r[k] = u[k] - v[k];
  return r;
}

Weight operator-(const Weight& u) { return Weight{} - u; }

}  // namespace d6
