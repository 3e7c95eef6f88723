#include "ud_formulas.hpp"

namespace d6::detail {

// Named subexpressions, in dependency order. K is the maximum of the fourteen
// terms that also make up epsilon_0.
const std::vector<std::pair<std::string, std::string>>& definitions() {
  static const std::vector<std::pair<std::string, std::string>> defs = {
      {"K",
       "max(x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, x2_2-x3_3+x4_1, "
       "x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, "
       "x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
       "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
       "x3_2+x3_1-x5_2)"},
      {"c2", "max(c+x2_2+x2_1, x3_2+x1_1)-max(x2_2+x2_1, x3_2+x1_1)"},
      {"c31",
       "max(c+x3_3+2*x3_2+x3_1, x2_2+x3_2+x3_1+x4_3, "
       "x2_2+x2_1+x4_3+x4_2)-max(x3_3+2*x3_2+x3_1, x2_2+x3_2+x3_1+x4_3, x2_2+x2_1+x4_3+x4_2)"},
      {"c32",
       "max(c+x3_3+2*x3_2+x3_1, c+x2_2+x3_2+x3_1+x4_3, "
       "x2_2+x2_1+x4_3+x4_2)-max(c+x3_3+2*x3_2+x3_1, x2_2+x3_2+x3_1+x4_3, "
       "x2_2+x2_1+x4_3+x4_2)"},
      {"c41",
       "max(c+x4_4+2*x4_3+2*x4_2+x4_1, x3_3+x4_3+2*x4_2+x4_1+x5_2, "
       "x3_3+x3_2+x4_2+x4_1+x5_2+x6_2, "
       "x3_3+x3_2+x3_1+x5_2+x5_1+x6_2)-max(x4_4+2*x4_3+2*x4_2+x4_1, "
       "x3_3+x4_3+2*x4_2+x4_1+x5_2, x3_3+x3_2+x4_2+x4_1+x5_2+x6_2, "
       "x3_3+x3_2+x3_1+x5_2+x5_1+x6_2)"},
      {"c42",
       "max(c+x4_4+2*x4_3+2*x4_2+x4_1, c+x3_3+x4_3+2*x4_2+x4_1+x5_2, "
       "x3_3+x3_2+x4_2+x4_1+x5_2+x6_2, "
       "x3_3+x3_2+x3_1+x5_2+x5_1+x6_2)-max(c+x4_4+2*x4_3+2*x4_2+x4_1, "
       "x3_3+x4_3+2*x4_2+x4_1+x5_2, x3_3+x3_2+x4_2+x4_1+x5_2+x6_2, "
       "x3_3+x3_2+x3_1+x5_2+x5_1+x6_2)"},
      {"c43",
       "max(c+x4_4+2*x4_3+2*x4_2+x4_1, c+x3_3+x4_3+2*x4_2+x4_1+x5_2, "
       "c+x3_3+x3_2+x4_2+x4_1+x5_2+x6_2, "
       "x3_3+x3_2+x3_1+x5_2+x5_1+x6_2)-max(c+x4_4+2*x4_3+2*x4_2+x4_1, "
       "c+x3_3+x4_3+2*x4_2+x4_1+x5_2, x3_3+x3_2+x4_2+x4_1+x5_2+x6_2, "
       "x3_3+x3_2+x3_1+x5_2+x5_1+x6_2)"},
      {"c5", "max(c+x5_2+x5_1, x4_3+x4_2)-max(x5_2+x5_1, x4_3+x4_2)"},
      {"c61",
       "max(c+x6_3+2*x6_2+x6_1, x4_4+x4_3+x6_2+x6_1, "
       "x4_4+x4_3+x4_2+x4_1)-max(x6_3+2*x6_2+x6_1, x4_4+x4_3+x6_2+x6_1, x4_4+x4_3+x4_2+x4_1)"},
      {"c62",
       "max(c+x6_3+2*x6_2+x6_1, c+x4_4+x4_3+x6_2+x6_1, "
       "x4_4+x4_3+x4_2+x4_1)-max(c+x6_3+2*x6_2+x6_1, x4_4+x4_3+x6_2+x6_1, "
       "x4_4+x4_3+x4_2+x4_1)"},
  };
  return defs;
}

const std::array<std::array<std::string_view, 15>, 7>& updates() {
  static const std::array<std::array<std::string_view, 15>, 7> table = {{
      {{// k = 0
        "-c+x6_3+max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, c+x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, c+x2_2+x2_1+x6_2-x4_4-x4_3, c+x2_2+x2_1-x3_2-x4_4+x4_2, "
        "c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, c+x2_2+x3_1-x4_4, c+x2_2-x3_3+x3_1+x4_3-x5_2, "
        "c+x3_2+x3_1-x5_2)-K",
        "-c+x4_4+max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, c+x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, c+x2_2-x3_3+x3_1+x4_3-x5_2, "
        "c+x3_2+x3_1-x5_2)-K",
        "-c+x3_3+max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, "
        "x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "c+x3_2+x3_1-x5_2)-K",
        "x2_2-c",
        "-c+x5_2+max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, c+x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2)-K",
        "-c+x4_3+max(c+x6_1+max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, "
        "c+x2_2-x3_3+x3_1-x4_2+x5_1, c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, "
        "c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, "
        "c+x2_2+x2_1-x3_2-x4_4+x4_2, c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, c+x2_2+x3_1-x4_4, "
        "c+x2_2-x3_3+x3_1+x4_3-x5_2, c+x3_2+x3_1-x5_2), c+x2_2+x2_1-x3_3-x3_2+x5_1+K, "
        "c+x2_2-x3_3+x3_1-x4_2+x5_1+K, c+x2_2-x3_3+x4_1+K, c+x3_2+x3_1-x4_3-x4_2+x5_1+K, "
        "c+x3_2-x4_3+x4_1+max(x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, "
        "x2_2-x3_3+x4_1, x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, c+x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2), c+x4_2+x4_1-x6_2+max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, "
        "c+x2_2-x3_3+x3_1-x4_2+x5_1, c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, "
        "c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, "
        "c+x2_2+x2_1-x3_2-x4_4+x4_2, c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, c+x2_2+x3_1-x4_4, "
        "c+x2_2-x3_3+x3_1+x4_3-x5_2, c+x3_2+x3_1-x5_2), x2_2+x2_1-x6_3+max(c+x6_1, "
        "x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, x2_2-x3_3+x4_1, "
        "x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, "
        "x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2), x2_2+x2_1+x6_2-x4_4-x4_3+max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, "
        "x2_2-x3_3+x3_1-x4_2+x5_1, x2_2-x3_3+x4_1, x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, "
        "x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2), c+x2_2+x2_1-x3_2-x4_4+x4_2+K, "
        "c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2+K, c+x2_2+x3_1-x4_4+K, "
        "c+x2_2-x3_3+x3_1+x4_3-x5_2+K, c+x3_2+x3_1-x5_2+K)-K-max(c+x6_1, "
        "c+x2_2+x2_1-x3_3-x3_2+x5_1, c+x2_2-x3_3+x3_1-x4_2+x5_1, c+x2_2-x3_3+x4_1, "
        "c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, "
        "x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, c+x2_2-x3_3+x3_1+x4_3-x5_2, "
        "c+x3_2+x3_1-x5_2)",
        "-c+x3_2+max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, c+x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, c+x2_2+x3_1-x4_4, c+x2_2-x3_3+x3_1+x4_3-x5_2, "
        "c+x3_2+x3_1-x5_2)-max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, "
        "x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "c+x3_2+x3_1-x5_2)",
        "x6_2+max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, "
        "x2_2-x3_3+x4_1, x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2)-max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, c+x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, c+x2_2+x2_1+x6_2-x4_4-x4_3, c+x2_2+x2_1-x3_2-x4_4+x4_2, "
        "c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, c+x2_2+x3_1-x4_4, c+x2_2-x3_3+x3_1+x4_3-x5_2, "
        "c+x3_2+x3_1-x5_2)",
        "x4_2+K+max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2)-max(c+x6_1+max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, "
        "c+x2_2-x3_3+x3_1-x4_2+x5_1, c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, "
        "c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, "
        "c+x2_2+x2_1-x3_2-x4_4+x4_2, c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, c+x2_2+x3_1-x4_4, "
        "c+x2_2-x3_3+x3_1+x4_3-x5_2, c+x3_2+x3_1-x5_2), c+x2_2+x2_1-x3_3-x3_2+x5_1+K, "
        "c+x2_2-x3_3+x3_1-x4_2+x5_1+K, c+x2_2-x3_3+x4_1+K, c+x3_2+x3_1-x4_3-x4_2+x5_1+K, "
        "c+x3_2-x4_3+x4_1+max(x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, "
        "x2_2-x3_3+x4_1, x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, c+x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2), c+x4_2+x4_1-x6_2+max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, "
        "c+x2_2-x3_3+x3_1-x4_2+x5_1, c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, "
        "c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, "
        "c+x2_2+x2_1-x3_2-x4_4+x4_2, c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, c+x2_2+x3_1-x4_4, "
        "c+x2_2-x3_3+x3_1+x4_3-x5_2, c+x3_2+x3_1-x5_2), x2_2+x2_1-x6_3+max(c+x6_1, "
        "x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, x2_2-x3_3+x4_1, "
        "x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, "
        "x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2), x2_2+x2_1+x6_2-x4_4-x4_3+max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, "
        "x2_2-x3_3+x3_1-x4_2+x5_1, x2_2-x3_3+x4_1, x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, "
        "x4_2+x4_1-x6_2, x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2), c+x2_2+x2_1-x3_2-x4_4+x4_2+K, "
        "c+x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2+K, c+x2_2+x3_1-x4_4+K, "
        "c+x2_2-x3_3+x3_1+x4_3-x5_2+K, c+x3_2+x3_1-x5_2+K)",
        "x5_1+K-max(c+x6_1, c+x2_2+x2_1-x3_3-x3_2+x5_1, c+x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2)",
        "x1_1-c", "x2_1-c",
        "x3_1+K-max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, c+x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, c+x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, c+x2_2+x3_1-x4_4, c+x2_2-x3_3+x3_1+x4_3-x5_2, "
        "c+x3_2+x3_1-x5_2)",
        "x4_1+K-max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, "
        "c+x2_2-x3_3+x4_1, x3_2+x3_1-x4_3-x4_2+x5_1, c+x3_2-x4_3+x4_1, c+x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2)",
        "x6_1+K-max(c+x6_1, x2_2+x2_1-x3_3-x3_2+x5_1, x2_2-x3_3+x3_1-x4_2+x5_1, "
        "x2_2-x3_3+x4_1, x3_2+x3_1-x4_3-x4_2+x5_1, x3_2-x4_3+x4_1, x4_2+x4_1-x6_2, "
        "x2_2+x2_1-x6_3, x2_2+x2_1+x6_2-x4_4-x4_3, x2_2+x2_1-x3_2-x4_4+x4_2, "
        "x2_2+x2_1-x3_3-x3_2+x4_3+x4_2-x5_2, x2_2+x3_1-x4_4, x2_2-x3_3+x3_1+x4_3-x5_2, "
        "x3_2+x3_1-x5_2)"}},
      {{// k = 1
        "x6_3", "x4_4", "x3_3", "x2_2", "x5_2", "x4_3", "x3_2", "x6_2", "x4_2", "x5_1", "x1_1+c",
        "x2_1", "x3_1", "x4_1", "x6_1"}},
      {{// k = 2
        "x6_3", "x4_4", "x3_3", "x2_2+c2", "x5_2", "x4_3", "x3_2", "x6_2", "x4_2", "x5_1", "x1_1",
        "x2_1+c-c2", "x3_1", "x4_1", "x6_1"}},
      {{// k = 3
        "x6_3", "x4_4", "x3_3+c31", "x2_2", "x5_2", "x4_3", "x3_2+c32", "x6_2", "x4_2", "x5_1",
        "x1_1", "x2_1", "x3_1+c-c31-c32", "x4_1", "x6_1"}},
      {{// k = 4
        "x6_3", "x4_4+c41", "x3_3", "x2_2", "x5_2", "x4_3+c42", "x3_2", "x6_2", "x4_2+c43", "x5_1",
        "x1_1", "x2_1", "x3_1", "x4_1+c-c41-c42-c43", "x6_1"}},
      {{// k = 5
        "x6_3", "x4_4", "x3_3", "x2_2", "x5_2+c5", "x4_3", "x3_2", "x6_2", "x4_2", "x5_1+c-c5",
        "x1_1", "x2_1", "x3_1", "x4_1", "x6_1"}},
      {{// k = 6
        "x6_3+c61", "x4_4", "x3_3", "x2_2", "x5_2", "x4_3", "x3_2", "x6_2+c62", "x4_2", "x5_1",
        "x1_1", "x2_1", "x3_1", "x4_1", "x6_1+c-c61-c62"}},
  }};
  return table;
}

}  // namespace d6::detail
