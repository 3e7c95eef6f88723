// Coordinatized elements (b_ij), 1 <= i <= 6, i <= j <= i+5, of the crystals
// B^{6,l} and B^{6,inf}, together with membership validation.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "d6spin/lattice.hpp"

namespace d6 {

class Element {
 public:
  static constexpr int kRows = 6;
  static constexpr int kSize = 36;

  Element() = default;
  explicit Element(const std::array<Int, kSize>& row_major) : v_(row_major) {}

  static Element diag(Int l);

  // Entry b_ij; j is the absolute column index, i <= j <= i+5.
  Int operator()(int i, int j) const { return v_[slot(i, j)]; }
  Int& operator()(int i, int j) { return v_[slot(i, j)]; }
  Int at(int i, int j) const;

  const std::array<Int, kSize>& data() const { return v_; }
  bool is_zero() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;

  auto operator<=>(const Element&) const = default;

 private:
  static constexpr std::size_t slot(int i, int j) {
    return static_cast<std::size_t>((i - 1) * kRows + (j - i));
  }
  std::array<Int, kSize> v_{};
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

class Level {
 public:
  static Level finite(Int l);
  static Level infinity() { return Level(); }

  bool is_infinite() const { return !l_.has_value(); }
  // The finite level; throws std::logic_error for the infinite level.
  Int value() const;
  // The additive offset in epsilon_0, epsilon_6, phi_0, phi_6: l or 0.
  Int offset() const { return l_.value_or(0); }
  std::string to_string() const;
  static Level parse(const std::string& text);

  bool operator==(const Level&) const = default;

 private:
  Level() = default;
  explicit Level(Int l) : l_(l) {}
  std::optional<Int> l_;
};

struct Violation {
  enum class Kind { RowSum, Nonnegativity, Equality, Inequality };
  Kind kind;
  int a;  // row i
  int b;  // column j for nonnegativity, offset t for (in)equalities
  std::string describe() const;
};

std::vector<Violation> validate(const Element& b, const Level& spec);
inline bool is_valid(const Element& b, const Level& spec) { return validate(b, spec).empty(); }

}  // namespace d6
