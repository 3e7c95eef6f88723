#include "d6spin/element.hpp"

#include <functional>

namespace d6 {

Element Element::diag(Int l) {
  Element e;
  for (int i = 1; i <= kRows; ++i) e(i, i) = l;
  return e;
}

Int Element::at(int i, int j) const {
  if (i < 1 || i > kRows || j < i || j > i + 5)
    throw std::out_of_range("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not a coordinate");
  return (*this)(i, j);
}

bool Element::is_zero() const {
  for (Int x : v_)
    if (x != 0) return false;
  return true;
}

Element Element::operator+(const Element& o) const {
  Element r;
  for (int s = 0; s < kSize; ++s) r.v_[s] = v_[s] + o.v_[s];
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r;
  for (int s = 0; s < kSize; ++s) r.v_[s] = v_[s] - o.v_[s];
  return r;
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Int x : e.data()) {
    h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Level Level::finite(Int l) {
  if (l < 0) throw std::invalid_argument("level must be nonnegative");
  return Level(l);
}

Int Level::value() const {
  if (!l_) throw std::logic_error("the infinite level has no numeric value");
  return *l_;
}

std::string Level::to_string() const { return l_ ? std::to_string(*l_) : "inf"; }

Level Level::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinity();
  std::size_t pos = 0;
  long long l = 0;
  try {
    l = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad level '" + text + "'");
  }
  if (pos != text.size()) throw std::invalid_argument("bad level '" + text + "'");
  return finite(l);
}

std::string Violation::describe() const {
  const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  switch (kind) {
    case Kind::RowSum:
      return "row-sum(" + std::to_string(a) + ")";
    case Kind::Nonnegativity:
      return "nonnegativity" + pair;
    case Kind::Equality:
      return "equality" + pair;
    case Kind::Inequality:
      return "inequality" + pair;
  }
  return "unknown";
}

namespace {

Int row_span(const Element& b, int i, int from, int to) {
  Int s = 0;
  for (int j = from; j <= to; ++j) s += b(i, j);
  return s;
}

}  // namespace

std::vector<Violation> validate(const Element& b, const Level& spec) {
  std::vector<Violation> out;
  const bool finite = !spec.is_infinite();
  const Int l = spec.offset();
  for (int i = 1; i <= 6; ++i) {
    if (row_span(b, i, i, i + 5) != l) out.push_back({Violation::Kind::RowSum, i, 0});
    if (finite)
      for (int j = i; j <= i + 5; ++j)
        if (b(i, j) < 0) out.push_back({Violation::Kind::Nonnegativity, i, j});
  }
  for (int i = 1; i <= 5; ++i)
    for (int t = 1; i + t <= 6; ++t) {
      Int lhs = row_span(b, i, i, 6 - t);
      Int rhs = row_span(b, i + t, i + t, 5 + t);
      if (lhs != rhs) out.push_back({Violation::Kind::Equality, i, t});
    }
  if (finite)
    for (int i = 1; i <= 5; ++i)
      for (int t = i; t <= 5; ++t)
        if (row_span(b, i, i, t) < row_span(b, i + 1, i + 1, t + 1))
          out.push_back({Violation::Kind::Inequality, i, t});
  return out;
}

}  // namespace d6
