#include "d6spin/tropical.hpp"

#include <algorithm>
#include <cctype>

namespace d6::trop {

namespace {

using RK = RatNode::Kind;
using TK = TropNode::Kind;

RatExpr rat_node(RK kind, RatExpr a, RatExpr b) {
  return std::make_shared<const RatNode>(RatNode{kind, {}, 0, std::move(a), std::move(b)});
}

TropExpr trop_node(TK kind, TropExpr a, TropExpr b) {
  return std::make_shared<const TropNode>(TropNode{kind, {}, 0, std::move(a), std::move(b)});
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : s_(text) {}

  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool at_end() {
    skip();
    return p_ >= s_.size();
  }
  char peek() {
    skip();
    return p_ < s_.size() ? s_[p_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool ident_start() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }
  bool digit_start() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::string ident() {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_'))
      ++p_;
    return std::string(s_.substr(b, p_ - b));
  }
  Int number() {
    skip();
    std::size_t b = p_;
    Int v = 0;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
      v = v * 10 + (s_[p_] - '0');
      ++p_;
      if (v > (Int{1} << 40)) fail("integer literal too large", b);
    }
    return v;
  }
  std::size_t pos() {
    skip();
    return p_;
  }
  [[noreturn]] void fail(const std::string& what) { fail(what, pos()); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) { throw SyntaxError(what, at); }

 private:
  std::string_view s_;
  std::size_t p_ = 0;
};

class RatParser {
 public:
  explicit RatParser(std::string_view text) : lx_(text) {}

  RatExpr parse() {
    RatExpr e = expr();
    if (!lx_.at_end()) {
      if (lx_.peek() == '-') lx_.fail("subtraction is not allowed in positive expressions");
      lx_.fail(std::string("unexpected '") + lx_.peek() + "'");
    }
    return e;
  }

 private:
  RatExpr expr() {
    RatExpr e = term();
    while (lx_.accept('+')) e = rat_sum(e, term());
    return e;
  }
  RatExpr term() {
    RatExpr e = factor();
    for (;;) {
      if (lx_.accept('*'))
        e = rat_prod(e, factor());
      else if (lx_.accept('/'))
        e = rat_quot(e, factor());
      else
        return e;
    }
  }
  RatExpr factor() {
    if (lx_.accept('(')) {
      RatExpr e = expr();
      lx_.expect(')');
      return e;
    }
    if (lx_.ident_start()) return rat_var(lx_.ident());
    if (lx_.digit_start()) {
      std::size_t at = lx_.pos();
      Int v = lx_.number();
      if (v < 1) lx_.fail("literals must be positive", at);
      return rat_lit(v);
    }
    if (lx_.peek() == '-') lx_.fail("subtraction is not allowed in positive expressions");
    lx_.fail("expected a variable, a positive integer or '('");
  }

  Lexer lx_;
};

class TropParser {
 public:
  TropParser(std::string_view text, const Macros& macros) : lx_(text), macros_(macros) {}

  TropExpr parse() {
    TropExpr e = expr();
    if (!lx_.at_end()) lx_.fail(std::string("unexpected '") + lx_.peek() + "'");
    return e;
  }

 private:
  TropExpr expr() {
    TropExpr e = term();
    for (;;) {
      if (lx_.accept('+'))
        e = plus(e, term());
      else if (lx_.accept('-'))
        e = minus(e, term());
      else
        return e;
    }
  }
  TropExpr term() {
    if (lx_.accept('-')) return neg(term());
    if (lx_.digit_start()) {
      Int v = lx_.number();
      if (!lx_.accept('*')) return lit(v);
      TropExpr t = term();
      if (v == 0) return lit(0);
      TropExpr e = t;
      for (Int i = 1; i < v; ++i) e = plus(e, t);
      return e;
    }
    return atom();
  }
  TropExpr atom() {
    if (lx_.accept('(')) {
      TropExpr e = expr();
      lx_.expect(')');
      return e;
    }
    if (lx_.ident_start()) {
      std::size_t at = lx_.pos();
      std::string name = lx_.ident();
      if (name == "max") {
        lx_.expect('(');
        TropExpr e = expr();
        while (lx_.accept(',')) e = maximum(e, expr());
        lx_.expect(')');
        return e;
      }
      if (auto it = macros_.find(name); it != macros_.end()) return it->second;
      if (lx_.peek() == '(') lx_.fail("unknown function '" + name + "'", at);
      return var(std::move(name));
    }
    lx_.fail("expected a variable, an integer, 'max' or '('");
  }

  Lexer lx_;
  const Macros& macros_;
};

Int lookup(const Assignment& a, const std::string& name) {
  auto it = a.find(name);
  if (it == a.end()) throw UnboundVariable(name);
  return it->second;
}

void collect(const TropExpr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == TK::Var) out.insert(e->name);
  collect(e->lhs, out);
  collect(e->rhs, out);
}

void collect(const RatExpr& e, std::set<std::string>& out) {
  if (!e) return;
  if (e->kind == RK::Var) out.insert(e->name);
  collect(e->lhs, out);
  collect(e->rhs, out);
}

}  // namespace

SyntaxError::SyntaxError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}

UnboundVariable::UnboundVariable(const std::string& name)
    : std::runtime_error("unbound variable '" + name + "'"), name_(name) {}

RatExpr rat_var(std::string name) {
  return std::make_shared<const RatNode>(RatNode{RK::Var, std::move(name), 0, nullptr, nullptr});
}

RatExpr rat_lit(Int value) {
  if (value < 1) throw std::invalid_argument("rational literals must be positive");
  return std::make_shared<const RatNode>(RatNode{RK::Lit, {}, value, nullptr, nullptr});
}

RatExpr rat_prod(RatExpr a, RatExpr b) { return rat_node(RK::Prod, std::move(a), std::move(b)); }
RatExpr rat_quot(RatExpr a, RatExpr b) { return rat_node(RK::Quot, std::move(a), std::move(b)); }
RatExpr rat_sum(RatExpr a, RatExpr b) { return rat_node(RK::Sum, std::move(a), std::move(b)); }

TropExpr var(std::string name) {
  return std::make_shared<const TropNode>(TropNode{TK::Var, std::move(name), 0, nullptr, nullptr});
}

TropExpr lit(Int value) {
  return std::make_shared<const TropNode>(TropNode{TK::Lit, {}, value, nullptr, nullptr});
}

TropExpr plus(TropExpr a, TropExpr b) { return trop_node(TK::Plus, std::move(a), std::move(b)); }
TropExpr minus(TropExpr a, TropExpr b) { return trop_node(TK::Minus, std::move(a), std::move(b)); }
TropExpr neg(TropExpr a) { return trop_node(TK::Neg, std::move(a), nullptr); }
TropExpr maximum(TropExpr a, TropExpr b) { return trop_node(TK::Max, std::move(a), std::move(b)); }

RatExpr parse_rational(std::string_view text) { return RatParser(text).parse(); }

TropExpr parse_tropical(std::string_view text, const Macros& macros) {
  return TropParser(text, macros).parse();
}

TropExpr tropicalize(const RatExpr& e) {
  switch (e->kind) {
    case RK::Var:
      return var(e->name);
    case RK::Lit:
      return lit(0);
    case RK::Prod:
      return plus(tropicalize(e->lhs), tropicalize(e->rhs));
    case RK::Quot:
      return minus(tropicalize(e->lhs), tropicalize(e->rhs));
    case RK::Sum:
      return maximum(tropicalize(e->lhs), tropicalize(e->rhs));
  }
  throw std::logic_error("bad rational node");
}

Int tropical_fold(const RatExpr& e, const Assignment& a) {
  switch (e->kind) {
    case RK::Var:
      return lookup(a, e->name);
    case RK::Lit:
      return 0;
    case RK::Prod:
      return tropical_fold(e->lhs, a) + tropical_fold(e->rhs, a);
    case RK::Quot:
      return tropical_fold(e->lhs, a) - tropical_fold(e->rhs, a);
    case RK::Sum:
      return std::max(tropical_fold(e->lhs, a), tropical_fold(e->rhs, a));
  }
  throw std::logic_error("bad rational node");
}

Int eval(const TropExpr& e, const Assignment& a) {
  switch (e->kind) {
    case TK::Var:
      return lookup(a, e->name);
    case TK::Lit:
      return e->value;
    case TK::Plus:
      return eval(e->lhs, a) + eval(e->rhs, a);
    case TK::Minus:
      return eval(e->lhs, a) - eval(e->rhs, a);
    case TK::Neg:
      return -eval(e->lhs, a);
    case TK::Max:
      return std::max(eval(e->lhs, a), eval(e->rhs, a));
  }
  throw std::logic_error("bad tropical node");
}

std::string to_string(const TropExpr& e) {
  switch (e->kind) {
    case TK::Var:
      return e->name;
    case TK::Lit:
      return e->value < 0 ? "(" + std::to_string(e->value) + ")" : std::to_string(e->value);
    case TK::Plus:
      return "(" + to_string(e->lhs) + "+" + to_string(e->rhs) + ")";
    case TK::Minus:
      return "(" + to_string(e->lhs) + "-" + to_string(e->rhs) + ")";
    case TK::Neg:
      return "(-" + to_string(e->lhs) + ")";
    case TK::Max:
      return "max(" + to_string(e->lhs) + "," + to_string(e->rhs) + ")";
  }
  throw std::logic_error("bad tropical node");
}

std::string to_string(const RatExpr& e) {
  switch (e->kind) {
    case RK::Var:
      return e->name;
    case RK::Lit:
      return std::to_string(e->value);
    case RK::Prod:
      return "(" + to_string(e->lhs) + "*" + to_string(e->rhs) + ")";
    case RK::Quot:
      return "(" + to_string(e->lhs) + "/" + to_string(e->rhs) + ")";
    case RK::Sum:
      return "(" + to_string(e->lhs) + "+" + to_string(e->rhs) + ")";
  }
  throw std::logic_error("bad rational node");
}

std::set<std::string> free_variables(const TropExpr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

std::set<std::string> free_variables(const RatExpr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

bool structurally_equal(const TropExpr& a, const TropExpr& b) {
  if (!a || !b) return !a && !b;
  if (a.get() == b.get()) return true;
  return a->kind == b->kind && a->name == b->name && a->value == b->value &&
         structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

Compiled::Compiled(const TropExpr& e, const std::vector<std::string>& slots) {
  std::size_t depth = 0;
  auto emit = [&](auto&& self, const TropExpr& n) -> void {
    switch (n->kind) {
      case TK::Var: {
        auto it = std::find(slots.begin(), slots.end(), n->name);
        if (it == slots.end()) throw UnboundVariable(n->name);
        code_.push_back({OpCode::Slot, it - slots.begin()});
        depth_ = std::max(depth_, ++depth);
        return;
      }
      case TK::Lit:
        code_.push_back({OpCode::Lit, n->value});
        depth_ = std::max(depth_, ++depth);
        return;
      case TK::Neg:
        self(self, n->lhs);
        code_.push_back({OpCode::Neg, 0});
        return;
      default:
        self(self, n->lhs);
        self(self, n->rhs);
        --depth;
        code_.push_back({n->kind == TK::Plus    ? OpCode::Plus
                         : n->kind == TK::Minus ? OpCode::Minus
                                                : OpCode::Max,
                         0});
    }
  };
  emit(emit, e);
}

Int Compiled::operator()(std::span<const Int> values) const {
  std::vector<Int> stack(depth_);
  std::size_t top = 0;
  for (const auto& in : code_) {
    switch (in.op) {
      case OpCode::Slot:
        stack[top++] = values[static_cast<std::size_t>(in.arg)];
        break;
      case OpCode::Lit:
        stack[top++] = in.arg;
        break;
      case OpCode::Neg:
        stack[top - 1] = -stack[top - 1];
        break;
      case OpCode::Plus:
        --top;
        stack[top - 1] += stack[top];
        break;
      case OpCode::Minus:
        --top;
        stack[top - 1] -= stack[top];
        break;
      case OpCode::Max:
        --top;
        stack[top - 1] = std::max(stack[top - 1], stack[top]);
        break;
    }
  }
  return stack[0];
}

EquivResult check_equiv(const std::vector<std::string>& vars, const SlotFunction& f,
                        const SlotFunction& g, Box box, std::size_t trials, std::uint64_t seed) {
  EquivResult res;
  std::vector<Int> x(vars.size());
  auto probe = [&]() {
    ++res.samples;
    if (f(x) == g(x)) return true;
    res.equal = false;
    for (std::size_t i = 0; i < vars.size(); ++i) res.counterexample[vars[i]] = x[i];
    return false;
  };
  for (Int fill : {Int{0}, box.lo, box.hi}) {
    std::fill(x.begin(), x.end(), fill);
    if (!probe()) return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> dist(box.lo, box.hi);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& v : x) v = dist(rng);
    if (!probe()) return res;
  }
  return res;
}

EquivResult check_equiv(const TropExpr& e1, const TropExpr& e2, Box box, std::size_t trials,
                        std::uint64_t seed) {
  std::set<std::string> names = free_variables(e1);
  names.merge(free_variables(e2));
  std::vector<std::string> vars(names.begin(), names.end());
  Compiled c1(e1, vars), c2(e2, vars);
  return check_equiv(
      vars, [&](std::span<const Int> x) { return c1(x); },
      [&](std::span<const Int> x) { return c2(x); }, box, trials, seed);
}

RatExpr random_rational(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (depth <= 1 || pick(rng) < 2) {
    if (vars.empty() || pick(rng) == 0)
      return rat_lit(std::uniform_int_distribution<Int>(1, 9)(rng));
    return rat_var(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
  }
  RatExpr a = random_rational(rng, depth - 1, vars);
  RatExpr b = random_rational(rng, depth - 1, vars);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      return rat_prod(a, b);
    case 1:
      return rat_quot(a, b);
    default:
      return rat_sum(a, b);
  }
}

}  // namespace d6::trop
