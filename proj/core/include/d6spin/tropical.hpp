// Positive rational expressions, their max-plus ultra-discretizations, and
// sampling-based equivalence of piecewise-linear expressions.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "d6spin/lattice.hpp"

namespace d6::trop {

struct RatNode;
using RatExpr = std::shared_ptr<const RatNode>;

struct RatNode {
  enum class Kind { Var, Lit, Prod, Quot, Sum };
  Kind kind;
  std::string name;
  Int value = 0;
  RatExpr lhs, rhs;
};

RatExpr rat_var(std::string name);
RatExpr rat_lit(Int value);  // value >= 1
RatExpr rat_prod(RatExpr a, RatExpr b);
RatExpr rat_quot(RatExpr a, RatExpr b);
RatExpr rat_sum(RatExpr a, RatExpr b);

struct TropNode;
using TropExpr = std::shared_ptr<const TropNode>;

struct TropNode {
  enum class Kind { Var, Lit, Plus, Minus, Neg, Max };
  Kind kind;
  std::string name;
  Int value = 0;
  TropExpr lhs, rhs;
};

TropExpr var(std::string name);
TropExpr lit(Int value);
TropExpr plus(TropExpr a, TropExpr b);
TropExpr minus(TropExpr a, TropExpr b);
TropExpr neg(TropExpr a);
TropExpr maximum(TropExpr a, TropExpr b);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

using Assignment = std::map<std::string, Int, std::less<>>;
using Macros = std::map<std::string, TropExpr, std::less<>>;

// expr := term ('+' term)*; term := factor (('*'|'/') factor)*;
// factor := var | posint | '(' expr ')'.
RatExpr parse_rational(std::string_view text);

// expr := term (('+'|'-') term)*; term := '-' term | int '*' term | atom;
// atom := 'max' '(' expr (',' expr)* ')' | var | int | '(' expr ')'.
// A variable whose name is a key of `macros` is replaced by its expression.
TropExpr parse_tropical(std::string_view text, const Macros& macros = {});

// product -> plus, quotient -> minus, sum -> max, positive literal -> 0.
TropExpr tropicalize(const RatExpr& e);

// Evaluates e in the max-plus semiring directly, without building a TropExpr.
Int tropical_fold(const RatExpr& e, const Assignment& a);

Int eval(const TropExpr& e, const Assignment& a);

std::string to_string(const TropExpr& e);
std::string to_string(const RatExpr& e);

std::set<std::string> free_variables(const TropExpr& e);
std::set<std::string> free_variables(const RatExpr& e);

bool structurally_equal(const TropExpr& a, const TropExpr& b);

// A flattened stack program for fast repeated evaluation. Variables are bound
// by position in `slots`.
class Compiled {
 public:
  Compiled(const TropExpr& e, const std::vector<std::string>& slots);
  Int operator()(std::span<const Int> values) const;
  std::size_t size() const { return code_.size(); }

 private:
  enum class OpCode : std::uint8_t { Slot, Lit, Plus, Minus, Neg, Max };
  struct Instr {
    OpCode op;
    Int arg;
  };
  std::vector<Instr> code_;
  std::size_t depth_ = 0;
};

struct Box {
  Int lo = -50;
  Int hi = 50;
};

struct EquivResult {
  bool equal = true;
  Assignment counterexample;
  std::size_t samples = 0;
};

using SlotFunction = std::function<Int(std::span<const Int>)>;

// Compares two functions of the named variables on the all-zero assignment,
// the two constant corner assignments, and `trials` uniform samples.
EquivResult check_equiv(const std::vector<std::string>& vars, const SlotFunction& f,
                        const SlotFunction& g, Box box, std::size_t trials, std::uint64_t seed = 0);

EquivResult check_equiv(const TropExpr& e1, const TropExpr& e2, Box box, std::size_t trials,
                        std::uint64_t seed = 0);

// Random positive rational expression of depth at most `depth`.
RatExpr random_rational(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars);

}  // namespace d6::trop
