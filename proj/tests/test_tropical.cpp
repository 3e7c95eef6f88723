#include <doctest.h>

#include <random>

#include "d6spin/tropical.hpp"

using namespace d6;
using namespace d6::trop;

TEST_CASE("rational grammar") {
  CHECK(to_string(parse_rational("x*y/z + w")) == "(((x*y)/z)+w)");
  CHECK(to_string(parse_rational("(x+y)/x")) == "((x+y)/x)");
  CHECK(to_string(parse_rational("a+b+c")) == "((a+b)+c)");
  CHECK(to_string(parse_rational("a/b/c")) == "((a/b)/c)");
  CHECK(to_string(parse_rational(" x_1 * 3 ")) == "(x_1*3)");
  CHECK_THROWS_AS(parse_rational("x - y"), SyntaxError);
  CHECK_THROWS_AS(parse_rational("0*x"), SyntaxError);
  CHECK_THROWS_AS(parse_rational("(x+y"), SyntaxError);
  CHECK_THROWS_AS(parse_rational(""), SyntaxError);
  try {
    parse_rational("x + y )");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("tropicalize") {
  const TropExpr t = tropicalize(parse_rational("x*y/z + w"));
  CHECK(to_string(t) == "max(((x+y)-z),w)");
  CHECK(to_string(tropicalize(parse_rational("x"))) == "x");
  const TropExpr lit = tropicalize(parse_rational("2*x + y"));
  CHECK(to_string(lit) == "max((0+x),y)");
  CHECK(check_equiv(lit, parse_tropical("max(x, y)"), Box{}, 500).equal);
}

TEST_CASE("evaluation") {
  const TropExpr t = tropicalize(parse_rational("x*y/z + w"));
  CHECK(eval(t, {{"x", 1}, {"y", 2}, {"z", 0}, {"w", 5}}) == 5);
  CHECK(eval(parse_tropical("max(x, y)"), {{"x", 0}, {"y", 0}}) == 0);
  CHECK(eval(parse_tropical("x - y"), {{"x", 3}, {"y", 7}}) == -4);
  CHECK(eval(parse_tropical("-x + 3*y"), {{"x", 3}, {"y", 2}}) == 3);
  CHECK(eval(parse_tropical("max(a, b, c)"), {{"a", 1}, {"b", 9}, {"c", 4}}) == 9);
  try {
    eval(parse_tropical("x + q"), {{"x", 1}});
    FAIL("expected an unbound variable");
  } catch (const UnboundVariable& e) {
    CHECK(e.name() == "q");
  }
}

TEST_CASE("macros and free variables") {
  Macros m;
  m["K"] = parse_tropical("max(a, b)");
  const TropExpr e = parse_tropical("K - a", m);
  CHECK(free_variables(e) == std::set<std::string>{"a", "b"});
  CHECK(structurally_equal(e, parse_tropical("max(a,b) - a")));
  CHECK_FALSE(structurally_equal(e, parse_tropical("max(b,a) - a")));
}

TEST_CASE("equivalence checking") {
  CHECK(check_equiv(parse_tropical("max(x,y)"), parse_tropical("max(y,x)"), Box{}, 1000).equal);
  const auto r = check_equiv(parse_tropical("x"), parse_tropical("x+1"), Box{}, 1000);
  CHECK_FALSE(r.equal);
  CHECK(r.counterexample == Assignment{{"x", 0}});
  const auto corner = check_equiv(parse_tropical("max(x, 0)"), parse_tropical("x"), Box{}, 0);
  CHECK_FALSE(corner.equal);
  CHECK(corner.counterexample == Assignment{{"x", -50}});
  const auto wider =
      check_equiv(parse_tropical("x"), parse_tropical("x + y - y + z - z"), Box{}, 50);
  CHECK(wider.equal);
}

TEST_CASE("sampled algebraic laws") {
  std::mt19937_64 rng(21);
  const std::vector<std::string> vars = {"a", "b", "c"};
  std::uniform_int_distribution<Int> v(-40, 40);
  for (int n = 0; n < 300; ++n) {
    const TropExpr e = tropicalize(random_rational(rng, 5, vars));
    const TropExpr f = tropicalize(random_rational(rng, 5, vars));
    const TropExpr g = tropicalize(random_rational(rng, 4, vars));
    Assignment a;
    for (const auto& name : vars) a[name] = v(rng);
    CHECK(eval(maximum(e, e), a) == eval(e, a));
    CHECK(eval(plus(e, f), a) == eval(plus(f, e), a));
    CHECK(eval(plus(plus(e, f), g), a) == eval(plus(e, plus(f, g)), a));

    const Compiled ce(e, vars);
    const std::vector<Int> slots = {a["a"], a["b"], a["c"]};
    CHECK(ce(slots) == eval(e, a));

    const RatExpr r = random_rational(rng, 6, vars);
    CHECK(eval(tropicalize(r), a) == tropical_fold(r, a));

    const auto res = check_equiv(e, f, Box{-10, 10}, 50, n);
    if (!res.equal) CHECK(eval(e, res.counterexample) != eval(f, res.counterexample));
  }
}

TEST_CASE("printing round trips") {
  std::mt19937_64 rng(4);
  for (int n = 0; n < 100; ++n) {
    const RatExpr r = random_rational(rng, 6, {"u", "v"});
    CHECK(to_string(parse_rational(to_string(r))) == to_string(r));
    const TropExpr t = tropicalize(r);
    CHECK(structurally_equal(parse_tropical(to_string(t)), t));
  }
}
