#include "d6spin/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "d6spin/coherent.hpp"
#include "d6spin/crystal.hpp"
#include "d6spin/explorer.hpp"
#include "d6spin/io.hpp"
#include "d6spin/tropical.hpp"
#include "d6spin/ud.hpp"

namespace d6 {

namespace {

using Clock = std::chrono::steady_clock;

// Counts checks and failures and keeps the first failure message.
class Tally {
 public:
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }

  void fail(const std::string& what) {
    expect(false, [&] { return what; });
  }

  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

CheckResult finish(int id, std::string name, const Tally& t, Clock::time_point start,
                   double limit_seconds = 0.0, std::string note = {}) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.pass = t.ok() && (limit_seconds <= 0.0 || r.seconds < limit_seconds);
  std::ostringstream os;
  os << t.checks() << " checks";
  if (!note.empty()) os << ", " << note;
  if (!t.ok()) os << "; " << t.failures() << " failed, first: " << t.first();
  if (limit_seconds > 0.0 && r.seconds >= limit_seconds)
    os << "; exceeded the " << limit_seconds << " s budget";
  r.detail = os.str();
  return r;
}

struct Sample {
  Element b;
  Level spec;
};

std::vector<Sample> finite_levels_1_2() {
  std::vector<Sample> out;
  for (Int l : {1, 2})
    for (const auto& b : enumerate_backtrack(l)) out.push_back({b, Level::finite(l)});
  return out;
}

std::string where(const Element& b, const Level& spec, int k) {
  return "b=" + rows_to_json(b) + " level=" + spec.to_string() + " k=" + std::to_string(k);
}

std::string where(const UDPoint& x) { return "x=" + point_to_json(x); }

UDPoint random_point(std::mt19937_64& rng, Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  UDPoint x;
  for (auto& v : x) v = d(rng);
  return x;
}

bool adjacent(int i, int j) { return cartan_entry(i, j) != 0; }

}  // namespace

CheckResult check_enumeration() {
  const auto start = Clock::now();
  Tally t;
  const auto b1 = enumerate_backtrack(1);
  t.expect(b1.size() == 32, [&] { return "B^{6,1} has " + std::to_string(b1.size()); });
  for (Int l : {1, 2}) {
    const auto back = enumerate_backtrack(l);
    const auto bfs = enumerate_bfs(l);
    t.expect(back == bfs, [&] {
      return "level " + std::to_string(l) + ": backtracking found " + std::to_string(back.size()) +
             ", closure found " + std::to_string(bfs.size());
    });
    for (const auto& b : back)
      t.expect(is_valid(b, Level::finite(l)), [&] { return "invalid " + rows_to_json(b); });
  }
  return finish(1, "enumeration", t, start, 5.0,
                "|B^{6,1}|=" + std::to_string(b1.size()) +
                    " |B^{6,2}|=" + std::to_string(enumerate_backtrack(2).size()));
}

CheckResult check_crystal_axioms() {
  const auto start = Clock::now();
  Tally t;
  for (const auto& [b, spec] : finite_levels_1_2()) {
    const Weight wt = weight(b);
    Int pairing = 0;
    for (int j = 0; j < kNodes; ++j) pairing += cartan().cvee[j] * wt[j];
    t.expect(pairing == 0, [&] { return "level of wt nonzero at " + rows_to_json(b); });
    for (int k = 0; k < kNodes; ++k) {
      const Int eps = epsilon(b, spec, k);
      Int ph = 0;
      try {
        ph = phi(b, spec, k);
      } catch (const std::logic_error&) {
        t.fail("phi - epsilon != wt at " + where(b, spec, k));
        continue;
      }
      t.expect(ph - eps == wt[k], [&] { return "phi - epsilon != wt at " + where(b, spec, k); });
      for (Op op : {Op::F, Op::E}) {
        const auto moved = apply(b, spec, op, k);
        if (!moved) continue;
        const int sign = op == Op::F ? -1 : 1;
        const char* name = op == Op::F ? "f" : "e";
        t.expect(is_valid(*moved, spec),
                 [&] { return std::string(name) + " left the crystal at " + where(b, spec, k); });
        const auto back = apply(*moved, spec, op == Op::F ? Op::E : Op::F, k);
        t.expect(back && *back == b, [&] {
          return std::string("partial inverse fails for ") + name + " at " + where(b, spec, k);
        });
        const Weight w2 = weight(*moved);
        for (int j = 0; j < kNodes; ++j)
          t.expect(w2[j] == wt[j] + sign * cartan_entry(j, k), [&] {
            return std::string("weight shift fails for ") + name + " at " + where(b, spec, k);
          });
        t.expect(epsilon(*moved, spec, k) == eps - sign && phi(*moved, spec, k) == ph + sign, [&] {
          return std::string("epsilon/phi step fails for ") + name + " at " + where(b, spec, k);
        });
      }
    }
  }
  return finish(2, "crystal axioms", t, start, 30.0);
}

CheckResult check_string_lengths() {
  const auto start = Clock::now();
  Tally t;
  for (const auto& [b, spec] : finite_levels_1_2()) {
    for (int k = 0; k < kNodes; ++k) {
      for (Op op : {Op::E, Op::F}) {
        Int n = 0;
        Element cur = b;
        while (n <= 4 * spec.value()) {
          const auto next = apply(cur, spec, op, k);
          if (!next) break;
          cur = *next;
          ++n;
        }
        const Int formula = op == Op::E ? epsilon(b, spec, k) : phi(b, spec, k);
        t.expect(n == formula, [&] {
          return std::string(op == Op::E ? "epsilon " : "phi ") + std::to_string(formula) +
                 " vs string length " + std::to_string(n) + " at " + where(b, spec, k);
        });
      }
    }
  }
  return finish(3, "string lengths", t, start);
}

CheckResult check_condition_uniqueness(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t;
  auto check_element = [&](const Element& b, const Level& spec) {
    for (Family fam : {Family::E, Family::F}) {
      const auto hold = holding_conditions(b, fam);
      t.expect(hold.size() == 1, [&] {
        return std::to_string(hold.size()) + (fam == Family::E ? " E" : " F") + " blocks hold at " +
               where(b, spec, 0);
      });
    }
  };
  for (const auto& [b, spec] : finite_levels_1_2()) check_element(b, spec);
  const auto ball5 = ball(Element{}, Level::infinity(), 5);
  for (const auto& b : ball5) {
    check_element(b, Level::infinity());
    const UDPoint x = omega(b);
    t.expect(f0_holding(x).size() == 1, [&] { return "F-breve blocks not unique at " + where(x); });
  }
  std::mt19937_64 rng(seed);
  for (int n = 0; n < 10000; ++n) {
    const UDPoint x = random_point(rng, -20, 20);
    const auto hold = f0_holding(x);
    t.expect(hold.size() == 1,
             [&] { return std::to_string(hold.size()) + " F-breve blocks hold at " + where(x); });
  }
  return finish(4, "condition uniqueness", t, start, 0.0,
                "radius-5 ball of " + std::to_string(ball5.size()));
}

CheckResult check_minimal_elements() {
  const auto start = Clock::now();
  Tally t;
  const std::map<Int, std::size_t> expected = {{1, 4}, {2, 13}};
  for (const auto& [l, count] : expected) {
    const Level spec = Level::finite(l);
    const auto ms = minimal_set(l);
    t.expect(ms.size() == count, [&, l = l] {
      return "level " + std::to_string(l) + " has " + std::to_string(ms.size()) +
             " minimal elements";
    });
    std::set<Weight> dominant;
    Weight w{};
    auto rec = [&](auto&& self, int k) -> void {
      if (k == kNodes) {
        if (level_of(w) == l) dominant.insert(w);
        return;
      }
      for (Int v = 0; v <= l; ++v) {
        w[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    std::set<Weight> eps, phs;
    for (const auto& b : ms) {
      t.expect(is_valid(b, spec), [&] { return "invalid minimal " + rows_to_json(b); });
      t.expect(is_minimal(b, l), [&] { return "not minimal " + rows_to_json(b); });
      eps.insert(epsilon_vector(b, spec));
      phs.insert(phi_vector(b, spec));
    }
    t.expect(eps.size() == ms.size() && eps == dominant,
             [&, l = l] { return "epsilon is not a bijection at level " + std::to_string(l); });
    t.expect(phs.size() == ms.size() && phs == dominant,
             [&, l = l] { return "phi is not a bijection at level " + std::to_string(l); });
    for (const auto& a : coefficient_solutions(l)) {
      const Element b = minimal_from_coeffs(a);
      Weight we{}, wp{};
      for (int k = 0; k < kNodes; ++k) {
        we[k] = a.a[6 - k];
        wp[k] = a.a[k];
      }
      t.expect(epsilon_vector(b, spec) == we && phi_vector(b, spec) == wp, [&] {
        return "epsilon/phi of b0 disagree with its coefficients at " + rows_to_json(b);
      });
    }
  }
  const std::set<Weight> level1 = {fundamental_weight(0), fundamental_weight(1),
                                   fundamental_weight(5), fundamental_weight(6)};
  std::set<Weight> eps1;
  for (const auto& b : minimal_set(1)) eps1.insert(epsilon_vector(b, Level::finite(1)));
  t.expect(eps1 == level1,
           [] { return std::string("level-1 epsilon image is not {L0,L1,L5,L6}"); });
  return finish(5, "minimal elements", t, start);
}

CheckResult check_coherent_family() {
  const auto start = Clock::now();
  Tally t;
  const Level inf = Level::infinity();
  for (Int l : {1, 2}) {
    const Level spec = Level::finite(l);
    const auto bl = enumerate_backtrack(l);
    for (const auto& b0 : minimal_set(l)) {
      const Weight lambda = epsilon_vector(b0, spec);
      const Weight mu = -phi_vector(b0, spec);
      std::set<Element> image;
      t.expect(embed(l, b0, b0).is_zero(),
               [&] { return "embed(b0, b0) != 0 for " + rows_to_json(b0); });
      for (const auto& b : bl) {
        const Element bp = embed(l, b0, b);
        image.insert(bp);
        t.expect(is_valid(bp, inf),
                 [&] { return "embedded element invalid: " + rows_to_json(bp); });
        const ShiftedElement s{lambda, b, mu, l};
        for (int k = 0; k < kNodes; ++k) {
          const ShiftStats st = shift_stats(s, k);
          t.expect(epsilon(bp, inf, k) == st.epsilon && phi(bp, inf, k) == st.phi &&
                       weight_component(bp, k) == st.wt,
                   [&] { return "statistics not transported at " + where(b, spec, k); });
          t.expect(epsilon(bp, inf, k) == epsilon(b, spec, k) - epsilon(b0, spec, k) &&
                       phi(bp, inf, k) == phi(b, spec, k) - phi(b0, spec, k),
                   [&] { return "epsilon/phi shift by b0 fails at " + where(b, spec, k); });
          for (Op op : {Op::E, Op::F}) {
            const auto fin = apply(b, spec, op, k);
            const auto lim = apply(bp, inf, op, k);
            if (fin) {
              t.expect(lim && embed(l, b0, *fin) == *lim,
                       [&] { return "embed does not intertwine at " + where(b, spec, k); });
            } else {
              const Int room = op == Op::E ? epsilon(b, spec, k) : phi(b, spec, k);
              t.expect(room == 0,
                       [&] { return "zero without exhausted string at " + where(b, spec, k); });
            }
          }
        }
        if (bp.is_zero()) continue;
        try {
          const Decomposition d = decompose(bp);
          t.expect(embed(d.l, d.b0, d.b) == bp,
                   [&] { return "embed(decompose(bp)) != bp for " + rows_to_json(bp); });
        } catch (const std::invalid_argument& e) {
          t.fail(std::string("decompose failed on an embedded element: ") + e.what());
        }
      }
      t.expect(image.size() == bl.size(),
               [&] { return "embed is not injective for b0=" + rows_to_json(b0); });
    }
  }
  const auto ball4 = ball(Element{}, inf, 4);
  for (const auto& bp : ball4) {
    if (bp.is_zero()) continue;
    try {
      const Decomposition d = decompose(bp);
      const Element again = embed(d.l, d.b0, d.b);
      t.expect(again == bp, [&] { return "embed(decompose(bp)) != bp for " + rows_to_json(bp); });
      const Decomposition d2 = decompose(again);
      t.expect(d2.l == d.l && d2.a.a == d.a.a && d2.b0 == d.b0 && d2.b == d.b,
               [&] { return "decompose(embed(d)) != d for " + rows_to_json(bp); });
    } catch (const std::invalid_argument& e) {
      t.fail("round trip rejected " + rows_to_json(bp) + ": " + e.what());
    }
  }
  return finish(6, "coherent family", t, start, 120.0,
                "radius-4 ball of " + std::to_string(ball4.size()));
}

CheckResult check_isomorphism(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t;
  const Level inf = Level::infinity();
  const auto ball4 = ball(Element{}, inf, 4);
  for (const auto& b : ball4) {
    const UDPoint x = omega(b);
    t.expect(omega_inv(x) == b, [&] { return "omega_inv(omega(b)) != b for " + rows_to_json(b); });
    for (int k = 0; k < kNodes; ++k) {
      t.expect(ud_weight(x, k) == weight_component(b, k) &&
                   ud_epsilon(x, k) == epsilon(b, inf, k) && ud_phi(x, k) == phi(b, inf, k),
               [&] { return "statistics differ under omega at " + where(b, inf, k); });
      const auto fb = apply_f(b, inf, k);
      const auto eb = apply_e(b, inf, k);
      t.expect(fb && omega(*fb) == ud_apply_f(x, k),
               [&] { return "omega does not intertwine f at " + where(b, inf, k); });
      t.expect(eb && omega(*eb) == ud_apply_e(x, k),
               [&] { return "omega does not intertwine e at " + where(b, inf, k); });
    }
  }
  std::mt19937_64 rng(seed);
  for (int n = 0; n < 10000; ++n) {
    const UDPoint x = random_point(rng, -10, 10);
    const Element b = omega_inv(x);
    t.expect(is_valid(b, inf), [&] { return "omega_inv leaves B^{6,inf} at " + where(x); });
    t.expect(omega(b) == x, [&] { return "omega(omega_inv(x)) != x at " + where(x); });
  }
  return finish(7, "isomorphism", t, start, 0.0,
                "radius-4 ball of " + std::to_string(ball4.size()));
}

CheckResult check_tropical_axioms(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> param(-50, 50);
  for (int n = 0; n < 1000; ++n) {
    const UDPoint x = random_point(rng, -50, 50);
    const Int c = param(rng), c1 = param(rng), c2 = param(rng);
    auto ctx = [&](const char* law, int i, int j) {
      return std::string("(") + law + ") i=" + std::to_string(i) + " j=" + std::to_string(j) +
             " c=" + std::to_string(c) + " c1=" + std::to_string(c1) + " c2=" + std::to_string(c2) +
             " " + where(x);
    };
    for (int k = 0; k < kNodes; ++k) {
      const UDPoint y = apply_ec(x, k, c);
      for (int j = 0; j < kNodes; ++j)
        t.expect(ud_weight(y, j) == ud_weight(x, j) + c * cartan_entry(j, k),
                 [&] { return ctx("a", k, j); });
      t.expect(ud_epsilon(y, k) == ud_epsilon(x, k) - c, [&] { return ctx("b", k, k); });
      for (int i = 0; i < kNodes; ++i)
        if (i != k && !adjacent(i, k) && !adjacent(k, i))
          t.expect(ud_epsilon(y, i) == ud_epsilon(x, i), [&] { return ctx("c", i, k); });
      t.expect(apply_ec(apply_ec(x, k, c2), k, c1) == apply_ec(x, k, c1 + c2),
               [&] { return ctx("f", k, k); });
      t.expect(apply_ec(x, k, 0) == x, [&] { return ctx("f0", k, k); });
    }
    for (int i = 0; i < kNodes; ++i) {
      for (int j = i + 1; j < kNodes; ++j) {
        if (cartan_entry(i, j) == 0) {
          t.expect(apply_ec(apply_ec(x, j, c2), i, c1) == apply_ec(apply_ec(x, i, c1), j, c2),
                   [&] { return ctx("d", i, j); });
        } else if (cartan_entry(i, j) == -1) {
          const UDPoint lhs = apply_ec(apply_ec(apply_ec(x, i, c2), j, c1 + c2), i, c1);
          const UDPoint rhs = apply_ec(apply_ec(apply_ec(x, j, c1), i, c1 + c2), j, c2);
          t.expect(lhs == rhs, [&] { return ctx("e", i, j); });
        }
      }
    }
  }
  return finish(8, "tropical axioms", t, start);
}

CheckResult check_f0_cross(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t;
  std::mt19937_64 rng(seed);
  for (int n = 0; n < 10000; ++n) {
    const UDPoint x = random_point(rng, -20, 20);
    try {
      const UDPoint table = f0_table(x);
      const UDPoint generic = apply_ec(x, 0, -1);
      const auto f = apply_f(omega_inv(x), Level::infinity(), 0);
      t.expect(table == generic, [&] { return "f0_table != apply_ec(., 0, -1) at " + where(x); });
      t.expect(f && omega(*f) == generic,
               [&] { return "apply_ec(., 0, -1) != omega f0 omega^-1 at " + where(x); });
      t.expect(f && *f == omega_inv(generic),
               [&] { return "f0 on B^{6,inf} != omega^-1 apply_ec(., 0, -1) at " + where(x); });
    } catch (const ConditionFault& e) {
      t.fail(std::string(e.what()) + " at " + where(x));
    }
  }
  return finish(9, "f0 cross-oracle", t, start);
}

CheckResult check_expression_engine(std::uint64_t seed) {
  const auto start = Clock::now();
  Tally t;
  const auto& slots = ec_formula_slots();
  std::size_t samples = 0;
  for (int k = 0; k < kNodes; ++k) {
    for (int coord = 0; coord < kUdDim; ++coord) {
      const trop::SlotFunction hand = [k, coord](std::span<const Int> v) {
        UDPoint x;
        std::copy_n(v.begin(), kUdDim, x.begin());
        return apply_ec(x, k, v[kUdDim])[coord];
      };
      const trop::Compiled& compiled = ec_formula_compiled(k, coord);
      const trop::SlotFunction parsed = [&compiled](std::span<const Int> v) { return compiled(v); };
      const auto res = trop::check_equiv(slots, hand, parsed, trop::Box{-50, 50}, 10000,
                                         seed + static_cast<std::uint64_t>(k * kUdDim + coord));
      samples += res.samples;
      t.expect(res.equal, [&] {
        std::ostringstream os;
        os << "k=" << k << " " << ud_variable_names()[coord] << " differs at";
        for (const auto& [name, v] : res.counterexample) os << " " << name << "=" << v;
        return os.str();
      });
    }
  }
  std::mt19937_64 rng(seed);
  const std::vector<std::string> vars = {"x", "y", "z", "u", "v"};
  std::uniform_int_distribution<Int> value(-50, 50);
  for (int n = 0; n < 1000; ++n) {
    const trop::RatExpr e = trop::random_rational(rng, 6, vars);
    const trop::TropExpr te = trop::tropicalize(e);
    for (int s = 0; s < 8; ++s) {
      trop::Assignment a;
      for (const auto& name : vars) a[name] = value(rng);
      t.expect(trop::eval(te, a) == trop::tropical_fold(e, a),
               [&] { return "homomorphism fails for " + trop::to_string(e); });
    }
  }
  return finish(10, "expression engine", t, start, 0.0,
                std::to_string(samples) + " formula samples");
}

Suite parse_suite(const std::string& name) {
  if (name == "crystal") return Suite::Crystal;
  if (name == "coherent") return Suite::Coherent;
  if (name == "ud") return Suite::Ud;
  if (name == "iso") return Suite::Iso;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<CheckResult> run_suite(Suite suite, std::uint64_t seed) {
  struct Entry {
    int id;
    Suite suite;
    std::function<CheckResult()> run;
  };
  const std::vector<Entry> checks = {
      {1, Suite::Crystal, check_enumeration},
      {2, Suite::Crystal, check_crystal_axioms},
      {3, Suite::Crystal, check_string_lengths},
      {4, Suite::Crystal, [seed] { return check_condition_uniqueness(seed); }},
      {5, Suite::Coherent, check_minimal_elements},
      {6, Suite::Coherent, check_coherent_family},
      {7, Suite::Iso, [seed] { return check_isomorphism(seed); }},
      {8, Suite::Ud, [seed] { return check_tropical_axioms(seed); }},
      {9, Suite::Iso, [seed] { return check_f0_cross(seed); }},
      {10, Suite::Ud, [seed] { return check_expression_engine(seed); }},
  };
  std::vector<CheckResult> out;
  for (const auto& c : checks) {
    if (suite != Suite::All && suite != c.suite) continue;
    try {
      out.push_back(c.run());
    } catch (const std::exception& e) {
      CheckResult r;
      r.id = c.id;
      r.name = "uncaught exception";
      r.detail = e.what();
      out.push_back(r);
    }
  }
  return out;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " " << r.name << " ("
     << std::fixed << std::setprecision(2) << r.seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace d6
