#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "prf/catalog.hpp"
#include "prf/errors.hpp"
#include "prf/eval.hpp"
#include "prf/nat.hpp"
#include "prf/oracle.hpp"
#include "prf/parser.hpp"
#include "prf/term.hpp"

using namespace prf;

namespace {

// Random terms over the full node menu, arity-correct by construction.
struct Gen {
  std::mt19937 rng;
  std::vector<std::string> unary_atoms, binary_atoms;

  explicit Gen(unsigned seed) : rng(seed) {
    for (const auto& n : atom_names())
      (atom_arity(n) == 1 ? unary_atoms : binary_atoms).push_back(n);
  }

  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng); }

  TermPtr leaf(unsigned arity) {
    if (arity == 1) {
      switch (pick(4)) {
        case 0: return succ();
        case 1: return constant(pick(10));
        case 2: return proj(1, 1);
        default: return atom(unary_atoms[pick(static_cast<unsigned>(unary_atoms.size()))]);
      }
    }
    if (arity == 2 && pick(3) == 0)
      return atom(binary_atoms[pick(static_cast<unsigned>(binary_atoms.size()))]);
    return proj(arity, 1 + pick(arity));
  }

  TermPtr term(unsigned arity, unsigned depth) {
    if (depth == 0) return leaf(arity);
    switch (pick(12)) {
      case 0: {  // substitution through a random inner arity
        unsigned m = 1 + pick(3);
        std::vector<TermPtr> gs;
        for (unsigned i = 0; i < m; ++i) gs.push_back(term(arity, depth - 1));
        return subst(term(m, depth - 1), gs);
      }
      case 1: return compose(term(1, depth - 1), term(arity, depth - 1));
      case 2:
        if (arity >= 2) return prim_rec(term(arity - 1, depth - 1), term(arity + 1, depth - 1));
        return mixed_iter(term(2, depth - 1));
      case 3: return arity == 1 ? mixed_iter(term(2, depth - 1)) : leaf(arity);
      case 4: return arity == 1 ? mixed_iter_a(term(2, depth - 1), pick(6)) : leaf(arity);
      case 5: return arity == 1 ? pure_iter(term(1, depth - 1)) : leaf(arity);
      case 6: return arity == 1 ? pure_iter_a(term(1, depth - 1), pick(6)) : leaf(arity);
      case 7: return arity == 1 ? power(term(1, depth - 1), pick(5)) : leaf(arity);
      case 8: return arity == 1 ? op_plus(term(1, depth - 1)) : leaf(arity);
      case 9:
      case 10: {
        if (arity != 1) return leaf(arity);
        TermPtr l = term(1, depth - 1), r = term(1, depth - 1);
        switch (pick(5)) {
          case 0: return op_add(l, r);
          case 1: return op_monus(l, r);
          case 2: return op_dist(l, r);
          case 3: return op_amb_minus(l, r);
          default: return op_pair_j(l, r);
        }
      }
      default: return leaf(arity);
    }
  }
};

// Monotone fragment: successor, constants, projections, addition, closed
// under substitution, composition, and iteration.
struct MonoGen {
  std::mt19937 rng;
  explicit MonoGen(unsigned seed) : rng(seed) {}
  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng); }

  TermPtr term(unsigned arity, unsigned depth) {
    if (depth == 0) {
      switch (pick(4)) {
        case 0: return arity == 1 ? succ() : proj(arity, 1 + pick(arity));
        case 1: {
          TermPtr c = constant(pick(4));
          return arity == 1 ? c : compose(c, proj(arity, 1));
        }
        case 2: return arity == 2 && pick(2) ? atom("add2") : proj(arity, 1 + pick(arity));
        default: return proj(arity, 1 + pick(arity));
      }
    }
    switch (pick(4)) {
      case 0: {
        unsigned m = 1 + pick(2);
        std::vector<TermPtr> gs;
        for (unsigned i = 0; i < m; ++i) gs.push_back(term(arity, depth - 1));
        return subst(m == 2 && pick(2) ? atom("add2") : term(m, depth - 1), gs);
      }
      case 1: return compose(term(1, depth - 1), term(arity, depth - 1));
      case 2: return arity == 1 ? mixed_iter(term(2, depth - 1)) : term(arity, depth - 1);
      default: return term(arity, depth - 1);
    }
  }
};

}  // namespace

TEST_CASE("render/parse round-trips a thousand random terms") {
  Gen gen(20240817);
  for (int i = 0; i < 1000; ++i) {
    TermPtr t = gen.term(1 + gen.pick(3), 6);
    std::string src = to_source(t);
    CAPTURE(src);
    TermPtr back = parse_expr(src);
    CHECK(term_equal(t, back));
    CHECK(to_source(back) == src);
  }
}

TEST_CASE("catalog sources are canonical") {
  for (const CatalogEntry& e : catalog_all()) {
    std::string src = to_source(e.term);
    TermPtr back = parse_expr(src);
    CHECK(term_equal(e.term, back));
    CHECK(to_source(back) == src);
  }
}

TEST_CASE("memoisation and budgets never change values") {
  unsigned used = 0;
  for (const CatalogEntry& e : catalog_all()) {
    if (used >= 50) break;
    if (e.term->arity() != 1) continue;
    ++used;
    Nat x = e.feasible_x < 20 ? e.feasible_x : Nat(20);
    EvalConfig small;
    small.budget = 200'000;
    EvalConfig nomemo = small;
    nomemo.memo_capacity = 0;
    EvalConfig big = small;
    big.budget = 20'000'000;
    Nat v_small, v_big;
    bool small_ok = true;
    try {
      v_small = eval(e.term, {x}, small).value;
    } catch (const BudgetExceededError&) {
      small_ok = false;
    }
    v_big = eval(e.term, {x}, big).value;  // every entry is feasible at its own range
    if (small_ok) CHECK(v_small == v_big);
    try {
      CHECK(eval(e.term, {x}, nomemo).value == v_big);
    } catch (const BudgetExceededError&) {
      // foregoing the memo may price the same point out; that is the point
    }
    CHECK(eval(e.term, {x}, big).steps_used == eval(e.term, {x}, big).steps_used);
  }
  CHECK(used == 50);
}

TEST_CASE("budget death is an exception, not a number") {
  const CatalogEntry& b3 = catalog_get("sec5-monus/B3");
  CHECK(eval(b3.term, {Nat(3)}, EvalConfig{}).value == oracle::b_seq(3, 3));
  EvalConfig deep = deep_config("sec5-monus", 10'000);
  CHECK_THROWS_AS(eval(b3.term, {Nat(3)}, deep), BudgetExceededError);
}

TEST_CASE("integer square root brackets") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Nat v = Nat(rng()) * Nat(rng()) + Nat(rng() % 1000);
    Nat r = nat_isqrt(v);
    CHECK(r * r <= v);
    CHECK((r + 1) * (r + 1) > v);
  }
  CHECK(nat_isqrt(0) == 0);
  CHECK(nat_isqrt(1) == 1);
  CHECK(nat_isqrt(3) == 1);
  CHECK(nat_isqrt(4) == 2);
}

TEST_CASE("the monotone fragment stays monotone") {
  MonoGen gen(424242);
  EvalConfig cfg;
  cfg.budget = 200'000;
  unsigned skipped = 0;
  for (int i = 0; i < 100; ++i) {
    TermPtr t = gen.term(1, 5);
    RangeResult r = eval_unary_range(t, 0, 32, cfg);
    if (r.died_at.has_value()) {
      ++skipped;  // priced out, not wrong
      continue;
    }
    for (std::size_t k = 1; k < r.points.size(); ++k) {
      CAPTURE(to_source(t));
      CHECK(r.points[k - 1].value <= r.points[k].value);
    }
  }
  CHECK(skipped < 100);
}

TEST_CASE("deep and shallow agree across the cheap catalog") {
  // a broad but budgeted sweep; the per-section suites push the ranges
  unsigned used = 0;
  for (const CatalogEntry& e : catalog_all()) {
    if (e.term->arity() != 1 || e.section == "sec5-dist" || e.section == "sec5-monus") continue;
    if (++used > 40) break;
    Nat hi = e.feasible_x < 8 ? e.feasible_x : Nat(8);
    EvalConfig deep = deep_config(e.basis, 5'000'000);
    EvalConfig flat;
    for (Nat x = e.check_lo; x <= hi; ++x) {
      Nat want = eval(e.term, {x}, flat).value;
      Nat got;
      try {
        got = eval(e.term, {x}, deep).value;
      } catch (const BudgetExceededError&) {
        break;  // the construction is honest but pricey; suites cover its budget
      }
      CAPTURE(e.id);
      CHECK(got == want);
    }
  }
}
