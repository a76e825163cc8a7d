#include "doctest.h"
#include "prf/errors.hpp"
#include "prf/eval.hpp"
#include "prf/nat.hpp"
#include "prf/parser.hpp"
#include "prf/term.hpp"

using namespace prf;

namespace {
EvalConfig shallow() { return {}; }

Nat ev(const TermPtr& t, const Nat& x, const EvalConfig& cfg = shallow()) {
  return eval(t, {x}, cfg).value;
}
}

TEST_CASE("leaf evaluation") {
  CHECK(ev(succ(), 6) == 7);
  CHECK(ev(constant(3), 99) == 3);
  CHECK(eval(proj(3, 2), {Nat(4), Nat(5), Nat(6)}, shallow()).value == 5);
  CHECK(ev(atom("Pw"), 6) == 64);
  CHECK_THROWS_AS(eval(succ(), {Nat(1), Nat(2)}, shallow()), ArityError);
}

TEST_CASE("composition chains") {
  CHECK(ev(parse_expr("Hf P Rt S D D D"), 10) == 4);  // 80 -> 81 -> 9 -> 8 -> 4
  CHECK(ev(power(succ(), 0), 7) == 7);
  CHECK(ev(power(succ(), 12), 30) == 42);
  CHECK(ev(parse_expr("sub(add2; Sq, Rt)"), 9) == 84);
  CHECK(ev(parse_expr("J(S, S)"), 2) == 24);  // pairs (3,3)
}

TEST_CASE("iteration semantics") {
  CHECK(ev(mixed_iter(proj(2, 1)), 5) == 4);       // predecessor
  CHECK(ev(mixed_iter(proj(2, 1)), 0) == 0);
  CHECK(ev(mixed_iter_a(proj(2, 1), 4), 0) == 4);  // seeded predecessor
  CHECK(ev(mixed_iter_a(proj(2, 1), 4), 5) == 4);
  CHECK(ev(pure_iter(succ()), 9) == 9);            // identity, the slow way
  CHECK(ev(pure_iter_a(succ(), 5), 9) == 14);
  CHECK(ev(pure_iter(parse_expr("S S")), 9) == 18);
  TermPtr add = prim_rec(proj(1, 1), compose(succ(), proj(3, 3)));
  CHECK(eval(add, {Nat(4), Nat(3)}, shallow()).value == 7);
  CHECK(eval(add, {Nat(4), Nat(0)}, shallow()).value == 4);
}

TEST_CASE("native operator nodes") {
  CHECK(ev(op_add(atom("Sq"), succ()), 4) == 21);
  CHECK(ev(op_monus(succ(), atom("D")), 5) == 0);
  CHECK(ev(op_dist(succ(), atom("D")), 5) == 4);
  CHECK(ev(op_plus(atom("Sq")), 4) == 20);  // F(x) + x
  EvalOutcome amb = eval(op_amb_minus(succ(), atom("D")), {Nat(5)}, shallow());
  CHECK(amb.value == 0);  // collapses to monus, but the flip is recorded
  CHECK(amb.ambiguous_minus_hits == 1);
  EvalOutcome ok = eval(op_amb_minus(atom("D"), succ()), {Nat(5)}, shallow());
  CHECK(ok.value == 4);
  CHECK(ok.ambiguous_minus_hits == 0);
  EvalConfig noflag;
  noflag.flag_ambiguous_minus = false;
  CHECK(eval(op_amb_minus(succ(), atom("D")), {Nat(5)}, noflag).ambiguous_minus_hits == 0);
}

TEST_CASE("deep mode expands through the configured hook") {
  EvalConfig deep;
  deep.mode = EvalMode::Deep;
  deep.expander = [](const std::string& name) -> TermPtr {
    if (name == "D") return op_add(atom("I"), atom("I"));
    return nullptr;
  };
  EvalOutcome out = eval(atom("D"), {Nat(21)}, deep);
  CHECK(out.value == 42);
  EvalOutcome flat = eval(atom("D"), {Nat(21)}, shallow());
  CHECK(flat.value == 42);
  CHECK(out.steps_used > flat.steps_used);  // paying for the construction
  // unexpanded atoms stay oracle-computed
  CHECK(eval(atom("Sq"), {Nat(9)}, deep).value == 81);
}

TEST_CASE("budget accounting") {
  TermPtr slow_id = pure_iter(succ());
  EvalConfig tight;
  tight.budget = 2500;
  CHECK(ev(slow_id, 900, tight) == 900);
  try {
    ev(slow_id, 1'000'000, tight);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExceededError& e) {
    CHECK(e.steps >= 1000);
    CHECK(!std::string(e.what()).empty());
  }
  // value and steps are deterministic given a generous budget
  EvalOutcome a = eval(slow_id, {Nat(500)}, shallow());
  EvalOutcome b = eval(slow_id, {Nat(500)}, shallow());
  CHECK(a.value == b.value);
  CHECK(a.steps_used == b.steps_used);
  // unrolls are loops, not recursion: a deep power is safe
  CHECK(ev(power(succ(), 200'000), 0) == 200'000);
}

TEST_CASE("range evaluation reuses ascending prefixes") {
  TermPtr slow_id = pure_iter(succ());
  EvalConfig tight;
  tight.budget = 300;  // far below the cost of the last point from scratch
  RangeResult r = eval_unary_range(slow_id, 0, 1000, tight);
  REQUIRE(!r.died_at.has_value());
  REQUIRE(r.points.size() == 1001);
  for (std::size_t i = 0; i <= 1000; ++i) CHECK(r.points[i].value == i);

  EvalConfig nomemo = tight;
  nomemo.memo_capacity = 0;  // no reuse: the same sweep must die part way
  RangeResult dead = eval_unary_range(slow_id, 0, 1000, nomemo);
  REQUIRE(dead.died_at.has_value());
  CHECK(*dead.died_at >= 100);  // step accounting details aside, well past the budget
  CHECK(dead.points.size() == static_cast<std::size_t>(nat_to_u64(*dead.died_at, "x")));
}

TEST_CASE("point-list evaluation") {
  RangeResult r = eval_points(atom("delta2"), {{Nat(4), Nat(4)}, {Nat(10), Nat(3)}}, shallow());
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].value == 1);
  CHECK(r.points[1].value == 0);
  CHECK(!r.died_at.has_value());

  EvalConfig tight;
  tight.budget = 100;
  RangeResult d = eval_points(pure_iter(succ()), {{Nat(5)}, {Nat(1'000'000)}}, tight);
  REQUIRE(d.died_at.has_value());
  CHECK(*d.died_at == 1);  // index of the fatal point
  CHECK(d.points.size() == 1);
  CHECK_THROWS_AS(eval_points(succ(), {{Nat(1), Nat(2)}}, shallow()), ArityError);
}

TEST_CASE("memoisation is value-transparent") {
  TermPtr f = compose(atom("Sq"), atom("Sq"));
  TermPtr t = op_add(f, f);
  EvalConfig plain;
  EvalConfig off;
  off.memo_capacity = 0;
  EvalOutcome with = eval(t, {Nat(3)}, plain);
  EvalOutcome without = eval(t, {Nat(3)}, off);
  CHECK(with.value == 162);
  CHECK(without.value == 162);
  CHECK(without.memo_hits == 0);
  CHECK(with.steps_used <= without.steps_used);
}
