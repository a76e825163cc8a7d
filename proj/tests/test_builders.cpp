#include "doctest.h"
#include "prf/catalog.hpp"
#include "prf/errors.hpp"
#include "prf/eval.hpp"
#include "prf/oracle.hpp"
#include "prf/term.hpp"

using namespace prf;

namespace {
Nat shal(const TermPtr& t, const Nat& x) {
  EvalConfig cfg;
  cfg.budget = 50'000'000;
  return eval(t, {x}, cfg).value;
}
}

TEST_CASE("addition from difference and iteration") {
  TermPtr ss = build_addition(succ(), succ(), Flavor::Monus);
  for (Nat x = 0; x <= 20; ++x) CHECK(shal(ss, x) == 2 * x + 2);
  TermPtr ii = build_addition(atom("I"), atom("I"), Flavor::Monus);
  CHECK(shal(ii, 5) == 10);
  TermPtr ssd = build_addition(succ(), succ(), Flavor::Dist);
  CHECK(shal(ssd, 0) == 2);
  for (Nat x = 0; x <= 20; ++x) CHECK(shal(ssd, x) == 2 * x + 2);
  // mixed growth rates at rank <= 2 keep the padding term on the cheap rungs
  TermPtr oi = build_addition(atom("O"), atom("I"), Flavor::Monus);
  for (Nat x = 0; x <= 12; ++x) CHECK(shal(oi, x) == oracle::is_zero(x) + x);
  // rank-3 operands ride on the third rung, whose values dwarf everything
  // past x = 2; the construction is still sound there
  TermPtr ds = build_addition(atom("D"), atom("Sgn"), Flavor::Monus);
  for (Nat x = 0; x <= 2; ++x) CHECK(shal(ds, x) == oracle::dbl(x) + oracle::sgn(x));
  // the deep reading agrees where the construction is cheap enough
  TermPtr small = build_addition(succ(), succ(), Flavor::Monus);
  EvalConfig deep = deep_config("sec5-monus");
  for (Nat x = 0; x <= 4; ++x) CHECK(eval(small, {x}, deep).value == 2 * x + 2);
  // operands whose exact expansion rank leaves the constructible ladder
  CHECK_THROWS_AS(build_addition(catalog_get("sec5-monus/Mod3").term, succ(), Flavor::Monus),
                  InfeasibleIndex);
}

TEST_CASE("conditional guard") {
  TermPtr t1 = build_conditional(catalog_get("sec5-monus/O").term, succ(), Flavor::Monus);
  CHECK(shal(t1, 0) == 0);  // guard fires at 0
  CHECK(shal(t1, 4) == 5);
  TermPtr t2 = build_conditional(catalog_get("sec5-monus/Sgn").term, succ(), Flavor::Monus);
  CHECK(shal(t2, 0) == 1);
  CHECK(shal(t2, 3) == 0);
  TermPtr t3 = build_conditional(catalog_get("sec5-dist/Sgn").term,
                                 catalog_get("sec5-dist/D").term, Flavor::Dist);
  CHECK(shal(t3, 0) == 0);  // guard passes, D(0) = 0
  CHECK(shal(t3, 3) == 0);  // guard blocks
  // rank-explosive guards are fine: the builder never synthesises their sum
  TermPtr t4 = build_conditional(catalog_get("sec5-monus/Mod3").term, succ(), Flavor::Monus);
  CHECK(shal(t4, 3) == 4);
  CHECK(shal(t4, 4) == 0);
  CHECK(shal(t4, 6) == 7);
  // the shorter experimental rewrite computes the same function
  TermPtr t5 = build_conditional_experimental(catalog_get("sec5-monus/Sgn").term, succ(),
                                              Flavor::Monus);
  for (Nat x = 0; x <= 16; ++x) CHECK(shal(t5, x) == shal(t2, x));
}

TEST_CASE("family assembly") {
  CHECK(shal(build_family(Family::O, 3, Flavor::Monus), 3) == 1);
  CHECK(shal(build_family(Family::O, 3, Flavor::Monus), 5) == 0);
  CHECK(shal(build_family(Family::M, 3, Flavor::Monus), 5) == 15);
  CHECK(shal(build_family(Family::C, 5, Flavor::Monus), 3) == 4);
  CHECK(shal(build_family(Family::C, 5, Flavor::Monus), 4) == 0);
  for (Nat x = 0; x <= 30; ++x) {
    CHECK(shal(build_family(Family::Mod, 5, Flavor::Dist), x) == oracle::mod_by(5, x));
    CHECK(shal(build_family(Family::Div, 5, Flavor::Dist), x) == oracle::div_by(5, x));
  }
  CHECK(shal(build_family(Family::F, 2, Flavor::Monus), 4) == 11);
  CHECK(shal(build_family(Family::B, 1, Flavor::Monus), 6) == 18);
  CHECK(shal(build_family(Family::B, 3, Flavor::Monus), 2) == 368);
  CHECK_THROWS_AS(build_family(Family::C, 1, Flavor::Monus), BadIndex);
  CHECK_THROWS_AS(build_family(Family::Mod, 1, Flavor::Monus), BadIndex);
  CHECK_THROWS_AS(build_family(Family::F, 6, Flavor::Monus), BadIndex);
  CHECK_THROWS_AS(build_family(Family::B, 6, Flavor::Monus), BadIndex);
  CHECK_THROWS_AS(build_family(Family::O, 65, Flavor::Monus), BadIndex);
}

TEST_CASE("cosignum from a descending witness") {
  for (const char* name : {"N", "E"}) {
    TermPtr t = build_cosignum_from(atom(name), 8);
    for (Nat x = 0; x <= 64; ++x) CHECK(shal(t, x) == oracle::is_zero(x));
  }
  CHECK_THROWS_AS(build_cosignum_from(succ(), 16), NotDecreasingWitness);
}

TEST_CASE("seeded iteration translates back") {
  for (unsigned a = 1; a <= 3; ++a) {
    TermPtr mixed = translate_offset(TranslateScheme::Mixed, proj(2, 1), a);
    TermPtr pure = translate_offset(TranslateScheme::Pure, succ(), a);
    for (Nat x = 0; x <= 32; ++x) {
      CHECK(shal(mixed, x) == oracle::pred(x));
      CHECK(shal(pure, x) == x);
    }
  }
  CHECK_THROWS_AS(translate_offset(TranslateScheme::Mixed, proj(2, 1), 0), BadIndex);
  CHECK_THROWS_AS(translate_offset(TranslateScheme::Mixed, succ(), 1), ArityError);
  CHECK_THROWS_AS(translate_offset(TranslateScheme::Pure, proj(2, 1), 1), ArityError);
}

TEST_CASE("one-generator arithmetic") {
  TermPtr gsq = compose(atom("Sq"), succ());  // (x+1)^2
  for (Sec6Variant v : {Sec6Variant::E, Sec6Variant::K, Sec6Variant::L}) {
    TermPtr pam = build_sec6(Sec6Op::PlusArgMinus, gsq, nullptr, v);
    CHECK(shal(pam, 4) == 21);  // 25 - 4
    TermPtr times = build_sec6(Sec6Op::OTimes, op_plus(succ()), op_plus(succ()), v);
    CHECK(shal(times, 2) == 25);  // (2x+1)^2 at 2
    TermPtr add = build_sec6(Sec6Op::Add, op_plus(constant(1)), op_plus(constant(1)), v);
    CHECK(shal(add, 0) == 2);
  }
  TermPtr oplus = build_sec6(Sec6Op::OPlus, gsq, succ(), Sec6Variant::E);
  for (Nat x = 0; x <= 8; ++x) CHECK(shal(oplus, x) == 2 * (x + 1) * (x + 1));
  TermPtr ominus = build_sec6(Sec6Op::OMinus, compose(gsq, succ()), succ(), Sec6Variant::E);
  for (Nat x = 0; x <= 8; ++x) CHECK(shal(ominus, x) == 2 * x + 3);
  TermPtr sub = build_sec6(Sec6Op::Sub, gsq, succ(), Sec6Variant::E);
  for (Nat x = 0; x <= 8; ++x) CHECK(shal(sub, x) == (x + 1) * (x + 1) - (x + 1));
}

TEST_CASE("side conditions are validated, not assumed") {
  EvalConfig cfg;
  // fine: (x+1)^2 >= x everywhere on the range
  TermPtr gsq = compose(atom("Sq"), succ());
  enforce_sec6_precondition(Sec6Op::PlusArgMinus, gsq, nullptr, 0, 64, cfg);
  // broken: succ - (x+1)^2 goes negative from x = 1 on
  try {
    enforce_sec6_precondition(Sec6Op::OMinus, succ(), gsq, 0, 64, cfg);
    FAIL("expected a violation");
  } catch (const PreconditionViolated& e) {
    CHECK(e.witness == 1);
  }
  CHECK_THROWS_AS(enforce_sec6_precondition(Sec6Op::Sub, atom("P"), succ(), 0, 8, cfg),
                  PreconditionViolated);
  // Add has no side condition
  enforce_sec6_precondition(Sec6Op::Add, succ(), succ(), 0, 8, cfg);
}

TEST_CASE("pure iteration from the seed-1 node") {
  for (Sec6Variant v : {Sec6Variant::E, Sec6Variant::K, Sec6Variant::L}) {
    TermPtr t = a1_pure_iter(succ(), v);
    for (Nat x = 0; x <= 32; ++x) CHECK(shal(t, x) == x);
  }
}
