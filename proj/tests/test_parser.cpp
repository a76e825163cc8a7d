#include "doctest.h"
#include "prf/errors.hpp"
#include "prf/parser.hpp"
#include "prf/term.hpp"

using namespace prf;

namespace {
TermPtr P(const std::string& s) { return parse_expr(s); }
}

TEST_CASE("level-one operators associate left") {
  CHECK(term_equal(P("S + S -. c2"), op_monus(op_add(succ(), succ()), constant(2))));
  CHECK(term_equal(P("S - D"), op_amb_minus(succ(), atom("D"))));
  CHECK(term_equal(P("|S - D|"), op_dist(succ(), atom("D"))));
  CHECK_THROWS_AS(P("|S + D|"), SyntaxError);  // bars want a written minus inside
}

TEST_CASE("juxtaposition composes") {
  TermPtr t = P("Hf P Rt S D D D");
  TermPtr want = compose_chain({atom("Hf"), atom("P"), atom("Rt"), succ(),
                                atom("D"), atom("D"), atom("D")});
  CHECK(term_equal(t, want));
  CHECK(term_equal(P("S o S"), compose(succ(), succ())));
  CHECK(term_equal(P("S (S S)"), compose(succ(), compose(succ(), succ()))));
}

TEST_CASE("postfix iteration markers") {
  CHECK(term_equal(P("(I + I + c1)^#"),
                   pure_iter(op_add(op_add(atom("I"), atom("I")), constant(1)))));
  CHECK(term_equal(P("(S S)^#"), pure_iter(compose(succ(), succ()))));
  CHECK(term_equal(P("S^5"), power(succ(), 5)));
  CHECK(term_equal(P("S^0"), power(succ(), 0)));
  CHECK(term_equal(P("Sq^#(7)"), pure_iter_a(atom("Sq"), 7)));
  CHECK(term_equal(P("Z^+"), op_plus(atom("Z"))));
  // postfix binds tighter than composition: S D^# = S o (D^#)
  CHECK(term_equal(P("S D^#"), compose(succ(), pure_iter(atom("D")))));
  // stacked postfix
  CHECK(term_equal(P("S^2^#"), pure_iter(power(succ(), 2))));
}

TEST_CASE("bracketed combinators") {
  CHECK(term_equal(P("pr[3,2]"), proj(3, 2)));
  CHECK(term_equal(P("M[pr[2,1]]"), mixed_iter(proj(2, 1))));
  CHECK(term_equal(P("Ma[pr[2,1];4]"), mixed_iter_a(proj(2, 1), 4)));
  CHECK(term_equal(P("R[S, pr[3,3]]"), prim_rec(succ(), proj(3, 3))));
  CHECK(term_equal(P("sub(add2; Sq, Rt)"), subst(atom("add2"), {atom("Sq"), atom("Rt")})));
  CHECK(term_equal(P("J(S, S)"), op_pair_j(succ(), succ())));
  CHECK(term_equal(P("c12"), constant(12)));
}

TEST_CASE("errors carry a position and an expectation") {
  try {
    P("M[pr[2,1]");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 9);
    CHECK(!e.expectation.empty());
  }
  CHECK_THROWS_AS(P(""), SyntaxError);
  CHECK_THROWS_AS(P("S +"), SyntaxError);
  CHECK_THROWS_AS(P("S ^ q"), SyntaxError);
  CHECK_THROWS_AS(P("NoSuchName"), UnknownName);
  CHECK_THROWS_AS(P("sub(add2; Sq)"), ArityError);  // parses, then arity checking rejects
}

TEST_CASE("let environment shadows atoms but not builtins") {
  LetEnv env;
  env["Sq"] = atom("D");  // bindings may shadow atom names
  CHECK(term_equal(parse_expr("Sq", &env), atom("D")));
  env["twice"] = compose(succ(), succ());
  CHECK(term_equal(parse_expr("twice^#", &env), pure_iter(compose(succ(), succ()))));
}

TEST_CASE("let files") {
  const char* src =
      "# a tiny library\n"
      "let twice = S S;\n"
      "let four = twice twice;  # uses the earlier binding\n";
  auto lets = parse_let_file(src);
  REQUIRE(lets.size() == 2);
  CHECK(lets[0].first == "twice");
  CHECK(term_equal(lets[1].second, compose(compose(succ(), succ()), compose(succ(), succ()))));

  CHECK_THROWS_AS(parse_let_file("let S = S;"), SyntaxError);      // reserved
  CHECK_THROWS_AS(parse_let_file("let c3 = S;"), SyntaxError);     // constants are spoken for
  CHECK_THROWS_AS(parse_let_file("let a = S;\nlet a = S S;"), SyntaxError);  // no rebinding
  LetEnv base;
  base["a"] = succ();
  CHECK_THROWS_AS(parse_let_file("let a = S S;", &base), SyntaxError);
}

TEST_CASE("macros in let files need an expander") {
  CHECK_THROWS_AS(parse_let_file("let s = S (+) S;"), SyntaxError);
  MacroExpander mac = [](char op, const TermPtr& l, const TermPtr& r) {
    switch (op) {
      case '+': return op_add(l, r);
      case '-': return op_monus(l, r);
      default: return op_dist(l, r);
    }
  };
  auto lets = parse_let_file("let s = S (+) S;\nlet d = s (-) S;\nlet t = S (x) S;", nullptr, mac);
  REQUIRE(lets.size() == 3);
  CHECK(term_equal(lets[0].second, op_add(succ(), succ())));
  CHECK(term_equal(lets[1].second, op_monus(op_add(succ(), succ()), succ())));
  CHECK(term_equal(lets[2].second, op_dist(succ(), succ())));
}

TEST_CASE("round trip through the renderer") {
  const char* sources[] = {
      "S + S -. c2",
      "Hf P Rt S D D D",
      "(I + I + c1)^#",
      "(S S)^#",
      "M[pr[2,1]]",
      "Ma[S^3 sub(add2; pr[2,1], pr[2,2]); 4]",
      "R[c0, S pr[3,3]]",
      "|Sq - D| -. S^4",
      "J(S, Sq^#(3))^+",
  };
  for (const char* s : sources) {
    TermPtr t = P(s);
    TermPtr again = P(to_source(t));
    CHECK(term_equal(t, again));
    CHECK(to_source(t) == to_source(again));  // rendering is a fixed point
  }
}
