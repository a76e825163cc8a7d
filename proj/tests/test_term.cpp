#include "doctest.h"
#include "prf/errors.hpp"
#include "prf/term.hpp"

using namespace prf;

TEST_CASE("arity of leaves") {
  CHECK(constant(5)->arity() == 1);
  CHECK(succ()->arity() == 1);
  CHECK(proj(3, 2)->arity() == 3);
  CHECK(atom("Sq")->arity() == 1);
  CHECK(atom("add2")->arity() == 2);
  CHECK_THROWS_AS(proj(0, 1), BadIndex);
  CHECK_THROWS_AS(proj(2, 3), BadIndex);
  CHECK_THROWS_AS(proj(2, 0), BadIndex);
  CHECK_THROWS_AS(atom("NoSuchAtom"), UnknownName);
}

TEST_CASE("substitution arity") {
  // f ternary, three binary arguments -> binary result
  TermPtr t = subst(proj(3, 1), {proj(2, 2), proj(2, 1), proj(2, 2)});
  CHECK(t->arity() == 2);
  // argument count must match f's arity
  CHECK_THROWS_AS(subst(proj(3, 1), {proj(2, 1)}), ArityError);
  // inner terms must agree on arity
  CHECK_THROWS_AS(subst(proj(2, 1), {proj(2, 1), proj(3, 1)}), ArityError);
  CHECK_THROWS_AS(subst(nullptr, {proj(2, 1)}), ArityError);
}

TEST_CASE("composition wants a unary outer term") {
  TermPtr t = compose(succ(), proj(3, 2));
  CHECK(t->arity() == 3);
  CHECK_THROWS_AS(compose(proj(2, 1), succ()), ArityError);
  TermPtr chain = compose_chain({succ(), succ(), proj(2, 1)});
  CHECK(chain->arity() == 2);
  CHECK(chain->kind() == Kind::Compose);
  // right fold: leftmost function applied last
  CHECK(term_equal(chain, compose(succ(), compose(succ(), proj(2, 1)))));
  CHECK_THROWS_AS(compose_chain({}), ArityError);
}

TEST_CASE("primitive recursion arity") {
  // f unary base, g ternary step -> binary, recursing on the last argument
  TermPtr t = prim_rec(succ(), proj(3, 3));
  CHECK(t->arity() == 2);
  CHECK_THROWS_AS(prim_rec(succ(), proj(2, 1)), ArityError);
}

TEST_CASE("iteration nodes") {
  CHECK(mixed_iter(proj(2, 1))->arity() == 1);
  CHECK(mixed_iter_a(proj(2, 1), 4)->arity() == 1);
  CHECK_THROWS_AS(mixed_iter(succ()), ArityError);
  CHECK(pure_iter(succ())->arity() == 1);
  CHECK(pure_iter_a(succ(), 3)->arity() == 1);
  CHECK_THROWS_AS(pure_iter(proj(2, 1)), ArityError);
  CHECK(power(succ(), 0)->arity() == 1);
  CHECK_THROWS_AS(power(proj(2, 1), 2), ArityError);
  CHECK(op_plus(succ())->arity() == 1);
}

TEST_CASE("binary operator nodes take unary children") {
  for (auto mk : {op_add, op_monus, op_dist, op_amb_minus, op_pair_j}) {
    CHECK(mk(succ(), succ())->arity() == 1);
    CHECK_THROWS_AS(mk(proj(2, 1), succ()), ArityError);
    CHECK_THROWS_AS(mk(succ(), proj(2, 1)), ArityError);
  }
}

TEST_CASE("structural equality and hashing") {
  TermPtr a = compose(succ(), mixed_iter(proj(2, 1)));
  TermPtr b = compose(succ(), mixed_iter(proj(2, 1)));
  TermPtr c = compose(succ(), mixed_iter(proj(2, 2)));
  CHECK(term_equal(a, b));
  CHECK(!term_equal(a, c));
  CHECK(a->hash() == b->hash());
  CHECK(term_equal(constant(7), constant(7)));
  CHECK(!term_equal(constant(7), constant(8)));
  CHECK(!term_equal(pure_iter_a(succ(), 1), pure_iter_a(succ(), 2)));
  CHECK(!term_equal(power(succ(), 2), power(succ(), 3)));
  CHECK(!term_equal(atom("Sq"), atom("Rt")));
}

TEST_CASE("child replacement keeps the node shape") {
  TermPtr t = op_add(succ(), atom("Sq"));
  TermPtr u = term_with_children(t, {atom("Rt"), succ()});
  CHECK(u->kind() == Kind::OpAdd);
  CHECK(term_equal(u, op_add(atom("Rt"), succ())));
  TermPtr p = power(succ(), 5);
  TermPtr q = term_with_children(p, {atom("I")});
  CHECK(q->number() == 5);
  CHECK(term_equal(q, power(atom("I"), 5)));
  // leaves come back as-is
  CHECK(term_equal(term_with_children(succ(), {}), succ()));
}

TEST_CASE("node counting") {
  CHECK(term_count_nodes(succ()) == 1);
  CHECK(term_count_nodes(compose(succ(), succ())) == 3);
  CHECK(term_count_nodes(subst(proj(2, 1), {succ(), succ()})) == 4);
}

TEST_CASE("atom registry") {
  CHECK(atom_exists("Sq"));
  CHECK(atom_exists("Mod7"));
  CHECK(atom_exists("delta2"));
  CHECK(!atom_exists("Mod11"));
  CHECK(atom_arity("J2") == 2);
  CHECK(atom_arity("B3") == 1);
  CHECK(!atom_names().empty());
}
