#include "prf/catalog.hpp"

#include <map>
#include <string>
#include <vector>

#include "prf/errors.hpp"
#include "prf/eval.hpp"

namespace prf {

namespace {

TermPtr minus_of(Flavor fl, const TermPtr& l, const TermPtr& r) {
  return fl == Flavor::Dist ? op_dist(l, r) : op_monus(l, r);
}

// 1 as a unary function, using only successor and difference.
TermPtr one_fn(Flavor fl) { return compose(succ(), minus_of(fl, succ(), succ())); }

void need_unary(const TermPtr& t, const char* who) {
  if (!t) throw ArityError(std::string(who) + ": null operand");
  if (t->arity() != 1) throw ArityError(std::string(who) + ": operand must be unary");
}

// ---- iteration rank -------------------------------------------------------

Nat rank_of(const TermPtr& t, std::map<const Term*, Nat>& memo) {
  auto it = memo.find(t.get());
  if (it != memo.end()) return it->second;
  Nat r;
  switch (t->kind()) {
    case Kind::Succ:
      r = 0;
      break;
    case Kind::OpDist: {
      Nat a = rank_of(t->child(0), memo), b = rank_of(t->child(1), memo);
      r = a < b ? b : a;
      break;
    }
    case Kind::OpMonus:
      // truncation on the right adds nothing: the left operand's rank stands
      r = rank_of(t->child(0), memo);
      break;
    case Kind::Compose: {
      Nat a = rank_of(t->child(0), memo), b = rank_of(t->child(1), memo);
      r = (a < b ? b : a) + 2;
      break;
    }
    case Kind::PureIter:
      r = rank_of(t->child(0), memo) + 1;
      break;
    case Kind::Power: {
      // F^n reads as an (n-1)-fold composition
      if (t->number() == 0)
        throw UnsupportedNode("rank of a zeroth power is not defined; expand it away first");
      r = rank_of(t->child(0), memo) + 2 * (t->number() - 1);
      break;
    }
    default:
      throw UnsupportedNode("rank is defined only over successor/difference/iteration terms; expand derived operators first");
  }
  memo.emplace(t.get(), r);
  return r;
}

// ---- the B ladder ---------------------------------------------------------

// Seeds of the fast-growing witnesses at 1: f_0(1)=2, f_1(1)=3, f_2(1)=5,
// f_3(1)=13, f_4(1)=f_3(13)=65533. f_5(1) has ~10^19700 digits' worth of
// predecessor (it equals f_4(65533)), so the ladder stops at 5.
const Nat& f_seed(unsigned n) {
  static const std::vector<Nat> seeds = {Nat(2), Nat(3), Nat(5), Nat(13), Nat(65533)};
  if (n >= seeds.size()) throw InfeasibleIndex("f_" + std::to_string(n) + "(1) is not computable");
  return seeds[n];
}

// Display form: leans on the registered B atoms where they exist.
TermPtr b_term_display(unsigned k) {
  if (k == 0) return succ();
  if (k > 5) throw InfeasibleIndex("B_" + std::to_string(k) + " needs f_" + std::to_string(k - 1) +
                                   "(1), which is not computable");
  TermPtr child = k <= 4 ? atom("B" + std::to_string(k - 1)) : b_term_display(4);
  return pure_iter(compose(power(succ(), f_seed(k - 1)), child));
}

// Atom-free form, for rank computation inside expanded terms.
TermPtr b_term_pure(unsigned k) {
  if (k == 0) return succ();
  if (k > 5) throw InfeasibleIndex("B_" + std::to_string(k) + " needs f_" + std::to_string(k - 1) +
                                   "(1), which is not computable");
  return pure_iter(compose(power(succ(), f_seed(k - 1)), b_term_pure(k - 1)));
}

unsigned rank_to_index(const Nat& k) {
  if (k > 5)
    throw InfeasibleIndex("addition at rank " + k.str() + " needs B_" + k.str() +
                          ", and f_" + Nat(k - 1).str() + "(1) is not computable");
  return static_cast<unsigned>(k);
}

// Addition of two already-expanded (atom-free) unary terms; used when an
// OpAdd node has to be eliminated before rank computation.
TermPtr addition_pure(const TermPtr& F, const TermPtr& G, Flavor fl) {
  std::map<const Term*, Nat> memo;
  Nat kf = rank_of(F, memo), kg = rank_of(G, memo);
  unsigned k = rank_to_index(kf < kg ? kg : kf);
  TermPtr d = pure_iter(compose(succ(), succ()));
  TermPtr dbs = compose(d, compose(b_term_pure(k), succ()));
  return minus_of(fl, dbs, minus_of(fl, minus_of(fl, dbs, F), G));
}

const char* sec5_basis(Flavor fl) { return fl == Flavor::Dist ? "sec5-dist" : "sec5-monus"; }

// Expand atoms through the sec5 dialect and rewrite sums exactly, so the
// result is a pure successor/difference/iteration term with a rank.
TermPtr expand_exact(const TermPtr& t, Flavor fl) {
  switch (t->kind()) {
    case Kind::Atom: {
      auto exp = dialect_expander(sec5_basis(fl));
      TermPtr def = exp(t->atom_name());
      if (!def)
        throw UnsupportedNode("atom '" + t->atom_name() + "' has no definition in " + sec5_basis(fl));
      return expand_exact(def, fl);
    }
    case Kind::OpAdd:
      return addition_pure(expand_exact(t->child(0), fl), expand_exact(t->child(1), fl), fl);
    case Kind::OpAmbMinus:
      return minus_of(fl, expand_exact(t->child(0), fl), expand_exact(t->child(1), fl));
    default: {
      std::vector<TermPtr> kids;
      kids.reserve(t->child_count());
      for (const auto& c : t->children()) kids.push_back(expand_exact(c, fl));
      return term_with_children(t, kids);
    }
  }
}

// ---- conditional ingredients ---------------------------------------------

// alpha(x) = 2^{x+1} for odd x, 0 for even x.
TermPtr alpha_term(Flavor fl) {
  TermPtr left = compose(atom("Pw"), op_add(succ(), atom("Mod2")));
  TermPtr right = compose(atom("Pw"), succ());
  return minus_of(fl, left, right);
}

// beta(x) = 2x for even x, 0 for odd x. The two flavors need different shapes.
TermPtr beta_term(Flavor fl) {
  TermPtr a = alpha_term(fl);
  if (fl == Flavor::Monus) return op_monus(atom("D"), a);
  TermPtr inner = op_dist(a, op_add(atom("I"), atom("Pw")));
  return op_dist(op_add(inner, atom("I")), atom("Pw"));
}

}  // namespace

// ---- public builders ------------------------------------------------------

Nat ackermann_index(const TermPtr& t) {
  if (!t) throw ArityError("rank: null term");
  if (t->arity() != 1) throw ArityError("rank is defined for unary terms");
  std::map<const Term*, Nat> memo;
  return rank_of(t, memo);
}

Nat exact_rank(const TermPtr& t, Flavor fl) { return ackermann_index(expand_exact(t, fl)); }

TermPtr build_addition(const TermPtr& f, const TermPtr& g, Flavor fl) {
  need_unary(f, "addition");
  need_unary(g, "addition");
  Nat kf = ackermann_index(expand_exact(f, fl));
  Nat kg = ackermann_index(expand_exact(g, fl));
  unsigned k = rank_to_index(kf < kg ? kg : kf);
  TermPtr dbs = compose(atom("D"), compose(b_term_display(k), succ()));
  return minus_of(fl, dbs, minus_of(fl, minus_of(fl, dbs, f), g));
}

TermPtr build_conditional(const TermPtr& f, const TermPtr& g, Flavor fl) {
  need_unary(f, "conditional");
  need_unary(g, "conditional");
  TermPtr w = op_add(compose(atom("D"), g), compose(atom("Sgn"), f));
  return compose(atom("Div4"), compose(beta_term(fl), w));
}

TermPtr build_conditional_experimental(const TermPtr& f, const TermPtr& g, Flavor fl) {
  need_unary(f, "conditional");
  need_unary(g, "conditional");
  TermPtr of = compose(atom("O"), f);
  TermPtr inner = minus_of(fl, compose(atom("Sq"), op_add(of, g)), compose(atom("Sq"), of));
  return compose(atom("Div2"), minus_of(fl, inner, compose(atom("Sq"), g)));
}

namespace {

// Registered-family atom when it exists, else the recursive construction.
TermPtr fam_ref(Family fam, unsigned n, Flavor fl);

TermPtr family_term(Family fam, unsigned n, Flavor fl) {
  switch (fam) {
    case Family::O:
      if (n == 0) return minus_of(fl, one_fn(fl), atom("Sgn"));
      if (n == 1) return compose(atom("O"), op_add(atom("O"), atom("P")));
      return compose(fam_ref(Family::O, n - 1, fl), atom("P"));
    case Family::M:
      return pure_iter(power(succ(), Nat(n)));
    case Family::C:
      if (n < 2) throw BadIndex("C_n needs n >= 2");
      if (n == 2) return minus_of(fl, one_fn(fl), atom("Sgn"));
      return op_add(fam_ref(Family::C, n - 1, fl),
                    compose(fam_ref(Family::M, n - 1, fl), fam_ref(Family::O, n - 2, fl)));
    case Family::Mod:
      if (n < 2) throw BadIndex("Mod_n needs n >= 2");
      return pure_iter(fam_ref(Family::C, n, fl));
    case Family::Div: {
      if (n < 2) throw BadIndex("Div_n needs n >= 2");
      TermPtr step = op_add(succ(), compose(atom("O"), compose(fam_ref(Family::Mod, n + 1, fl),
                                                               compose(succ(), succ()))));
      return minus_of(fl, pure_iter(step), atom("I"));
    }
    case Family::F:
      if (n > 5) throw BadIndex("f_" + std::to_string(n) + " is not constructible: its seed f_" +
                                std::to_string(n - 1) + "(1) is not computable");
      if (n == 0) return succ();
      return pure_iter_a(fam_ref(Family::F, n - 1, fl), f_seed(n - 1));
    case Family::B:
      if (n > 5) throw BadIndex("B_" + std::to_string(n) + " is not constructible: its exponent f_" +
                                std::to_string(n - 1) + "(1) is not computable");
      return b_term_display(n);
  }
  throw BadIndex("unknown family");
}

TermPtr fam_ref(Family fam, unsigned n, Flavor fl) {
  unsigned max_atom = 0;
  const char* prefix = "";
  switch (fam) {
    case Family::O: max_atom = 9; prefix = "O"; break;
    case Family::M: max_atom = 15; prefix = "M"; break;
    case Family::C: max_atom = 10; prefix = "C"; break;
    case Family::Mod: max_atom = 10; prefix = "Mod"; break;
    case Family::Div: max_atom = 10; prefix = "Div"; break;
    case Family::F: max_atom = 3; prefix = "f"; break;
    case Family::B: max_atom = 3; prefix = "B"; break;
  }
  if (n <= max_atom) {
    // O_0 and C_2 have their own registered spellings
    if (fam == Family::O && n == 0) return atom("O");
    return atom(prefix + std::to_string(n));
  }
  return family_term(fam, n, fl);
}

}  // namespace

TermPtr build_family(Family fam, unsigned n, Flavor fl) {
  if (n > 64) throw BadIndex("family index " + std::to_string(n) + " exceeds the supported range");
  return family_term(fam, n, fl);
}

TermPtr build_cosignum_from(const TermPtr& fhat, unsigned search_bound) {
  need_unary(fhat, "cosignum");
  EvalConfig cfg;
  cfg.mode = EvalMode::Shallow;
  std::optional<unsigned> descent;
  Nat prev = eval(fhat, {Nat(0)}, cfg).value;
  for (unsigned a = 0; a <= search_bound; ++a) {
    Nat next = eval(fhat, {Nat(a) + 1}, cfg).value;
    if (prev > next) {
      descent = a;
      break;
    }
    prev = std::move(next);
  }
  if (!descent)
    throw NotDecreasingWitness("no point a <= " + std::to_string(search_bound) +
                               " with fhat(a) > fhat(a+1)");
  unsigned a = *descent;
  // The surrounding basis has no number literals, so 0 and 1 arrive as
  // iterations: 0 = M[pr[2,2]], 1 = S . 0, sgn = M[1 . pr[2,1]], pred = M[pr[2,1]].
  TermPtr zero2 = mixed_iter(proj(2, 2));
  TermPtr one1 = compose(succ(), zero2);
  TermPtr sgn = mixed_iter(compose(one1, proj(2, 1)));
  TermPtr pred = mixed_iter(proj(2, 1));
  TermPtr shifted = a == 0 ? fhat : compose(fhat, power(succ(), Nat(a)));
  Nat drop_to = eval(shifted, {Nat(1)}, cfg).value;
  TermPtr h = compose(power(pred, drop_to), shifted);
  return compose(sgn, compose(h, sgn));
}

TermPtr translate_offset(TranslateScheme scheme, const TermPtr& inner, const Nat& a) {
  if (a < 1) throw BadIndex("iteration offset must be at least 1");
  if (!inner) throw ArityError("translate: null step term");
  if (scheme == TranslateScheme::Mixed) {
    if (inner->arity() != 2) throw ArityError("the mixed scheme iterates a binary step");
    TermPtr phat = mixed_iter_a(proj(2, 1), a);
    TermPtr phat_a = power(phat, a);
    TermPtr step = compose(power(succ(), a),
                           subst(inner, {proj(2, 1), compose(phat_a, proj(2, 2))}));
    return compose(phat_a, mixed_iter_a(step, a));
  }
  if (inner->arity() != 1) throw ArityError("the pure scheme iterates a unary step");
  TermPtr two = compose(succ(), compose(succ(), op_monus(succ(), succ())));
  TermPtr pred = op_monus(succ(), two);
  TermPtr pred_a = power(pred, a);
  return compose(pred_a, pure_iter_a(compose_chain({power(succ(), a), inner, pred_a}), a));
}

namespace {

// F-(x) = F(x) - x, valid when F(x) >= x:
//   E . S . (M3 . F . E)+ . (Sq . F+)+
TermPtr s6_minus(const TermPtr& F) {
  return compose_chain({atom("E"), succ(), op_plus(compose_chain({atom("M3"), F, atom("E")})),
                        op_plus(compose(atom("Sq"), op_plus(F)))});
}

// F(+)G(x) = F(x) + G(x)^2, valid when F >= x and G >= x.
TermPtr s6_oplus(const TermPtr& F, const TermPtr& G) {
  return compose(op_plus(compose(s6_minus(F), atom("E"))), op_plus(compose(atom("Sq"), G)));
}

// F(-)G(x) = F(x) - G(x)^2, valid when F >= G^2 and the square fits the
// remainder window (2G >= x suffices).
TermPtr s6_ominus(const TermPtr& F, const TermPtr& G) {
  return compose(s6_minus(compose(op_plus(F), atom("E"))), op_plus(compose(atom("Sq"), G)));
}

// Predecessor on positive inputs: (((Sq+)+)+)(-)S, i.e. (y^2+3y) - (y+1)^2 = y-1.
// The (-) side condition fails at y = 0, but every use below feeds it y >= 1.
TermPtr s6_pred() { return s6_ominus(op_plus(op_plus(op_plus(atom("Sq")))), succ()); }

// F(x)G(x) via the quadratic identity, valid when F >= x and G >= x:
// from U = (F^2+1)^2 + G^2, peeling squares leaves F^2 G^2, then a root.
TermPtr s6_otimes(const TermPtr& F, const TermPtr& G) {
  TermPtr sq = atom("Sq");
  TermPtr u = s6_oplus(compose_chain({sq, succ(), sq, F}), G);   // (F^2+1)^2 + G^2
  TermPtr t1 = s6_ominus(u, compose(sq, F));                     // 2F^2 + G^2 + 1
  TermPtr tsq = compose(sq, compose(s6_pred(), t1));             // (2F^2 + G^2)^2
  TermPtr quad = s6_ominus(tsq, compose(sq, G));                 // ... - G^4
  TermPtr prod = compose(atom("Hf"), compose(atom("Hf"), quad)); // F^4 + F^2 G^2
  return compose(atom("Rt"), s6_ominus(prod, compose(sq, F)));
}

// F+G with no side condition: arguments are inflated by ^+ first, so every
// intermediate dominates x, and ((F+G+2x) - x) - x finishes the job.
TermPtr s6_add(const TermPtr& F, const TermPtr& G) {
  TermPtr fp = op_plus(F), gp = op_plus(G);
  TermPtr square = s6_oplus(s6_oplus(compose(atom("D"), s6_otimes(fp, gp)), fp), gp);
  return s6_minus(s6_minus(compose(atom("Rt"), square)));
}

// F-G for F >= G: E(S((F+G)^2 + 3F + G)) picks the excess out of the next square.
TermPtr s6_sub(const TermPtr& F, const TermPtr& G) {
  TermPtr t = s6_add(s6_add(compose(atom("Sq"), s6_add(F, G)), compose(atom("M3"), F)), G);
  return compose_chain({atom("E"), succ(), t});
}

}  // namespace

TermPtr build_sec6(Sec6Op op, const TermPtr& f, const TermPtr& g, Sec6Variant variant) {
  (void)variant;  // one shape serves all three generators; atoms resolve per dialect
  need_unary(f, "sec6 builder");
  if (op != Sec6Op::PlusArgMinus) need_unary(g, "sec6 builder");
  switch (op) {
    case Sec6Op::PlusArgMinus: return s6_minus(f);
    case Sec6Op::OPlus: return s6_oplus(f, g);
    case Sec6Op::OMinus: return s6_ominus(f, g);
    case Sec6Op::OTimes: return s6_otimes(f, g);
    case Sec6Op::Add: return s6_add(f, g);
    case Sec6Op::Sub: return s6_sub(f, g);
  }
  throw BadIndex("unknown sec6 op");
}

void enforce_sec6_precondition(Sec6Op op, const TermPtr& f, const TermPtr& g,
                               const Nat& lo, const Nat& hi, const EvalConfig& cfg) {
  if (op == Sec6Op::Add) return;
  need_unary(f, "sec6 precondition");
  if (op != Sec6Op::PlusArgMinus) need_unary(g, "sec6 precondition");
  for (Nat x = lo; x <= hi; ++x) {
    Nat fv = eval(f, {x}, cfg).value;
    Nat gv = op == Sec6Op::PlusArgMinus ? Nat(0) : eval(g, {x}, cfg).value;
    const char* what = nullptr;
    switch (op) {
      case Sec6Op::PlusArgMinus:
        if (fv < x) what = "F(x) >= x";
        break;
      case Sec6Op::OPlus:
      case Sec6Op::OTimes:
        if (fv < x) what = "F(x) >= x";
        else if (gv < x) what = "G(x) >= x";
        break;
      case Sec6Op::OMinus:
        if (fv < gv * gv) what = "F(x) >= G(x)^2";
        else if (gv * 2 < x) what = "2 G(x) >= x";
        break;
      case Sec6Op::Sub:
        if (fv < gv) what = "F(x) >= G(x)";
        break;
      case Sec6Op::Add:
        break;
    }
    if (what) throw PreconditionViolated(std::string("side condition ") + what + " fails", x);
  }
}

TermPtr a1_pure_iter(const TermPtr& f, Sec6Variant variant) {
  need_unary(f, "seed-1 iteration rebuild");
  const char* section = variant == Sec6Variant::E   ? "sec6-E"
                        : variant == Sec6Variant::K ? "sec6-K"
                                                    : "sec6-L";
  TermPtr pred = catalog_get(std::string(section) + "/Pa1").term;
  return compose(pred, pure_iter_a(compose_chain({succ(), f, pred}), Nat(1)));
}

}  // namespace prf
