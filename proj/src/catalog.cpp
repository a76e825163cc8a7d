#include "prf/catalog.hpp"

#include <map>
#include <string>
#include <vector>

#include "prf/errors.hpp"
#include "prf/parser.hpp"

namespace prf {

namespace {

TermPtr S() { return succ(); }
TermPtr c1() { return constant(1); }
TermPtr A(const std::string& n) { return atom(n); }
TermPtr pr(unsigned n, unsigned k) { return proj(n, k); }

TermPtr minus5(Flavor fl, const TermPtr& l, const TermPtr& r) {
  return fl == Flavor::Dist ? op_dist(l, r) : op_monus(l, r);
}

TermPtr add_bin(const TermPtr& l, const TermPtr& r) { return subst(A("add2"), {l, r}); }

// ---- shared construction shapes --------------------------------------------

// Unary transcription of the recursion-only predecessor.
TermPtr prim_P() { return subst(prim_rec(constant(0), pr(3, 2)), {pr(1, 1), pr(1, 1)}); }

TermPtr s4_P() { return mixed_iter(pr(2, 1)); }
TermPtr s4_N() { return mixed_iter(compose(A("O"), pr(2, 2))); }
TermPtr s4_D() { return mixed_iter(compose(S(), compose(S(), pr(2, 2)))); }
TermPtr s4_Sq() {
  return mixed_iter(add_bin(compose(S(), pr(2, 2)), compose(A("D"), pr(2, 1))));
}
TermPtr s4_Hf() { return mixed_iter(add_bin(pr(2, 2), compose(A("N"), pr(2, 1)))); }
TermPtr s4_Pw() { return compose(S(), mixed_iter(compose_chain({S(), A("D"), pr(2, 2)}))); }
TermPtr s4_Sgn() { return mixed_iter(compose(c1(), pr(2, 1))); }

// Step of the power-sum helper: with z' = Hf(P(z)), the next value is
// N(z') + z' + Pw(P(x + O(N(z')))) + Pw(P(x + D(O(N(z'))))) + O(O(x)).
TermPtr s4_fprime() {
  TermPtr zp = compose_chain({A("Hf"), A("P"), pr(2, 2)});
  TermPtr n_zp = compose(A("N"), zp);
  TermPtr a3 = compose_chain({A("Pw"), A("P"), add_bin(pr(2, 1), compose(A("O"), n_zp))});
  TermPtr a4 = compose_chain(
      {A("Pw"), A("P"), add_bin(pr(2, 1), compose(A("D"), compose(A("O"), n_zp)))});
  TermPtr a5 = compose(A("O"), compose(A("O"), pr(2, 1)));
  return mixed_iter(add_bin(add_bin(add_bin(add_bin(n_zp, zp), a3), a4), a5));
}
TermPtr s4_g() { return mixed_iter(compose_chain({A("N"), A("Hf"), A("P"), s4_fprime(), pr(2, 1)})); }
TermPtr s4_delta() {
  return compose(s4_g(), add_bin(compose(A("Pw"), pr(2, 1)), compose(A("Pw"), pr(2, 2))));
}
TermPtr s4_Rt() {
  TermPtr probe = subst(A("delta2"), {compose(A("Sq"), compose(S(), pr(2, 2))), compose(S(), pr(2, 1))});
  return mixed_iter(add_bin(pr(2, 2), probe));
}
TermPtr s4_Hsub() {
  return mixed_iter(compose(A("P"), add_bin(pr(2, 2), compose_chain({A("D"), A("N"), A("Rt"), pr(2, 1)}))));
}
TermPtr s4_sub() {
  TermPtr dx = compose(A("D"), pr(2, 1)), dy = compose(A("D"), pr(2, 2));
  TermPtr inner = add_bin(compose(A("Sq"), add_bin(dx, dy)),
                          add_bin(add_bin(dx, add_bin(dx, pr(2, 1))), add_bin(dy, pr(2, 2))));
  return compose(s4_Hsub(), compose(S(), inner));
}

TermPtr ru_one() { return compose(S(), op_amb_minus(S(), S())); }
TermPtr ru_I() { return pure_iter(S()); }
TermPtr ru_D() { return pure_iter(compose(S(), S())); }
TermPtr ru_P() { return op_monus(A("I"), ru_one()); }
TermPtr sec2_Pw() { return compose(S(), pure_iter(op_add(op_add(A("I"), A("I")), ru_one()))); }
TermPtr sec2_V() { return compose_chain({A("Hf"), A("P"), A("Rt"), S(), A("D"), A("D"), A("D")}); }
TermPtr sec2_O() { return subst(prim_rec(c1(), compose(A("P"), pr(3, 3))), {A("I"), A("I")}); }

TermPtr s5_zero(Flavor fl) { return minus5(fl, S(), S()); }
TermPtr s5_one(Flavor fl) { return compose(S(), s5_zero(fl)); }
TermPtr s5_I() { return pure_iter(S()); }
TermPtr s5_D() { return pure_iter(compose(S(), S())); }
TermPtr s5_Pw() { return compose(S(), pure_iter(compose(S(), A("D")))); }
TermPtr s5_Sgn(Flavor fl) { return pure_iter(s5_one(fl)); }
TermPtr s5_P(Flavor fl) { return minus5(fl, A("I"), A("Sgn")); }
TermPtr s5_O(Flavor fl) { return minus5(fl, s5_one(fl), A("Sgn")); }

// Orbit step: each guarded branch owns one residue class, exactly one fires.
TermPtr s5_W(Flavor fl) {
  TermPtr w1 = compose(A("D"), A("O"));
  TermPtr w2 = build_conditional(op_add(A("O"), A("Mod10")), compose(A("Div2"), A("M3")), fl);
  TermPtr w3 = build_conditional(op_add(op_add(A("O"), compose(A("O"), A("Mod2"))), A("Mod5")),
                                 compose(A("Div5"), A("D")), fl);
  TermPtr w4 = build_conditional(op_add(op_add(A("O"), A("Mod3")), compose(A("O"), A("Mod5"))),
                                 compose(A("Div3"), A("D")), fl);
  TermPtr w5 = build_conditional(
      op_add(op_add(A("O"), compose(A("O"), A("Mod3"))), compose(A("O"), A("Mod5"))),
      compose(A("Div2"), A("M15")), fl);
  return op_add(op_add(op_add(op_add(w1, w2), w3), w4), w5);
}
TermPtr s5_Q() { return op_add(compose_chain({A("Sgn"), A("Mod3"), pure_iter(A("W"))}), A("O")); }
TermPtr s5_R() { return pure_iter(op_add(S(), compose_chain({A("D"), A("Q"), power(S(), 4)}))); }
TermPtr s5_Sq() { return pure_iter(compose(S(), A("R"))); }
TermPtr s5_Rt(Flavor fl) { return compose(A("Div2"), minus5(fl, A("R"), A("I"))); }

TermPtr s6e_Sgn() { return pure_iter(c1()); }
TermPtr s6e_zero() { return compose(A("E"), c1()); }
TermPtr s6e_Mod3() { return pure_iter(compose(A("E"), compose(S(), S()))); }
TermPtr s6e_D() { return op_plus(op_plus(s6e_zero())); }
TermPtr s6e_M3() { return op_plus(A("D")); }
TermPtr s6e_O() { return compose_chain({A("E"), A("D"), S(), A("Sgn")}); }
TermPtr s6e_Q() { return compose(A("O"), A("E")); }
TermPtr s6e_R() {
  return pure_iter(compose(op_plus(compose_chain({A("D"), A("Q"), S(), S(), S()})), S()));
}
TermPtr s6e_Sq() { return pure_iter(compose(S(), A("R"))); }
TermPtr s6e_Hf() {
  TermPtr three_halves = pure_iter(compose(S(), op_plus(A("Mod3"))));
  return build_sec6(Sec6Op::PlusArgMinus, three_halves, nullptr, Sec6Variant::E);
}
TermPtr s6e_Rt() {
  return compose(A("Hf"), build_sec6(Sec6Op::PlusArgMinus, A("R"), nullptr, Sec6Variant::E));
}

// Pairing-based subtraction templates: the pair left-inverse K peels the
// excess of the argument over a triangular number.
TermPtr k_imin(const TermPtr& f) {  // x - F(x), for F(x) <= x
  return compose_chain({A("K"), S(), S(), S(), op_plus(op_plus(compose(A("Z"), op_plus(f))))});
}
TermPtr k_dmin(const TermPtr& f) {  // 2x - F(x), for F(x) <= 2x
  return compose_chain(
      {A("K"), S(), S(), S(),
       op_plus(op_plus(op_plus(op_plus(compose(A("Z"), op_plus(op_plus(f)))))))});
}
TermPtr s6k_zero() { return compose(A("K"), c1()); }
TermPtr s6k_Y() { return pure_iter(compose(op_plus(compose(A("Sgn"), A("K"))), S())); }
TermPtr s6k_Z() { return pure_iter(compose(S(), compose(S(), op_plus(A("K"))))); }
TermPtr s6k_Rt() { return k_dmin(A("Y")); }
TermPtr s6k_Sq() { return pure_iter(op_plus(compose(op_plus(op_plus(c1())), A("Rt")))); }
TermPtr s6k_E() { return k_imin(compose(A("Sq"), A("Rt"))); }
TermPtr s6l_K() {
  return compose_chain({A("L"), op_plus(c1()), op_plus(compose(op_plus(op_plus(c1())), A("L")))});
}

TermPtr a1e_O() { return pure_iter_a(A("E"), 1); }
TermPtr a1e_zero() { return compose(A("E"), A("O")); }
TermPtr a1e_one() { return compose(A("O"), a1e_zero()); }
TermPtr a1e_S() { return op_plus(a1e_one()); }
TermPtr a1e_D() { return op_plus(op_plus(a1e_zero())); }
TermPtr a1e_Q() { return compose(A("O"), A("E")); }
TermPtr a1e_G() {
  TermPtr step = compose(op_plus(compose_chain({A("D"), A("Q"), S(), S()})), S());
  return pure_iter_a(pure_iter_a(step, 1), 1);
}
TermPtr a1e_P() { return compose_chain({A("E"), S(), S(), op_plus(op_plus(op_plus(A("Gsq"))))}); }

TermPtr a1k_O() { return pure_iter_a(A("K"), 1); }
TermPtr a1k_zero() { return compose(A("K"), A("O")); }
TermPtr a1k_one() { return compose(A("O"), a1k_zero()); }
TermPtr a1k_S() { return op_plus(a1k_one()); }
TermPtr a1k_H() { return compose(S(), pure_iter_a(compose_chain({S(), op_plus(A("K")), S()}), 1)); }
TermPtr a1k_P() { return compose_chain({A("K"), S(), S(), S(), op_plus(op_plus(A("Hqd")))}); }

TermPtr a1l_one() { return pure_iter_a(A("L"), 1); }
TermPtr a1l_K() {
  return compose_chain({A("L"), op_plus(a1l_one()), op_plus(compose(op_plus(op_plus(a1l_one())), A("L")))});
}

TermPtr ra_Phat(unsigned a) { return mixed_iter_a(pr(2, 1), a); }
TermPtr ra_Abar(unsigned a) { return mixed_iter_a(pr(2, 2), a); }
TermPtr ra_Ohat(unsigned a) {
  TermPtr zero_a = compose(power(ra_Phat(a), a), ra_Abar(a));
  return mixed_iter_a(compose(zero_a, pr(2, 1)), a);
}

// ---- dialects ---------------------------------------------------------------

struct Dialect {
  std::map<std::string, TermPtr> defs;
  TermPtr succ_rewrite;  // membership under bases without S
  TermPtr one_rewrite;   // membership under bases without constants
};

std::map<std::string, Dialect> make_dialects() {
  std::map<std::string, Dialect> m;

  {
    Dialect d;
    d.defs = {{"I", pr(1, 1)}, {"P", prim_P()}};
    m["prim"] = d;
  }
  {
    Dialect d;
    d.defs = {{"I", pr(1, 1)},   {"P", s4_P()},   {"N", s4_N()},     {"D", s4_D()},
              {"Sq", s4_Sq()},   {"Hf", s4_Hf()}, {"Pw", s4_Pw()},   {"Sgn", s4_Sgn()},
              {"Rt", s4_Rt()},   {"delta2", s4_delta()}};
    m["sec4"] = d;
    m["sec4-noO"] = d;
    m["sec4-ma"] = d;
  }
  {
    Dialect d;
    d.defs = {{"I", ru_I()}, {"D", ru_D()}, {"P", ru_P()}, {"Pw", sec2_Pw()}};
    m["robinson-unary"] = d;
  }
  {
    Dialect d;
    TermPtr f1 = pure_iter_a(S(), 2);
    TermPtr f2 = pure_iter_a(f1, 3);
    TermPtr f3 = pure_iter_a(f2, 5);
    TermPtr b1 = pure_iter(compose(power(S(), 2), S()));
    TermPtr b2 = pure_iter(compose(power(S(), 3), b1));
    TermPtr b3 = pure_iter(compose(power(S(), 5), b2));
    d.defs = {{"f0", S()}, {"f1", f1}, {"f2", f2}, {"f3", f3},
              {"B0", S()}, {"B1", b1}, {"B2", b2}, {"B3", b3}};
    m["robinson-multi"] = d;
  }
  for (Flavor fl : {Flavor::Dist, Flavor::Monus}) {
    Dialect d;
    d.defs["I"] = s5_I();
    d.defs["D"] = s5_D();
    d.defs["Pw"] = s5_Pw();
    d.defs["Sgn"] = s5_Sgn(fl);
    d.defs["P"] = s5_P(fl);
    d.defs["O"] = s5_O(fl);
    for (unsigned n = 0; n <= 9; ++n) d.defs["O" + std::to_string(n)] = build_family(Family::O, n, fl);
    for (unsigned n = 0; n <= 15; ++n) d.defs["M" + std::to_string(n)] = build_family(Family::M, n, fl);
    for (unsigned n = 2; n <= 10; ++n) {
      d.defs["C" + std::to_string(n)] = build_family(Family::C, n, fl);
      d.defs["Mod" + std::to_string(n)] = build_family(Family::Mod, n, fl);
      d.defs["Div" + std::to_string(n)] = build_family(Family::Div, n, fl);
    }
    d.defs["W"] = s5_W(fl);
    d.defs["Q"] = s5_Q();
    d.defs["R"] = s5_R();
    d.defs["Sq"] = s5_Sq();
    d.defs["Hf"] = build_family(Family::Div, 2, fl);
    d.defs["Rt"] = s5_Rt(fl);
    d.defs["B0"] = S();
    d.defs["B1"] = pure_iter(compose(power(S(), 2), S()));
    d.defs["B2"] = pure_iter(compose(power(S(), 3), d.defs["B1"]));
    d.defs["B3"] = pure_iter(compose(power(S(), 5), d.defs["B2"]));
    m[fl == Flavor::Dist ? "sec5-dist" : "sec5-monus"] = std::move(d);
  }
  {
    Dialect d;
    d.defs = {{"Sgn", s6e_Sgn()}, {"Mod3", s6e_Mod3()}, {"D", s6e_D()}, {"M3", s6e_M3()},
              {"O", s6e_O()},     {"Q", s6e_Q()},       {"R", s6e_R()}, {"Sq", s6e_Sq()},
              {"Hf", s6e_Hf()},   {"Rt", s6e_Rt()}};
    d.succ_rewrite = op_plus(c1());
    m["sec6-E"] = std::move(d);
  }
  {
    Dialect d;
    d.defs = {{"Sgn", s6e_Sgn()}, {"Y", s6k_Y()}, {"Z", s6k_Z()},
              {"Rt", s6k_Rt()},   {"Sq", s6k_Sq()}, {"E", s6k_E()},
              {"D", op_plus(op_plus(s6k_zero()))}, {"M3", s6e_M3()},
              {"O", s6e_O()},     {"Q", s6e_Q()}};
    d.succ_rewrite = op_plus(c1());
    m["sec6-K"] = d;
    d.defs["K"] = s6l_K();
    m["sec6-L"] = std::move(d);
  }
  {
    Dialect d;
    d.defs = {{"O", a1e_O()}, {"D", a1e_D()}, {"Q", a1e_Q()}, {"Gsq", a1e_G()}};
    d.succ_rewrite = op_plus(a1e_one());
    d.one_rewrite = a1e_one();
    m["sec6-E-a1"] = std::move(d);
  }
  {
    Dialect d;
    d.defs = {{"O", a1k_O()}, {"Hqd", a1k_H()}};
    d.succ_rewrite = op_plus(a1k_one());
    d.one_rewrite = a1k_one();
    m["sec6-K-a1"] = d;
    d.defs["K"] = a1l_K();
    d.succ_rewrite = op_plus(a1l_one());
    d.one_rewrite = a1l_one();
    m["sec6-L-a1"] = std::move(d);
  }

  return m;
}

const std::map<std::string, Dialect>& dialects() {
  static const std::map<std::string, Dialect> m = make_dialects();
  return m;
}

const Dialect& dialect_for(const std::string& basis) {
  auto it = dialects().find(basis);
  if (it == dialects().end()) throw UnknownName("no definitional dialect for basis " + basis);
  return it->second;
}

// ---- catalog ----------------------------------------------------------------

struct CatalogData {
  std::vector<CatalogEntry> entries;
  std::map<std::string, std::size_t> index;
};

constexpr std::uint64_t kB = 5'000'000;

CatalogData make_catalog() {
  CatalogData d;
  auto put = [&](const std::string& section, const std::string& name, TermPtr t,
                 const std::string& basis, const std::string& oracle_ref, Nat lo, Nat hi,
                 std::uint64_t budget = kB) {
    CatalogEntry e{section + "/" + name, section,       name, std::move(t), basis, oracle_ref,
                   std::move(lo),        std::move(hi), budget};
    d.index[e.id] = d.entries.size();
    d.entries.push_back(std::move(e));
  };

  // -- sec2: warm-up reconstructions over several small bases
  put("sec2", "I", ru_I(), "robinson-unary", "I", 0, 1024);
  put("sec2", "zero", pure_iter(A("I")), "robinson-unary", "zero", 0, 1024);
  put("sec2", "D", s4_D(), "sec4", "D", 0, 255);
  put("sec2", "O", sec2_O(), "prim", "O", 0, 255);
  put("sec2", "Pw", sec2_Pw(), "robinson-unary", "Pw", 0, 255);
  put("sec2", "V", sec2_V(), "robinson-unary", "V", 0, 255);

  // -- sec4: mixed iteration over addition
  put("sec4", "P", s4_P(), "sec4", "P", 0, 512);
  put("sec4", "N", s4_N(), "sec4", "N", 0, 512);
  put("sec4", "D", s4_D(), "sec4", "D", 0, 512);
  put("sec4", "Sq", s4_Sq(), "sec4", "Sq", 0, 512);
  put("sec4", "Hf", s4_Hf(), "sec4", "Hf", 0, 512);
  put("sec4", "Pw", s4_Pw(), "sec4", "Pw", 0, 512);
  put("sec4", "Sgn", s4_Sgn(), "sec4", "Sgn", 0, 512);
  put("sec4", "fprime", s4_fprime(), "sec4", "fprime", 0, 2048, 20'000'000);
  put("sec4", "g", s4_g(), "sec4", "gpow", 0, 131072, 40'000'000);
  put("sec4", "delta", s4_delta(), "sec4", "delta2", 0, 16, 40'000'000);
  put("sec4", "Rt", s4_Rt(), "sec4", "Rt", 0, 512, 20'000'000);
  put("sec4", "Hsub", s4_Hsub(), "sec4", "hsub", 0, 4096, 20'000'000);
  put("sec4", "sub", s4_sub(), "sec4", "monus2", 0, 64, 20'000'000);

  // -- sec5, both readings of the written minus
  for (Flavor fl : {Flavor::Dist, Flavor::Monus}) {
    const std::string sec = fl == Flavor::Dist ? "sec5-dist" : "sec5-monus";
    put(sec, "zero", s5_zero(fl), sec, "zero", 0, 1024);
    put(sec, "one", s5_one(fl), sec, "one", 0, 1024);
    put(sec, "I", s5_I(), sec, "I", 0, 1024);
    put(sec, "D", s5_D(), sec, "D", 0, 1024);
    put(sec, "Pw", s5_Pw(), sec, "Pw", 0, 256);
    put(sec, "Sgn", s5_Sgn(fl), sec, "Sgn", 0, 1024);
    put(sec, "P", s5_P(fl), sec, "P", 0, 1024);
    put(sec, "O", s5_O(fl), sec, "O", 0, 1024);
    for (unsigned n = 0; n <= 9; ++n)
      put(sec, "O" + std::to_string(n), build_family(Family::O, n, fl), sec,
          "O" + std::to_string(n), 0, 512);
    for (unsigned n = 0; n <= 15; ++n)
      put(sec, "M" + std::to_string(n), build_family(Family::M, n, fl), sec,
          "M" + std::to_string(n), 0, 512);
    for (unsigned n = 2; n <= 10; ++n)
      put(sec, "C" + std::to_string(n), build_family(Family::C, n, fl), sec,
          "C" + std::to_string(n), 0, 512);
    for (unsigned n = 2; n <= 10; ++n)
      put(sec, "Mod" + std::to_string(n), build_family(Family::Mod, n, fl), sec,
          "Mod" + std::to_string(n), 0, 512);
    for (unsigned n = 2; n <= 10; ++n)
      put(sec, "Div" + std::to_string(n), build_family(Family::Div, n, fl), sec,
          "Div" + std::to_string(n), 0, 512);
    put(sec, "W", s5_W(fl), sec, "W", 0, 400);
    put(sec, "Q", s5_Q(), sec, "Q", 1, 400);
    put(sec, "R", s5_R(), sec, "R", 0, 400, 20'000'000);
    put(sec, "Sq", s5_Sq(), sec, "Sq", 0, 400, 20'000'000);
    put(sec, "Rt", s5_Rt(fl), sec, "Rt", 0, 400, 20'000'000);
    put(sec, "Hf", build_family(Family::Div, 2, fl), sec, "Hf", 0, 1024);
    for (unsigned n = 0; n <= 3; ++n)
      put(sec, "f" + std::to_string(n), build_family(Family::F, n, fl), "robinson-multi",
          "f" + std::to_string(n), 0, n <= 1 ? 1024 : n == 2 ? 256 : 40);
    put(sec, "B0", build_family(Family::B, 0, fl), sec, "B0", 0, 1024);
    put(sec, "B1", build_family(Family::B, 1, fl), sec, "B1", 0, 512);
    put(sec, "B2", build_family(Family::B, 2, fl), sec, "B2", 0, 400);
    put(sec, "B3", build_family(Family::B, 3, fl), sec, "B3", 0, 3);
  }

  // -- sec6, generator E
  put("sec6-E", "S", op_plus(c1()), "sec6-E", "f0", 0, 1024);
  put("sec6-E", "Sgn", s6e_Sgn(), "sec6-E", "Sgn", 0, 1024);
  put("sec6-E", "zero", s6e_zero(), "sec6-E", "zero", 0, 1024);
  put("sec6-E", "Mod3", s6e_Mod3(), "sec6-E", "Mod3", 0, 512);
  put("sec6-E", "D", s6e_D(), "sec6-E", "D", 0, 512);
  put("sec6-E", "M3", s6e_M3(), "sec6-E", "M3", 0, 512);
  put("sec6-E", "O", s6e_O(), "sec6-E", "O", 0, 512);
  put("sec6-E", "Q", s6e_Q(), "sec6-E", "Q", 0, 512);
  put("sec6-E", "R", s6e_R(), "sec6-E", "R", 0, 256);
  put("sec6-E", "Sq", s6e_Sq(), "sec6-E", "Sq", 0, 256);
  put("sec6-E", "Hf", s6e_Hf(), "sec6-E", "Hf", 0, 256);
  put("sec6-E", "Rt", s6e_Rt(), "sec6-E", "Rt", 0, 256);
  put("sec6-E", "Oa1", a1e_O(), "sec6-E-a1", "O", 0, 256);
  put("sec6-E", "zeroa1", a1e_zero(), "sec6-E-a1", "zero", 0, 256);
  put("sec6-E", "onea1", a1e_one(), "sec6-E-a1", "one", 0, 256);
  put("sec6-E", "Sa1", a1e_S(), "sec6-E-a1", "f0", 0, 256);
  put("sec6-E", "Da1", a1e_D(), "sec6-E-a1", "D", 0, 256);
  put("sec6-E", "Qa1", a1e_Q(), "sec6-E-a1", "Q", 0, 256);
  put("sec6-E", "Ga1", a1e_G(), "sec6-E-a1", "Gsq", 0, 128);
  put("sec6-E", "Pa1", a1e_P(), "sec6-E-a1", "P", 1, 256);

  // -- sec6, generator K
  put("sec6-K", "zero", s6k_zero(), "sec6-K", "zero", 0, 1024);
  put("sec6-K", "S", op_plus(c1()), "sec6-K", "f0", 0, 1024);
  put("sec6-K", "Sgn", s6e_Sgn(), "sec6-K", "Sgn", 0, 1024);
  put("sec6-K", "Y", s6k_Y(), "sec6-K", "Y", 0, 512);
  put("sec6-K", "Z", s6k_Z(), "sec6-K", "Z", 0, 512);
  put("sec6-K", "Rt", s6k_Rt(), "sec6-K", "Rt", 0, 256);
  put("sec6-K", "Sq", s6k_Sq(), "sec6-K", "Sq", 0, 256);
  put("sec6-K", "E", s6k_E(), "sec6-K", "E", 0, 256);
  put("sec6-K", "Oa1", a1k_O(), "sec6-K-a1", "O", 0, 256);
  put("sec6-K", "zeroa1", a1k_zero(), "sec6-K-a1", "zero", 0, 256);
  put("sec6-K", "onea1", a1k_one(), "sec6-K-a1", "one", 0, 256);
  put("sec6-K", "Sa1", a1k_S(), "sec6-K-a1", "f0", 0, 256);
  put("sec6-K", "Ha1", a1k_H(), "sec6-K-a1", "Hqd", 0, 256);
  put("sec6-K", "Pa1", a1k_P(), "sec6-K-a1", "P", 1, 256);

  // -- sec6, generator L (everything runs through the bridge to K)
  put("sec6-L", "K", s6l_K(), "sec6-L", "K", 0, 1024);
  put("sec6-L", "zero", s6k_zero(), "sec6-L", "zero", 0, 1024);
  put("sec6-L", "S", op_plus(c1()), "sec6-L", "f0", 0, 1024);
  put("sec6-L", "Sgn", s6e_Sgn(), "sec6-L", "Sgn", 0, 1024);
  put("sec6-L", "Y", s6k_Y(), "sec6-L", "Y", 0, 512);
  put("sec6-L", "Z", s6k_Z(), "sec6-L", "Z", 0, 512);
  put("sec6-L", "Rt", s6k_Rt(), "sec6-L", "Rt", 0, 256);
  put("sec6-L", "Sq", s6k_Sq(), "sec6-L", "Sq", 0, 256);
  put("sec6-L", "E", s6k_E(), "sec6-L", "E", 0, 256);
  put("sec6-L", "onea1", a1l_one(), "sec6-L-a1", "one", 0, 256);
  put("sec6-L", "Ka1", a1l_K(), "sec6-L-a1", "K", 0, 512);
  put("sec6-L", "Oa1", a1k_O(), "sec6-L-a1", "O", 0, 256);
  put("sec6-L", "zeroa1", a1k_zero(), "sec6-L-a1", "zero", 0, 256);
  put("sec6-L", "Sa1", a1k_S(), "sec6-L-a1", "f0", 0, 256);
  put("sec6-L", "Ha1", a1k_H(), "sec6-L-a1", "Hqd", 0, 256);
  put("sec6-L", "Pa1", a1k_P(), "sec6-L-a1", "P", 1, 256);

  // -- seeded mixed iteration
  for (unsigned a = 1; a <= 3; ++a) {
    put("remark-a", "Phat" + std::to_string(a), ra_Phat(a), "sec4-ma", "Phat" + std::to_string(a), 0, 512);
    put("remark-a", "Abar" + std::to_string(a), ra_Abar(a), "sec4-ma", "Abar" + std::to_string(a), 0, 512);
    put("remark-a", "Ohat" + std::to_string(a), ra_Ohat(a), "sec4-ma", "Ohat" + std::to_string(a), 0, 512);
  }

  return d;
}

const CatalogData& data() {
  static const CatalogData d = make_catalog();
  return d;
}

// ---- membership expansion ---------------------------------------------------

bool sec5_flavor(const std::string& basis, Flavor& out) {
  if (basis == "sec5-dist") { out = Flavor::Dist; return true; }
  if (basis == "sec5-monus") { out = Flavor::Monus; return true; }
  return false;
}

struct MembExpander {
  const Basis& b;
  const Dialect& d;
  std::optional<Flavor> addfl;
  std::map<std::string, TermPtr> atom_cache;

  TermPtr stub_sum(const TermPtr& f, const TermPtr& g) {
    // Structure-faithful placeholder for the difference-coded sum: the real
    // rewrite uses a B term whose index depends on both operands' ranks; the
    // placeholder keeps the exact node vocabulary with a one-step ladder.
    TermPtr stub_b = pure_iter(compose(power(succ(), 1), succ()));
    TermPtr dbs = compose(pure_iter(compose(succ(), succ())), compose(stub_b, succ()));
    return minus5(*addfl, dbs, minus5(*addfl, minus5(*addfl, dbs, f), g));
  }

  TermPtr go(const TermPtr& t) {
    switch (t->kind()) {
      case Kind::Succ:
        if (!b.allow_succ && d.succ_rewrite) return go(d.succ_rewrite);
        return t;
      case Kind::Const:
        if (!b.allow_const && d.one_rewrite && t->number() == 1) return go(d.one_rewrite);
        return t;
      case Kind::Atom: {
        auto def = d.defs.find(t->atom_name());
        if (def == d.defs.end()) return t;
        auto hit = atom_cache.find(t->atom_name());
        if (hit != atom_cache.end()) return hit->second;
        TermPtr e = go(def->second);
        atom_cache.emplace(t->atom_name(), e);
        return e;
      }
      case Kind::OpAdd:
        if (addfl) return stub_sum(go(t->child(0)), go(t->child(1)));
        break;
      case Kind::OpAmbMinus:
        if (addfl) return minus5(*addfl, go(t->child(0)), go(t->child(1)));
        break;
      default:
        break;
    }
    std::vector<TermPtr> kids;
    kids.reserve(t->child_count());
    for (const auto& c : t->children()) kids.push_back(go(c));
    return term_with_children(t, kids);
  }
};

}  // namespace

const std::vector<CatalogEntry>& catalog_all() { return data().entries; }

const CatalogEntry& catalog_get(const std::string& id) {
  auto it = data().index.find(id);
  if (it == data().index.end()) throw UnknownId("no catalog entry named " + id);
  return data().entries[it->second];
}

std::vector<const CatalogEntry*> catalog_section(const std::string& section) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : data().entries)
    if (e.section == section) out.push_back(&e);
  if (out.empty()) throw UnknownId("no catalog section named " + section);
  return out;
}

std::vector<std::string> catalog_sections() {
  return {"sec2", "sec4", "sec5-dist", "sec5-monus", "sec6-E", "sec6-K", "sec6-L", "remark-a"};
}

std::function<TermPtr(const std::string&)> dialect_expander(const std::string& basis) {
  const Dialect& d = dialect_for(basis);
  return [&d](const std::string& name) -> TermPtr {
    auto it = d.defs.find(name);
    return it == d.defs.end() ? nullptr : it->second;
  };
}

EvalConfig deep_config(const std::string& basis, std::uint64_t budget) {
  EvalConfig cfg;
  cfg.budget = budget;
  cfg.mode = EvalMode::Deep;
  cfg.expander = dialect_expander(basis);
  return cfg;
}

TermPtr expand_for_membership(const TermPtr& t, const std::string& basis) {
  if (!t) throw ArityError("expand: null term");
  const Basis& b = basis_get(basis);
  MembExpander ex{b, dialect_for(basis), std::nullopt, {}};
  Flavor fl;
  if (sec5_flavor(basis, fl)) ex.addfl = fl;
  return ex.go(t);
}

std::string export_lets(const std::string& section) {
  std::string out;
  out += "# " + section + " constructions; load with --lets\n";
  for (const CatalogEntry* e : catalog_section(section)) {
    if (e->name == "S") {
      out += "# S is primitive in expressions; its reconstruction here reads: " +
             to_source(e->term) + "\n";
      continue;
    }
    if (reserved_binding_name(e->name)) {  // e.g. sec4's "sub"
      out += "# " + e->name + " cannot be bound by a let; it reads: " + to_source(e->term) + "\n";
      continue;
    }
    out += "let " + e->name + " = " + to_source(e->term) + ";\n";
  }
  return out;
}

}  // namespace prf
