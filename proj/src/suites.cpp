#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "prf/catalog.hpp"
#include "prf/errors.hpp"
#include "prf/harness.hpp"
#include "prf/oracle.hpp"

namespace prf {

namespace {

using Specs = std::vector<CheckSpec>;

// Every entry is compared shallow against its reference on the full feasible
// range; a subset gets deep twins on ranges priced by their expansion cost.
// Operators whose expansions nest earlier iterations (the square-root family
// and everything downstream of it) are checked shallow only: their pieces are
// deep-verified upstream, then trusted as computed atoms.

CheckSpec entry_shallow(const CatalogEntry& e) {
  CheckSpec s;
  s.id = e.id + ".shallow";
  s.term = e.term;
  s.oracle_ref = e.oracle_ref;
  s.lo = e.check_lo;
  s.hi = e.feasible_x;
  s.mode = EvalMode::Shallow;
  s.budget = e.suggested_budget;
  return s;
}

CheckSpec entry_deep(const CatalogEntry& e, const Nat& hi, std::uint64_t budget = 50'000'000) {
  CheckSpec s;
  s.id = e.id + ".deep";
  s.term = e.term;
  s.oracle_ref = e.oracle_ref;
  s.lo = e.check_lo;
  s.hi = hi;
  s.mode = EvalMode::Deep;
  s.basis = e.basis;
  s.budget = budget;
  return s;
}

void push_section_shallow(Specs& v, const std::string& section) {
  for (const CatalogEntry* e : catalog_section(section)) v.push_back(entry_shallow(*e));
}

void push_deep(Specs& v, const std::string& id, const Nat& hi, std::uint64_t budget = 50'000'000) {
  v.push_back(entry_deep(catalog_get(id), hi, budget));
}

// ---- sec2 -------------------------------------------------------------------

Specs sec2_specs() {
  Specs v;
  push_section_shallow(v, "sec2");
  push_deep(v, "sec2/I", 1024);
  push_deep(v, "sec2/zero", 512);
  push_deep(v, "sec2/D", 512);
  push_deep(v, "sec2/O", 255);
  push_deep(v, "sec2/Pw", 16);
  push_deep(v, "sec2/V", 255);
  return v;
}

// ---- sec4 -------------------------------------------------------------------

std::vector<std::pair<Nat, Nat>> exp_sorted_pairs(unsigned max) {
  std::vector<std::pair<Nat, Nat>> ps;
  for (unsigned x = 0; x <= max; ++x)
    for (unsigned y = 0; y <= max; ++y) ps.push_back({x, y});
  std::sort(ps.begin(), ps.end(), [](const auto& a, const auto& b) {
    Nat wa = nat_pow2(a.first) + nat_pow2(a.second);
    Nat wb = nat_pow2(b.first) + nat_pow2(b.second);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return ps;
}

Specs sec4_specs() {
  Specs v;
  for (const CatalogEntry* e : catalog_section("sec4"))
    if (e->term->arity() == 1) v.push_back(entry_shallow(*e));

  {  // probe points ordered by 2^x + 2^y so the power-sum frontier only grows
    const CatalogEntry& e = catalog_get("sec4/delta");
    CheckSpec s;
    s.id = e.id + ".shallow";
    s.term = e.term;
    s.oracle_ref = e.oracle_ref;
    s.pairs = exp_sorted_pairs(16);
    s.budget = e.suggested_budget;
    v.push_back(std::move(s));
  }
  {  // y <= x, ordered by the encoded iteration length 4(x+y)^2 + 5x + 5y + 1
    const CatalogEntry& e = catalog_get("sec4/sub");
    CheckSpec s;
    s.id = e.id + ".shallow";
    s.term = e.term;
    s.oracle_ref = e.oracle_ref;
    for (unsigned sum = 0; sum <= 128; ++sum)
      for (unsigned y = 0; 2 * y <= sum; ++y) {
        unsigned x = sum - y;
        if (x <= 64) s.pairs.push_back({x, y});
      }
    s.budget = e.suggested_budget;
    v.push_back(std::move(s));
  }

  push_deep(v, "sec4/P", 512);
  push_deep(v, "sec4/N", 512);
  push_deep(v, "sec4/D", 512);
  push_deep(v, "sec4/Sq", 512);
  push_deep(v, "sec4/Hf", 512);
  push_deep(v, "sec4/Sgn", 512);
  push_deep(v, "sec4/Pw", 16);
  push_deep(v, "sec4/fprime", 20);
  push_deep(v, "sec4/g", 16);
  push_deep(v, "sec4/Rt", 12);
  {
    const CatalogEntry& e = catalog_get("sec4/delta");
    CheckSpec s = entry_deep(e, 0);
    s.pairs = exp_sorted_pairs(3);
    v.push_back(std::move(s));
  }
  return v;
}

// ---- sec5 -------------------------------------------------------------------

TermPtr guard_term(const std::string& name) {
  if (name == "S") return succ();
  return atom(name);
}

std::function<Nat(const Nat&)> guard_fn(const std::string& name) {
  if (name == "S") return oracle::unary_fn("f0");
  return oracle::unary_fn(name);
}

Specs sec5_specs(Flavor fl, bool experimental) {
  const std::string sec = fl == Flavor::Dist ? "sec5-dist" : "sec5-monus";
  Specs v;
  push_section_shallow(v, sec);

  for (const char* n : {"zero", "one", "I", "D", "Sgn", "P", "O"})
    push_deep(v, sec + "/" + n, n[0] == 'z' || n[0] == 'o' || n[0] == 'I' || n[0] == 'D' ? 512 : 256);
  push_deep(v, sec + "/Pw", 16);
  for (unsigned n = 0; n <= 9; ++n) push_deep(v, sec + "/O" + std::to_string(n), 64);
  for (unsigned n = 0; n <= 15; ++n) push_deep(v, sec + "/M" + std::to_string(n), 256);
  for (unsigned n = 2; n <= 10; ++n) {
    push_deep(v, sec + "/C" + std::to_string(n), 64);
    push_deep(v, sec + "/Mod" + std::to_string(n), 64);
    push_deep(v, sec + "/Div" + std::to_string(n), 64);
  }
  push_deep(v, sec + "/Hf", 64);
  push_deep(v, sec + "/f0", 256);
  push_deep(v, sec + "/f1", 256);
  push_deep(v, sec + "/f2", 64);
  push_deep(v, sec + "/f3", 16);
  push_deep(v, sec + "/B0", 512);
  push_deep(v, sec + "/B1", 256);
  push_deep(v, sec + "/B2", 12);
  push_deep(v, sec + "/B3", 2);

  // guarded composition: value when the guard vanishes, zero otherwise
  auto conditional = [&](const std::string& fn, const std::string& gn, const Nat& deep_hi) {
    TermPtr cond = build_conditional(guard_term(fn), guard_term(gn), fl);
    auto fF = guard_fn(fn), fG = guard_fn(gn);
    auto ref = [fF, fG](const Nat& x) { return fF(x) == 0 ? fG(x) : Nat(0); };
    CheckSpec s;
    s.id = sec + "/cond." + fn + "." + gn + ".shallow";
    s.term = cond;
    s.ref_fn = ref;
    s.hi = 256;
    v.push_back(s);
    s.id = sec + "/cond." + fn + "." + gn + ".deep";
    s.mode = EvalMode::Deep;
    s.basis = sec;
    s.hi = deep_hi;  // keeps the embedded power argument within reach
    s.budget = 200'000'000;  // the guard tower roughly quadruples per x; x=10 needs ~7e7
    v.push_back(std::move(s));

    if (experimental) {
      CheckSpec x;
      x.id = sec + "/cond-short." + fn + "." + gn + ".shallow";
      x.term = build_conditional_experimental(guard_term(fn), guard_term(gn), fl);
      x.ref_fn = ref;
      x.hi = 256;
      x.informational = true;
      v.push_back(std::move(x));
    }
  };
  conditional("O", "S", 10);
  conditional("Sgn", "S", 10);
  conditional("Sgn", "D", 5);
  conditional("Mod3", "S", 10);
  conditional("O", "D", 5);

  // sums routed through the difference ladder
  auto addition = [&](const std::string& fn, const std::string& gn, const Nat& shallow_hi,
                      const Nat& deep_hi) {
    TermPtr sum = build_addition(guard_term(fn), guard_term(gn), fl);
    auto fF = guard_fn(fn), fG = guard_fn(gn);
    CheckSpec s;
    s.id = sec + "/add." + fn + "." + gn + ".shallow";
    s.term = sum;
    s.ref_fn = [fF, fG](const Nat& x) { return fF(x) + fG(x); };
    s.hi = shallow_hi;
    v.push_back(s);
    s.id = sec + "/add." + fn + "." + gn + ".deep";
    s.mode = EvalMode::Deep;
    s.basis = sec;
    s.hi = deep_hi;
    s.budget = 50'000'000;
    v.push_back(std::move(s));
  };
  addition("S", "S", 256, 16);
  addition("I", "I", 256, 16);
  addition("I", "S", 256, 16);
  // Under the distance dialect the oscillator and predecessor expand at rank 3,
  // so their sum rides the third rung, evaluable only through x=2 (the next
  // rung value needs a power tower far past any integer guard).
  if (fl == Flavor::Dist)
    addition("O", "P", 2, 1);
  else
    addition("O", "P", 256, 6);  // rank 2: ladder arguments grow like 3^x
  addition("D", "Sgn", 2, 1);   // rank 3: the next ladder value already has ~10^176 digits' worth of iterations

  return v;
}

// ---- sec6 -------------------------------------------------------------------

struct LaneInfo {
  std::string sec;
  Sec6Variant var;
  std::map<std::string, Nat> deep_hi;
};

LaneInfo lane_info(Sec6Variant var) {
  switch (var) {
    case Sec6Variant::E:
      return {"sec6-E", var,
              {{"S", 256},    {"Sgn", 256},   {"zero", 256}, {"Mod3", 64}, {"D", 128},
               {"M3", 64},    {"O", 64},      {"Q", 64},     {"R", 24},    {"Sq", 16},
               {"Hf", 8},     {"Rt", 6},      {"Oa1", 64},   {"zeroa1", 64},
               {"onea1", 64}, {"Sa1", 64},    {"Da1", 64},   {"Qa1", 64},  {"Ga1", 32},
               {"Pa1", 32}}};
    case Sec6Variant::K:
      return {"sec6-K", var,
              {{"zero", 256}, {"S", 256},  {"Sgn", 256},   {"Y", 64},     {"Z", 64},
               {"Rt", 24},    {"Sq", 16},  {"E", 12},      {"Oa1", 64},   {"zeroa1", 64},
               {"onea1", 64}, {"Sa1", 64}, {"Ha1", 64},    {"Pa1", 24}}};
    case Sec6Variant::L:
      return {"sec6-L", var,
              {{"K", 256},    {"zero", 256}, {"S", 256},  {"Sgn", 256}, {"Y", 48},
               {"Z", 48},     {"Rt", 16},    {"Sq", 12},  {"E", 8},     {"onea1", 64},
               {"Ka1", 64},   {"Oa1", 64},   {"zeroa1", 64}, {"Sa1", 48}, {"Ha1", 48},
               {"Pa1", 16}}};
  }
  throw UnknownId("unknown lane");
}

Specs sec6_specs(Sec6Variant var, bool experimental) {
  (void)experimental;
  LaneInfo lane = lane_info(var);
  const std::string& sec = lane.sec;
  Specs v;
  push_section_shallow(v, sec);
  for (const auto& [name, hi] : lane.deep_hi) push_deep(v, sec + "/" + name, hi);

  using oracle::gsq;
  auto sq_s = compose(atom("Sq"), succ());              // (x+1)^2
  auto sq_ss = compose(atom("Sq"), compose(succ(), succ()));  // (x+2)^2
  auto fx1 = [](const Nat& x) { return oracle::gsq(x); };

  struct B {
    const char* name;
    Sec6Op op;
    TermPtr f, g;
    std::function<Nat(const Nat&)> ref;
    std::optional<Nat> deep_hi;  // empty: the expansion is past any budget even at x=0
  };
  std::vector<B> builders = {
      {"plus-arg-minus", Sec6Op::PlusArgMinus, sq_s, nullptr,
       [fx1](const Nat& x) { return fx1(x) - x; }, Nat(8)},
      {"oplus", Sec6Op::OPlus, sq_s, succ(),
       [fx1](const Nat& x) { return fx1(x) + fx1(x); }, Nat(8)},
      {"ominus", Sec6Op::OMinus, sq_ss, succ(),
       [](const Nat& x) { return Nat(2 * x + 3); }, Nat(8)},
      // The ladder-routed operators nest one expanded tower inside another, so
      // their deep cost explodes at x=1 (>4e8 steps measured); x=0 still runs
      // the whole expansion (~1e5 steps) and is the only practical deep point.
      // The subtraction route is heavier still (>1e9 steps at x=0), so it is
      // verified shallow-only, matching how the two-argument ladder is handled.
      {"otimes", Sec6Op::OTimes, sq_s, succ(),
       [fx1](const Nat& x) { return Nat(fx1(x) * (x + 1)); }, Nat(0)},
      {"add", Sec6Op::Add, sq_s, succ(),
       [fx1](const Nat& x) { return Nat(fx1(x) + x + 1); }, Nat(0)},
      {"sub", Sec6Op::Sub, sq_s, succ(),
       [fx1](const Nat& x) { return Nat(fx1(x) - (x + 1)); }, std::nullopt},
  };
  for (const auto& b : builders) {
    TermPtr t = build_sec6(b.op, b.f, b.g, var);
    EvalConfig probe;  // shallow, used only by the precondition scan
    CheckSpec s;
    s.id = sec + "/" + b.name + ".shallow";
    s.term = t;
    s.ref_fn = b.ref;
    s.hi = 64;
    s.pre = [op = b.op, f = b.f, g = b.g, probe] {
      enforce_sec6_precondition(op, f, g, 0, 64, probe);
    };
    v.push_back(s);
    if (!b.deep_hi) continue;
    s.id = sec + "/" + b.name + ".deep";
    s.mode = EvalMode::Deep;
    s.basis = sec;
    s.hi = *b.deep_hi;
    s.budget = 50'000'000;
    s.pre = [op = b.op, f = b.f, g = b.g, probe, hi = *b.deep_hi] {
      enforce_sec6_precondition(op, f, g, 0, hi, probe);
    };
    v.push_back(std::move(s));
  }

  {  // deliberate violation: F(x) = x+1 falls below G(x)^2 immediately
    CheckSpec s;
    s.id = sec + "/ominus.violation-demo";
    s.term = build_sec6(Sec6Op::OMinus, succ(), sq_s, var);
    s.ref_fn = [](const Nat&) { return Nat(0); };
    s.hi = 16;
    s.informational = true;
    EvalConfig probe;
    s.pre = [f = succ(), g = sq_s, probe] {
      enforce_sec6_precondition(Sec6Op::OMinus, f, g, 0, 16, probe);
    };
    v.push_back(std::move(s));
  }

  // plain iteration rebuilt from the seeded node: S-iteration is the identity
  const std::string a1basis = sec + "-a1";
  TermPtr one_plus = op_plus(catalog_get(sec + "/onea1").term);
  struct PI {
    const char* name;
    TermPtr f;
  } pis[] = {{"a1pi.S", succ()}, {"a1pi.oneplus", one_plus}};
  for (const auto& p : pis) {
    CheckSpec s;
    s.id = sec + "/" + p.name + ".shallow";
    s.term = a1_pure_iter(p.f, var);
    s.oracle_ref = "I";
    s.hi = 64;
    v.push_back(s);
    s.id = sec + "/" + p.name + ".deep";
    s.mode = EvalMode::Deep;
    s.basis = a1basis;
    s.hi = 24;
    s.budget = 50'000'000;
    v.push_back(std::move(s));
  }

  return v;
}

// ---- remarks ----------------------------------------------------------------

Specs remarks_specs() {
  Specs v;
  push_section_shallow(v, "remark-a");
  for (const CatalogEntry* e : catalog_section("remark-a")) v.push_back(entry_deep(*e, 256));

  TermPtr sgn_pure = pure_iter(compose(succ(), op_monus(succ(), succ())));
  for (unsigned a = 1; a <= 3; ++a) {
    const std::string tag = ".a" + std::to_string(a);
    CheckSpec s;
    s.id = "remarks/translate.mixed.pred" + tag;
    s.term = translate_offset(TranslateScheme::Mixed, proj(2, 1), a);
    s.oracle_ref = "P";
    s.hi = 64;
    v.push_back(std::move(s));

    CheckSpec t;
    t.id = "remarks/translate.pure.id" + tag;
    t.term = translate_offset(TranslateScheme::Pure, succ(), a);
    t.oracle_ref = "I";
    t.hi = 64;
    v.push_back(std::move(t));

    CheckSpec u;
    u.id = "remarks/translate.pure.sgn-iter" + tag;
    u.term = translate_offset(TranslateScheme::Pure, sgn_pure, a);
    u.oracle_ref = "zero";
    u.hi = 64;
    v.push_back(std::move(u));
  }
  return v;
}

// ---- oracle-self ------------------------------------------------------------

CheckSpec self_check(const std::string& id, const Nat& hi,
                     std::function<void(CheckReport&, const Nat&)> body) {
  CheckSpec s;
  s.id = id;
  s.hi = hi;
  s.custom = [body = std::move(body)](const CheckSpec& spec) {
    CheckReport r;
    r.status = CheckStatus::Pass;
    body(r, spec.hi);
    return r;
  };
  return s;
}

void fail_at(CheckReport& r, const std::string& msg) {
  if (r.status == CheckStatus::Pass) {
    r.status = CheckStatus::Fail;
    r.first_mismatch = msg;
  }
}

Specs oracle_self_specs() {
  using namespace oracle;
  Specs v;

  v.push_back(self_check("oracle-self/pair.bijection", 10000, [](CheckReport& r, const Nat& hi) {
    for (Nat z = 0; z <= hi; ++z) {
      ++r.tested_points;
      if (pair2(pair_first(z), pair_second(z)) != z)
        return fail_at(r, "z=" + z.str() + " does not survive unpair/pair");
    }
  }));
  v.push_back(self_check("oracle-self/pair.roundtrip", 100, [](CheckReport& r, const Nat& hi) {
    for (Nat x = 0; x <= hi; ++x)
      for (Nat y = 0; y <= hi; ++y) {
        ++r.tested_points;
        Nat z = pair2(x, y);
        if (pair_first(z) != x || pair_second(z) != y)
          return fail_at(r, "x=" + x.str() + ", y=" + y.str() + ": components do not return");
      }
  }));
  v.push_back(self_check("oracle-self/tri.bracket", 10000, [](CheckReport& r, const Nat& hi) {
    for (Nat z = 0; z <= hi; ++z) {
      ++r.tested_points;
      Nat w = tri_inv(z);
      if (!(tri(w) <= z && z < tri(w + 1)))
        return fail_at(r, "z=" + z.str() + ": triangular bracket broken");
    }
  }));
  v.push_back(self_check("oracle-self/square.identities", 10000, [](CheckReport& r, const Nat& hi) {
    for (Nat x = 0; x <= hi; ++x) {
      ++r.tested_points;
      Nat rt = root(x);
      if (sq_excess(x) != x - rt * rt) return fail_at(r, "x=" + x.str() + ": excess mismatch");
      if (sq_excess(x) > 2 * rt) return fail_at(r, "x=" + x.str() + ": excess above 2*root");
      if (is_square(x) != Nat(sq_excess(x) == 0 ? 1 : 0))
        return fail_at(r, "x=" + x.str() + ": squareness flag mismatch");
    }
  }));
  v.push_back(self_check("oracle-self/growth.ladder", 30, [](CheckReport& r, const Nat& hi) {
    for (unsigned n = 0; n <= 2; ++n)
      for (Nat x = 0; x <= hi; ++x) {
        ++r.tested_points;
        if (b_seq(n, x + 1) < f_seq(n, x))
          return fail_at(r, "n=" + std::to_string(n) + ", x=" + x.str() + ": ladder below target");
      }
    // Level 3 is exact only through x = 3; beyond that compare against the
    // last exact value (the ladder is strictly increasing in x).
    for (Nat x = 0; x <= 4; ++x) {
      ++r.tested_points;
      Nat probe = x + 1 <= 3 ? x + 1 : Nat(3);
      if (b_seq(3, probe) < f_seq(3, x))
        return fail_at(r, "n=3, x=" + x.str() + ": ladder below target");
    }
  }));
  v.push_back(self_check("oracle-self/family.identities", 500, [](CheckReport& r, const Nat& hi) {
    for (unsigned n = 2; n <= 7; ++n)
      for (Nat x = 0; x <= hi; ++x) {
        ++r.tested_points;
        Nat m = mod_by(n, x), q = div_by(n, x);
        if (m >= n || q * n + m != x)
          return fail_at(r, "n=" + std::to_string(n) + ", x=" + x.str() + ": division identity");
        Nat c = cyc(n, x);
        Nat want = x + 2 <= n ? x + 1 : Nat(0);
        if (c != want)
          return fail_at(r, "n=" + std::to_string(n) + ", x=" + x.str() + ": cycle step");
      }
  }));
  v.push_back(self_check("oracle-self/orbit.prefix", 400, [](CheckReport& r, const Nat& hi) {
    const unsigned want[] = {2, 15, 6, 4, 30, 45, 18, 12, 8, 60};
    Nat w = 0;
    for (unsigned i = 0; i < 10; ++i) {
      ++r.tested_points;
      w = w_step(w);
      if (w != want[i]) return fail_at(r, "orbit step " + std::to_string(i + 1) + " drifted");
    }
    for (Nat x = 0; x <= hi; ++x) {  // exactly one branch of the orbit step fires
      ++r.tested_points;
      unsigned live = 0;
      if (x == 0) ++live;
      if (x != 0 && mod_by(10, x) == 0) ++live;
      if (x != 0 && parity(x) == 1 && mod_by(5, x) == 0) ++live;
      if (x != 0 && mod_by(10, x) != 0 && !(parity(x) == 1 && mod_by(5, x) == 0) &&
          mod_by(3, x) == 0)
        ++live;
      if (live > 1) return fail_at(r, "x=" + x.str() + ": overlapping orbit branches");
    }
  }));
  v.push_back(self_check("oracle-self/frozen.values", 0, [](CheckReport& r, const Nat&) {
    const Nat fprime_want[] = {0, 3, 5, 15, 17, 57, 125, 255};
    for (unsigned i = 0; i < 8; ++i) {
      ++r.tested_points;
      if (fprime(i) != fprime_want[i])
        return fail_at(r, "power-sum value at " + std::to_string(i) + " drifted");
    }
    r.tested_points += 2;
    if (hsub(10) != 1 || hsub(50) != 1) return fail_at(r, "pair-encoded difference drifted");
    for (unsigned k = 1; k <= 16; ++k) {
      ++r.tested_points;
      if (gpow(nat_pow2(k)) != 1) return fail_at(r, "power flag missed 2^" + std::to_string(k));
    }
    for (Nat x = 0; x <= 512; ++x) {
      ++r.tested_points;
      bool pw = false;
      for (unsigned k = 1; k <= 9; ++k) pw = pw || x == nat_pow2(k);
      if (gpow(x) != Nat(pw ? 1 : 0)) return fail_at(r, "power flag wrong at x=" + x.str());
    }
  }));
  return v;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"sec2",   "sec4",    "sec5-dist", "sec5-monus", "sec6-E",
          "sec6-K", "sec6-L",  "remarks",   "oracle-self", "all"};
}

std::vector<CheckSpec> suite_specs(const std::string& name, bool experimental) {
  if (name == "sec2") return sec2_specs();
  if (name == "sec4") return sec4_specs();
  if (name == "sec5-dist") return sec5_specs(Flavor::Dist, experimental);
  if (name == "sec5-monus") return sec5_specs(Flavor::Monus, experimental);
  if (name == "sec6-E") return sec6_specs(Sec6Variant::E, experimental);
  if (name == "sec6-K") return sec6_specs(Sec6Variant::K, experimental);
  if (name == "sec6-L") return sec6_specs(Sec6Variant::L, experimental);
  if (name == "remarks") return remarks_specs();
  if (name == "oracle-self") return oracle_self_specs();
  if (name == "all") {
    Specs v;
    for (const std::string& n : suite_names())
      if (n != "all") {
        Specs part = suite_specs(n, experimental);
        v.insert(v.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
      }
    return v;
  }
  throw UnknownId("no suite named " + name + " (see `check --help` for the list)");
}

}  // namespace prf
