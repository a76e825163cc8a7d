#include "prf/basis.hpp"

#include <map>

namespace prf {

namespace {

bool walk(const TermPtr& t, const Basis& b, std::string& path, MembershipResult& out) {
  auto fail = [&](const std::string& why) {
    out.ok = false;
    out.offending_path = path;
    out.reason = why + " in basis " + b.name;
    return false;
  };

  switch (t->kind()) {
    case Kind::Const:
      if (!b.allow_const) return fail("constants are not initial");
      if (!b.const_whitelist.empty()) {
        bool found = false;
        for (const auto& v : b.const_whitelist)
          if (v == t->number()) { found = true; break; }
        if (!found) return fail("constant c" + t->number().str() + " is not initial");
      }
      break;
    case Kind::Succ:
      if (!b.allow_succ) return fail("S is not initial");
      break;
    case Kind::Proj:
      if (!b.allow_proj) return fail("projections are not initial");
      break;
    case Kind::Atom:
      if (b.atoms.count(t->atom_name()) == 0) return fail("atom " + t->atom_name() + " is not initial");
      break;
    case Kind::Power:
      if (b.ops.count(Kind::Compose) == 0 && b.ops.count(Kind::Subst) == 0)
        return fail("power needs composition");
      break;
    case Kind::MixedIterA:
    case Kind::PureIterA:
      if (b.ops.count(t->kind()) == 0) return fail("seeded iteration is not an operation");
      if (b.fixed_iter_a && t->number() != *b.fixed_iter_a)
        return fail("iteration seed must be " + b.fixed_iter_a->str() + ", got " + t->number().str());
      break;
    default: {
      if (b.ops.count(t->kind()) == 0) {
        static const std::map<Kind, const char*> words = {
            {Kind::Subst, "sub"},          {Kind::Compose, "composition"}, {Kind::PrimRec, "R"},
            {Kind::MixedIter, "M"},        {Kind::PureIter, "pure iteration"},
            {Kind::OpAdd, "+"},            {Kind::OpMonus, "-."},          {Kind::OpDist, "|distance|"},
            {Kind::OpAmbMinus, "-"},       {Kind::OpPairJ, "J"},           {Kind::OpPlus, "^+"}};
        auto it = words.find(t->kind());
        return fail(std::string(it == words.end() ? "node" : it->second) + " is not an operation");
      }
      break;
    }
  }

  for (std::size_t i = 0; i < t->child_count(); ++i) {
    std::size_t len = path.size();
    path += "/" + std::to_string(i);
    if (!walk(t->child(i), b, path, out)) return false;
    path.resize(len);
  }
  return true;
}

std::map<std::string, Basis> make_bases() {
  std::map<std::string, Basis> m;
  auto put = [&](Basis b) { m[b.name] = std::move(b); };

  put({.name = "prim",
       .summary = "constants, S, projections; substitution, composition, primitive recursion",
       .allow_succ = true,
       .allow_proj = true,
       .allow_const = true,
       .ops = {Kind::Subst, Kind::Compose, Kind::PrimRec}});

  put({.name = "robinson-multi",
       .summary = "S, projections, Sq, O, Hf, Rt and binary arithmetic; substitution and all iterations",
       .allow_succ = true,
       .allow_proj = true,
       .atoms = {"Sq", "O", "Hf", "Rt", "add2", "monus2", "dist2"},
       .ops = {Kind::Subst, Kind::Compose, Kind::MixedIter, Kind::MixedIterA, Kind::PureIter,
               Kind::PureIterA}});

  put({.name = "robinson-unary",
       .summary = "unary S, Sq, O, Hf, Rt; pointwise +/-, composition, pure iteration",
       .allow_succ = true,
       .atoms = {"Sq", "O", "Hf", "Rt"},
       .ops = {Kind::OpAdd, Kind::OpAmbMinus, Kind::OpMonus, Kind::OpDist, Kind::Compose,
               Kind::PureIter}});

  put({.name = "sec4",
       .summary = "S, projections, O, binary addition, constants; substitution and mixed iteration",
       .allow_succ = true,
       .allow_proj = true,
       .allow_const = true,
       .atoms = {"O", "add2"},
       .ops = {Kind::Subst, Kind::Compose, Kind::MixedIter}});

  put({.name = "sec4-noO",
       .summary = "sec4 without the zero test",
       .allow_succ = true,
       .allow_proj = true,
       .allow_const = true,
       .atoms = {"add2"},
       .ops = {Kind::Subst, Kind::Compose, Kind::MixedIter}});

  put({.name = "sec4-ma",
       .summary = "S, projections, binary addition; substitution and seeded mixed iteration",
       .allow_succ = true,
       .allow_proj = true,
       .atoms = {"add2"},
       .ops = {Kind::Subst, Kind::Compose, Kind::MixedIter, Kind::MixedIterA}});

  put({.name = "sec5-dist",
       .summary = "S only; distance, composition, pure iteration",
       .allow_succ = true,
       .ops = {Kind::OpDist, Kind::Compose, Kind::PureIter}});

  put({.name = "sec5-monus",
       .summary = "S only; monus, composition, pure iteration",
       .allow_succ = true,
       .ops = {Kind::OpMonus, Kind::Compose, Kind::PureIter}});

  for (const char* gen : {"E", "K", "L"}) {
    put({.name = std::string("sec6-") + gen,
         .summary = std::string("c1 and ") + gen + "; ^+, composition, pure iteration",
         .allow_const = true,
         .const_whitelist = {Nat(1)},
         .atoms = {gen},
         .ops = {Kind::OpPlus, Kind::Compose, Kind::PureIter}});
    put({.name = std::string("sec6-") + gen + "-a1",
         .summary = std::string(gen) + " alone; ^+, composition, iteration seeded at 1",
         .atoms = {gen},
         .ops = {Kind::OpPlus, Kind::Compose, Kind::PureIterA},
         .fixed_iter_a = Nat(1)});
  }

  return m;
}

const std::map<std::string, Basis>& bases() {
  static const std::map<std::string, Basis> m = make_bases();
  return m;
}

}  // namespace

MembershipResult in_basis(const TermPtr& t, const Basis& b) {
  MembershipResult out;
  std::string path;
  walk(t, b, path, out);
  return out;
}

const Basis& basis_get(const std::string& name) {
  auto it = bases().find(name);
  if (it == bases().end()) throw UnknownName("unknown basis: " + name);
  return it->second;
}

const std::vector<std::string>& basis_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, b] : bases()) v.push_back(n);
    return v;
  }();
  return names;
}

}  // namespace prf
