#include "prf/term.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <map>
#include <utility>

namespace prf {

namespace {

const char* kind_word(Kind k) {
  switch (k) {
    case Kind::Const: return "constant";
    case Kind::Succ: return "S";
    case Kind::Proj: return "projection";
    case Kind::Atom: return "atom";
    case Kind::Subst: return "sub";
    case Kind::Compose: return "compose";
    case Kind::PrimRec: return "R";
    case Kind::MixedIter: return "M";
    case Kind::MixedIterA: return "Ma";
    case Kind::PureIter: return "pure iteration";
    case Kind::PureIterA: return "seeded pure iteration";
    case Kind::Power: return "power";
    case Kind::OpAdd: return "+";
    case Kind::OpMonus: return "-.";
    case Kind::OpDist: return "distance";
    case Kind::OpAmbMinus: return "-";
    case Kind::OpPairJ: return "J";
    case Kind::OpPlus: return "^+";
  }
  return "?";
}

// name -> arity. Closed list; unary unless listed in the binary block.
const std::map<std::string, unsigned>& atom_table() {
  static const std::map<std::string, unsigned> table = [] {
    std::map<std::string, unsigned> t;
    for (const char* n : {"I",  "P",  "D",  "Sq", "Hf", "Pw", "Rt", "A",  "V",   "K",
                          "L",  "O",  "Sgn", "N", "E",  "Q",  "W",  "R",  "Y",   "Z",
                          "Gsq", "Hqd", "f0", "f1", "f2", "f3", "B0", "B1", "B2", "B3"})
      t[n] = 1;
    for (int i = 0; i <= 9; ++i) t["O" + std::to_string(i)] = 1;
    for (int i = 0; i <= 15; ++i) t["M" + std::to_string(i)] = 1;
    for (int i = 2; i <= 10; ++i) {
      t["C" + std::to_string(i)] = 1;
      t["Mod" + std::to_string(i)] = 1;
      t["Div" + std::to_string(i)] = 1;
    }
    for (int i = 1; i <= 3; ++i) {
      t["Phat" + std::to_string(i)] = 1;
      t["Abar" + std::to_string(i)] = 1;
      t["Ohat" + std::to_string(i)] = 1;
    }
    for (const char* n : {"add2", "monus2", "dist2", "J2", "delta2"}) t[n] = 2;
    return t;
  }();
  return table;
}

void require_unary(const TermPtr& t, const char* where) {
  if (t->arity() != 1)
    throw ArityError(std::string(where) + " needs a unary operand, got arity " + std::to_string(t->arity()));
}

}  // namespace

bool atom_exists(const std::string& name) { return atom_table().count(name) != 0; }

unsigned atom_arity(const std::string& name) {
  auto it = atom_table().find(name);
  if (it == atom_table().end()) throw UnknownName("unknown atom: " + name);
  return it->second;
}

const std::vector<std::string>& atom_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, a] : atom_table()) v.push_back(n);
    return v;
  }();
  return names;
}

Term::Term(Kind k, Nat number, unsigned pn, unsigned pk, std::string atom_name, std::vector<TermPtr> ch)
    : kind_(k), number_(std::move(number)), proj_n_(pn), proj_k_(pk), atom_(std::move(atom_name)),
      children_(std::move(ch)) {
  validate_and_finish();
}

void Term::validate_and_finish() {
  for (const auto& c : children_)
    if (!c) throw ArityError("null child in term node");

  switch (kind_) {
    case Kind::Const:
    case Kind::Succ:
      arity_ = 1;
      break;
    case Kind::Proj:
      if (proj_n_ == 0 || proj_k_ == 0 || proj_k_ > proj_n_)
        throw BadIndex("projection index out of range: pr[" + std::to_string(proj_n_) + "," +
                       std::to_string(proj_k_) + "]");
      arity_ = proj_n_;
      break;
    case Kind::Atom:
      arity_ = atom_arity(atom_);
      break;
    case Kind::Subst: {
      if (children_.size() < 2) throw ArityError("sub needs an outer function and at least one inner function");
      const auto& f = children_[0];
      if (f->arity() != children_.size() - 1)
        throw ArityError("sub outer arity " + std::to_string(f->arity()) + " but " +
                         std::to_string(children_.size() - 1) + " inner functions given");
      unsigned m = children_[1]->arity();
      for (std::size_t i = 2; i < children_.size(); ++i)
        if (children_[i]->arity() != m)
          throw ArityError("sub inner functions disagree on arity: " + std::to_string(m) + " vs " +
                           std::to_string(children_[i]->arity()));
      arity_ = m;
      break;
    }
    case Kind::Compose:
      require_unary(children_[0], "compose outer");
      arity_ = children_[1]->arity();
      break;
    case Kind::PrimRec: {
      const auto& f = children_[0];
      const auto& g = children_[1];
      if (g->arity() != f->arity() + 2)
        throw ArityError("R[f,g] needs arity(g) = arity(f)+2, got " + std::to_string(f->arity()) + " and " +
                         std::to_string(g->arity()));
      arity_ = f->arity() + 1;
      break;
    }
    case Kind::MixedIter:
    case Kind::MixedIterA:
      if (children_[0]->arity() != 2)
        throw ArityError(std::string(kind_word(kind_)) + "[...] needs a binary operand, got arity " +
                         std::to_string(children_[0]->arity()));
      arity_ = 1;
      break;
    case Kind::PureIter:
    case Kind::PureIterA:
    case Kind::Power:
    case Kind::OpPlus:
      require_unary(children_[0], kind_word(kind_));
      arity_ = 1;
      break;
    case Kind::OpAdd:
    case Kind::OpMonus:
    case Kind::OpDist:
    case Kind::OpAmbMinus:
    case Kind::OpPairJ:
      require_unary(children_[0], kind_word(kind_));
      require_unary(children_[1], kind_word(kind_));
      arity_ = 1;
      break;
  }

  std::size_t h = std::hash<int>()(static_cast<int>(kind_));
  boost::hash_combine(h, nat_hash(number_));
  boost::hash_combine(h, proj_n_);
  boost::hash_combine(h, proj_k_);
  boost::hash_combine(h, std::hash<std::string>()(atom_));
  for (const auto& c : children_) boost::hash_combine(h, c->hash());
  hash_ = h;
}

bool term_equal(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  if (a.number() != b.number() || a.proj_n() != b.proj_n() || a.proj_k() != b.proj_k() ||
      a.atom_name() != b.atom_name() || a.child_count() != b.child_count())
    return false;
  for (std::size_t i = 0; i < a.child_count(); ++i)
    if (!term_equal(a.child(i), b.child(i))) return false;
  return true;
}

namespace {
TermPtr make(Kind k, Nat number, unsigned pn, unsigned pk, std::string atom_name, std::vector<TermPtr> ch) {
  return std::make_shared<const Term>(k, std::move(number), pn, pk, std::move(atom_name), std::move(ch));
}
}  // namespace

TermPtr constant(const Nat& n) { return make(Kind::Const, n, 0, 0, "", {}); }
TermPtr succ() {
  static const TermPtr s = make(Kind::Succ, 0, 0, 0, "", {});
  return s;
}
TermPtr proj(unsigned n, unsigned k) { return make(Kind::Proj, 0, n, k, "", {}); }
TermPtr atom(const std::string& name) {
  atom_arity(name);  // reject unknown names eagerly
  return make(Kind::Atom, 0, 0, 0, name, {});
}
TermPtr subst(const TermPtr& f, const std::vector<TermPtr>& gs) {
  std::vector<TermPtr> ch;
  ch.reserve(gs.size() + 1);
  ch.push_back(f);
  ch.insert(ch.end(), gs.begin(), gs.end());
  return make(Kind::Subst, 0, 0, 0, "", std::move(ch));
}
TermPtr compose(const TermPtr& f, const TermPtr& g) { return make(Kind::Compose, 0, 0, 0, "", {f, g}); }
TermPtr compose_chain(const std::vector<TermPtr>& fs) {
  if (fs.empty()) throw ArityError("empty composition chain");
  TermPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = compose(*it, acc);
  return acc;
}
TermPtr prim_rec(const TermPtr& f, const TermPtr& g) { return make(Kind::PrimRec, 0, 0, 0, "", {f, g}); }
TermPtr mixed_iter(const TermPtr& h) { return make(Kind::MixedIter, 0, 0, 0, "", {h}); }
TermPtr mixed_iter_a(const TermPtr& h, const Nat& a) { return make(Kind::MixedIterA, a, 0, 0, "", {h}); }
TermPtr pure_iter(const TermPtr& f) { return make(Kind::PureIter, 0, 0, 0, "", {f}); }
TermPtr pure_iter_a(const TermPtr& f, const Nat& a) { return make(Kind::PureIterA, a, 0, 0, "", {f}); }
TermPtr power(const TermPtr& f, const Nat& n) { return make(Kind::Power, n, 0, 0, "", {f}); }
TermPtr op_add(const TermPtr& f, const TermPtr& g) { return make(Kind::OpAdd, 0, 0, 0, "", {f, g}); }
TermPtr op_monus(const TermPtr& f, const TermPtr& g) { return make(Kind::OpMonus, 0, 0, 0, "", {f, g}); }
TermPtr op_dist(const TermPtr& f, const TermPtr& g) { return make(Kind::OpDist, 0, 0, 0, "", {f, g}); }
TermPtr op_amb_minus(const TermPtr& f, const TermPtr& g) { return make(Kind::OpAmbMinus, 0, 0, 0, "", {f, g}); }
TermPtr op_pair_j(const TermPtr& f, const TermPtr& g) { return make(Kind::OpPairJ, 0, 0, 0, "", {f, g}); }
TermPtr op_plus(const TermPtr& f) { return make(Kind::OpPlus, 0, 0, 0, "", {f}); }

std::size_t term_count_nodes(const TermPtr& t) {
  std::size_t n = 1;
  for (const auto& c : t->children()) n += term_count_nodes(c);
  return n;
}

TermPtr term_with_children(const TermPtr& t, const std::vector<TermPtr>& kids) {
  if (kids.size() != t->child_count()) throw ArityError("child count mismatch in rebuild");
  if (kids.empty()) return t;
  bool same = true;
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (kids[i] != t->child(i)) { same = false; break; }
  if (same) return t;
  return make(t->kind(), t->number(), t->proj_n(), t->proj_k(), t->atom_name(), kids);
}

}  // namespace prf
