#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "prf/errors.hpp"
#include "prf/nat.hpp"

namespace prf {

enum class Kind : std::uint8_t {
  Const,       // constant function, unary, value in number
  Succ,        // successor, unary
  Proj,        // projection I^n_k, arity n
  Atom,        // named primitive from the registry
  Subst,       // children [f, g1..gk], k = arity(f), result arity = arity(g_i)
  Compose,     // f . g with f unary, result arity = arity(g)
  PrimRec,     // children [f, g]: h(xs,0)=f(xs), h(xs,y+1)=g(xs,y,h(xs,y))
  MixedIter,   // child binary h: m(0)=0, m(x+1)=h(x,m(x))
  MixedIterA,  // like MixedIter but m(0)=a, a in number
  PureIter,    // child unary f: F^[](x) = F^x(0)
  PureIterA,   // F^[](a)(x) = F^x(a), a in number
  Power,       // child unary f, exponent n in number: F^n
  OpAdd,       // (F+G)(x) = F(x)+G(x), children unary
  OpMonus,     // (F-.G)(x) = F(x) monus G(x)
  OpDist,      // |F-G|(x) = |F(x)-G(x)|
  OpAmbMinus,  // written F-G; evaluates as monus, counts points where F(x)<G(x)
  OpPairJ,     // J(F,G)(x) = pairing of F(x), G(x)
  OpPlus,      // F^+(x) = F(x)+x, child unary
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
 public:
  Kind kind() const { return kind_; }
  unsigned arity() const { return arity_; }
  std::size_t hash() const { return hash_; }

  // Const value, iteration seed, or power exponent, by kind.
  const Nat& number() const { return number_; }
  unsigned proj_n() const { return proj_n_; }
  unsigned proj_k() const { return proj_k_; }
  const std::string& atom_name() const { return atom_; }
  const std::vector<TermPtr>& children() const { return children_; }
  const TermPtr& child(std::size_t i) const { return children_[i]; }
  std::size_t child_count() const { return children_.size(); }

  Term(Kind k, Nat number, unsigned pn, unsigned pk, std::string atom_name, std::vector<TermPtr> ch);

 private:
  Kind kind_;
  Nat number_;
  unsigned proj_n_ = 0;
  unsigned proj_k_ = 0;
  std::string atom_;
  std::vector<TermPtr> children_;
  unsigned arity_ = 0;
  std::size_t hash_ = 0;

  void validate_and_finish();
};

bool term_equal(const Term& a, const Term& b);
inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return term_equal(*a, *b);
}

// Factories. Each validates arities eagerly and throws ArityError / BadIndex /
// UnknownName on malformed input; the returned node caches arity and hash.
TermPtr constant(const Nat& n);
TermPtr succ();
TermPtr proj(unsigned n, unsigned k);
TermPtr atom(const std::string& name);
TermPtr subst(const TermPtr& f, const std::vector<TermPtr>& gs);
TermPtr compose(const TermPtr& f, const TermPtr& g);
TermPtr compose_chain(const std::vector<TermPtr>& fs);  // right fold, f1 . (f2 . (...))
TermPtr prim_rec(const TermPtr& f, const TermPtr& g);
TermPtr mixed_iter(const TermPtr& h);
TermPtr mixed_iter_a(const TermPtr& h, const Nat& a);
TermPtr pure_iter(const TermPtr& f);
TermPtr pure_iter_a(const TermPtr& f, const Nat& a);
TermPtr power(const TermPtr& f, const Nat& n);
TermPtr op_add(const TermPtr& f, const TermPtr& g);
TermPtr op_monus(const TermPtr& f, const TermPtr& g);
TermPtr op_dist(const TermPtr& f, const TermPtr& g);
TermPtr op_amb_minus(const TermPtr& f, const TermPtr& g);
TermPtr op_pair_j(const TermPtr& f, const TermPtr& g);
TermPtr op_plus(const TermPtr& f);

// Closed registry of named primitives with fixed semantics (see oracle.hpp).
bool atom_exists(const std::string& name);
unsigned atom_arity(const std::string& name);  // throws UnknownName
const std::vector<std::string>& atom_names();  // sorted

std::size_t term_count_nodes(const TermPtr& t);  // distinct-subterm-unaware plain node count

// Same node, new children (count must match); leaves return t unchanged.
TermPtr term_with_children(const TermPtr& t, const std::vector<TermPtr>& kids);

}  // namespace prf
