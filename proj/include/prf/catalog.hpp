#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prf/basis.hpp"
#include "prf/eval.hpp"
#include "prf/term.hpp"

namespace prf {

// Which reading of the written minus a construction commits to.
enum class Flavor : std::uint8_t { Dist, Monus };

inline const char* flavor_name(Flavor f) { return f == Flavor::Dist ? "dist" : "monus"; }

struct CatalogEntry {
  std::string id;       // "<section>/<name>"
  std::string section;  // sec2, sec4, sec5-dist, sec5-monus, sec6-E, sec6-K, sec6-L, remark-a
  std::string name;
  TermPtr term;         // displayed construction; may lean on registered atoms
  std::string basis;    // home basis for membership
  std::string oracle_ref;  // reference function name ("" when checked another way)
  Nat check_lo;            // suites compare on [check_lo, feasible_x]
  Nat feasible_x;
  std::uint64_t suggested_budget;
};

const std::vector<CatalogEntry>& catalog_all();
const CatalogEntry& catalog_get(const std::string& id);  // throws UnknownId
std::vector<const CatalogEntry*> catalog_section(const std::string& section);
std::vector<std::string> catalog_sections();

// Definitional lookup used by deep mode: maps an atom to its defining term
// in the named basis dialect (nullptr for atoms that are initial there or
// trusted opaque). Definitions may themselves contain atoms; evaluation
// expands them lazily.
std::function<TermPtr(const std::string&)> dialect_expander(const std::string& basis);

// Deep-mode EvalConfig preset for a basis dialect.
EvalConfig deep_config(const std::string& basis, std::uint64_t budget = 50'000'000);

// Structural closure for membership checks: expands atoms recursively,
// rewrites Succ/number literals where the basis lacks them, and replaces
// OpAdd under a sec5 basis by the monus/dist addition shape with a
// fixed-size placeholder B term (structure-faithful, not value-faithful;
// exact B synthesis lives in build_addition).
TermPtr expand_for_membership(const TermPtr& t, const std::string& basis);

// Let-file rendering of a section's entries, in dependency order.
std::string export_lets(const std::string& section);

// ---- builders ------------------------------------------------------------

// Iteration-rank of a term built from the sec5 constructors
// (Succ, OpMonus, OpDist, Compose, PureIter, plus Power with exponent >= 1).
// Throws UnsupportedNode on anything else, including atoms: expand first.
Nat ackermann_index(const TermPtr& t);

// Rank of a term after exact definitional expansion in the given flavor
// (atoms inlined, embedded sums synthesized for real). Throws like
// ackermann_index, plus InfeasibleIndex when a sum's index leaves the ladder.
Nat exact_rank(const TermPtr& t, Flavor flavor);

// F + G from difference and iteration: D B_k S - ((D B_k S - F) - G) with
// k = max rank of the expanded operands. B_k is exactly constructible for
// k <= 5 (larger k needs f_5(1), which is not computable); beyond that
// InfeasibleIndex is raised.
TermPtr build_addition(const TermPtr& f, const TermPtr& g, Flavor flavor);

// Guarded composition: T(x) = G(x) when F(x) = 0, else 0.
TermPtr build_conditional(const TermPtr& f, const TermPtr& g, Flavor flavor);

// Shorter conditional rewrite (informational: exercised only under
// --experimental; not part of the verified catalog).
TermPtr build_conditional_experimental(const TermPtr& f, const TermPtr& g, Flavor flavor);

enum class Family : std::uint8_t { O, M, C, Mod, Div, F, B };
// Recursively assembled family member. Bounds: C/Mod need n >= 2, Div n >= 2,
// f/B n <= 5; violations raise BadIndex.
TermPtr build_family(Family fam, unsigned n, Flavor flavor);

// Characteristic-of-zero from any fhat with a descent point: scans for the
// least a <= search_bound with fhat(a) > fhat(a+1) (shallow evaluation),
// then assembles Sgn . P^{G(1)} . fhat . S^a . Sgn; equals O everywhere.
TermPtr build_cosignum_from(const TermPtr& fhat, unsigned search_bound);

enum class TranslateScheme : std::uint8_t { Mixed, Pure };
// Rebuild plain iteration from the a-seeded node alone (a >= 1):
//   mixed: M[H]  == Phat^a . Ma[S^a . sub(H; pr[2,1], Phat^a . pr[2,2]); a]
//   pure:  F^[]  == Phat^a . (S^a . F . Phat^a)^[](a), Phat = S -. 2
TermPtr translate_offset(TranslateScheme scheme, const TermPtr& inner, const Nat& a);

enum class Sec6Op : std::uint8_t { PlusArgMinus, OPlus, OMinus, OTimes, Add, Sub };
enum class Sec6Variant : std::uint8_t { E, K, L };

// One-generator arithmetic: F- (PlusArgMinus), F(+)G = F+G^2 (OPlus),
// F(-)G = F-G^2 (OMinus), F(x)G = F*G (OTimes), F+G (Add), F-G (Sub).
// The term shape is shared by all three generators; `variant` names the
// dialect the result is meant to live in (its atoms expand there). Side
// conditions are NOT probed here; see enforce_sec6_precondition.
TermPtr build_sec6(Sec6Op op, const TermPtr& f, const TermPtr& g, Sec6Variant variant);

// Oracle-side validation of the one-generator arithmetic side conditions on
// [lo, hi] (PlusArgMinus/OPlus/OTimes: operands >= x; OMinus: f >= g^2 and
// 2g >= x; Sub: f >= g). Throws PreconditionViolated at the first witness.
void enforce_sec6_precondition(Sec6Op op, const TermPtr& f, const TermPtr& g,
                               const Nat& lo, const Nat& hi, const EvalConfig& cfg);

// F^[] rebuilt from seed-1 iteration: Phat . (S . F . Phat)^[](1) with the
// variant's derived Phat (whose value at 0 is garbage but never consulted).
TermPtr a1_pure_iter(const TermPtr& f, Sec6Variant variant);

}  // namespace prf
