#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prf/term.hpp"

namespace prf {

// A function basis: which initial functions and which term-forming operations
// a term may use. Membership is purely structural; derived operators must be
// expanded away (see catalog.hpp) before a term built from them can pass.
struct Basis {
  std::string name;
  std::string summary;
  bool allow_succ = false;
  bool allow_proj = false;
  bool allow_const = false;
  std::vector<Nat> const_whitelist{};  // when non-empty, only these constant values
  std::set<std::string> atoms{};       // initial atoms beyond S / projections / constants
  std::set<Kind> ops{};                // allowed structural node kinds
  std::optional<Nat> fixed_iter_a{};   // seeded iterations must use exactly this seed
};

struct MembershipResult {
  bool ok = true;
  std::string offending_path;  // "" = root, "/1/0" = child 1 then child 0
  std::string reason;
};

// Power counts as allowed whenever the basis has Compose or Subst, since it
// abbreviates a composition chain.
MembershipResult in_basis(const TermPtr& t, const Basis& b);

const Basis& basis_get(const std::string& name);  // throws UnknownName
const std::vector<std::string>& basis_names();    // sorted

}  // namespace prf
