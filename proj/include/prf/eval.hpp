#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "prf/term.hpp"

namespace prf {

// Deep mode expands registered atoms through the configured expander and so
// prices a term by its construction; shallow mode computes atoms directly.
// Values are identical in both modes, only cost differs.
enum class EvalMode : std::uint8_t { Deep, Shallow };

struct EvalConfig {
  std::uint64_t budget = 50'000'000;  // steps per evaluation point
  std::size_t memo_capacity = 4096;   // LRU entries; 0 disables memo and prefix reuse
  EvalMode mode = EvalMode::Shallow;
  bool flag_ambiguous_minus = true;   // count points where F(x) < G(x) under '-'
  // Deep-mode definition lookup for atoms; returning nullptr keeps the atom
  // opaque (it is then computed directly, like shallow mode).
  std::function<TermPtr(const std::string&)> expander;
};

struct EvalOutcome {
  Nat value;
  std::uint64_t steps_used = 0;
  std::uint64_t ambiguous_minus_hits = 0;
  std::uint64_t memo_hits = 0;
};

struct RangeResult {
  std::vector<EvalOutcome> points;  // for x = lo, lo+1, ... in order, may be partial
  std::optional<Nat> died_at;       // x whose evaluation exceeded the budget, if any
};

// Evaluate t at args. Throws BudgetExceededError, ArityError on wrong arg
// count. Each node application and each iteration unroll costs one budget
// unit; unrolls run as explicit loops, so depth is budget-bound, not
// stack-bound.
EvalOutcome eval(const TermPtr& t, const std::vector<Nat>& args, const EvalConfig& cfg);

// Evaluate t at an explicit list of argument tuples, sharing one memo
// session with per-point budgets. Order points so that inner iteration
// arguments ascend when prefix reuse matters. On budget death died_at holds
// the index of the fatal point.
RangeResult eval_points(const TermPtr& t, const std::vector<std::vector<Nat>>& points,
                        const EvalConfig& cfg);

// Evaluate a unary term over lo..hi sharing one memo session, each point
// getting a fresh budget. Ascending iteration prefixes are reused, so the
// total cost stays near-linear in the final unroll length. On budget death
// the partial results are kept and died_at is set.
RangeResult eval_unary_range(const TermPtr& t, const Nat& lo, const Nat& hi,
                             const EvalConfig& cfg);

}  // namespace prf
