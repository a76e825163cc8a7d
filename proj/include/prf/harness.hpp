#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prf/eval.hpp"
#include "prf/nat.hpp"
#include "prf/term.hpp"

namespace prf {

enum class CheckStatus : std::uint8_t { Pass, Fail, BudgetExceeded, PreconditionViolated };
const char* check_status_name(CheckStatus s);

// What a generic check asserts about the evaluated points.
enum class Expect : std::uint8_t {
  Equal,     // term value == reference value
  Monotone,  // term value is non-decreasing along the range
  Bound,     // term value <= reference value
};

struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::uint64_t tested_points = 0;
  std::string first_mismatch;  // empty when the check holds
  std::uint64_t steps_total = 0;
  std::uint64_t ambiguous_minus_hits = 0;
  bool informational = false;  // excluded from the process exit status
};

// A single verification unit. Generic checks evaluate `term` over a unary
// range [lo, hi] or an explicit binary point list and compare against the
// named reference function, a custom reference, or a twin term (evaluated
// shallow). Fully custom checks bypass all of that via `custom`.
struct CheckSpec {
  std::string id;
  TermPtr term;
  std::string oracle_ref;  // reference function name ("" when unused)
  TermPtr twin;            // reference term, evaluated shallow with the same budget
  Nat lo = 0, hi = 0;
  std::vector<std::pair<Nat, Nat>> pairs;  // binary checkpoints, in evaluation order
  EvalMode mode = EvalMode::Shallow;
  std::string basis;  // dialect used to expand atoms in deep mode
  std::uint64_t budget = 5'000'000;
  Expect expect = Expect::Equal;
  bool informational = false;
  std::function<void()> pre;  // may throw PreconditionViolated
  std::function<Nat(const Nat&)> ref_fn;                     // unary reference override
  std::function<Nat(const Nat&, const Nat&)> ref_fn2;        // binary reference override
  std::function<CheckReport(const CheckSpec&)> custom;       // full override
};

struct SuiteOptions {
  std::optional<Nat> max_x;              // clamp ranges and pair coordinates
  std::optional<std::uint64_t> budget;   // override per-point budgets
  unsigned jobs = 1;
  bool experimental = false;  // include informational extras
};

CheckReport run_check(CheckSpec spec);

// Named suites; "all" concatenates them in the listed order.
std::vector<std::string> suite_names();
std::vector<CheckSpec> suite_specs(const std::string& name, bool experimental);

// Runs a suite, invoking sink as each report completes (streaming formats);
// the returned vector is in spec order regardless of job count.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opts,
                                   const std::function<void(const CheckReport&)>& sink = {});

/// Serializations. JSON object keys: id, status, tested_points, first_mismatch,
// steps_total, ambiguous_minus_hits.
std::string report_json(const CheckReport& r);
std::string report_tsv(const CheckReport& r);
std::string report_text(const CheckReport& r);

// True when some non-informational report did not pass.
bool any_blocking_failure(const std::vector<CheckReport>& reports);

}  // namespace prf
