#include "prf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <thread>

#include "prf/catalog.hpp"
#include "prf/errors.hpp"
#include "prf/oracle.hpp"

namespace prf {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::BudgetExceeded: return "budget-exceeded";
    case CheckStatus::PreconditionViolated: return "precondition-violated";
  }
  return "unknown";
}

namespace {

void tally(CheckReport& r, const EvalOutcome& o) {
  r.steps_total += o.steps_used;
  r.ambiguous_minus_hits += o.ambiguous_minus_hits;
  ++r.tested_points;
}

bool holds(Expect e, const Nat& got, const Nat& want) {
  return e == Expect::Bound ? got <= want : got == want;
}

}  // namespace

CheckReport run_check(CheckSpec spec) {
  CheckReport r;
  r.id = spec.id;
  r.informational = spec.informational;
  try {
    if (spec.custom) {
      r = spec.custom(spec);
      r.id = spec.id;
      r.informational = spec.informational;
      return r;
    }
    if (spec.pre) spec.pre();

    EvalConfig cfg;
    cfg.budget = spec.budget;
    cfg.mode = spec.mode;
    if (!spec.basis.empty()) cfg.expander = dialect_expander(spec.basis);

    auto ref1 = spec.ref_fn;
    auto ref2 = spec.ref_fn2;
    if (!ref1 && !ref2 && !spec.oracle_ref.empty()) {
      if (spec.term->arity() == 2) ref2 = oracle::binary_fn(spec.oracle_ref);
      else ref1 = oracle::unary_fn(spec.oracle_ref);
    }

    if (!spec.pairs.empty()) {
      std::vector<std::vector<Nat>> pts;
      pts.reserve(spec.pairs.size());
      for (const auto& [x, y] : spec.pairs) pts.push_back({x, y});
      RangeResult rr = eval_points(spec.term, pts, cfg);
      for (std::size_t i = 0; i < rr.points.size(); ++i) {
        tally(r, rr.points[i]);
        if (!ref2) continue;
        Nat want = ref2(pts[i][0], pts[i][1]);
        if (!holds(spec.expect, rr.points[i].value, want)) {
          r.status = CheckStatus::Fail;
          r.first_mismatch = "x=" + pts[i][0].str() + ", y=" + pts[i][1].str() + ": got " +
                             rr.points[i].value.str() + ", want " + want.str();
          return r;
        }
      }
      if (rr.died_at) {
        r.status = CheckStatus::BudgetExceeded;
        std::size_t i = static_cast<std::size_t>(nat_to_u64(*rr.died_at, "point index"));
        r.first_mismatch = "budget exhausted at x=" + pts[i][0].str() + ", y=" + pts[i][1].str();
      }
      return r;
    }

    if (spec.lo > spec.hi) return r;  // clamped away; vacuously passing

    RangeResult rr = eval_unary_range(spec.term, spec.lo, spec.hi, cfg);
    std::optional<RangeResult> tw;
    if (spec.twin) {
      EvalConfig tcfg;
      tcfg.budget = spec.budget;
      tcfg.mode = EvalMode::Shallow;
      tw = eval_unary_range(spec.twin, spec.lo, spec.hi, tcfg);
    }
    Nat prev;
    for (std::size_t i = 0; i < rr.points.size(); ++i) {
      Nat x = spec.lo + Nat(i);
      const Nat& got = rr.points[i].value;
      tally(r, rr.points[i]);
      if (spec.expect == Expect::Monotone) {
        if (i > 0 && got < prev) {
          r.status = CheckStatus::Fail;
          r.first_mismatch = "x=" + x.str() + ": got " + got.str() + " after " + prev.str();
          return r;
        }
        prev = got;
        continue;
      }
      Nat want;
      if (ref1) {
        want = ref1(x);
      } else if (tw) {
        if (i >= tw->points.size()) {
          r.status = CheckStatus::BudgetExceeded;
          r.first_mismatch = "reference budget exhausted at x=" + x.str();
          return r;
        }
        tally(r, tw->points[i]);
        --r.tested_points;  // twin evaluation is bookkeeping, not an extra point
        want = tw->points[i].value;
      } else {
        continue;  // nothing to compare against: evaluation-only check
      }
      if (!holds(spec.expect, got, want)) {
        r.status = CheckStatus::Fail;
        r.first_mismatch =
            "x=" + x.str() + ": got " + got.str() + ", want " + want.str();
        return r;
      }
    }
    if (rr.died_at) {
      r.status = CheckStatus::BudgetExceeded;
      r.first_mismatch = "budget exhausted at x=" + rr.died_at->str();
    }
    return r;
  } catch (const PreconditionViolated& e) {
    r.status = CheckStatus::PreconditionViolated;
    r.first_mismatch = e.what();
    return r;
  } catch (const BudgetExceededError& e) {
    r.status = CheckStatus::BudgetExceeded;
    r.first_mismatch = e.what();
    return r;
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.first_mismatch = std::string("exception: ") + e.what();
    return r;
  }
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opts,
                                   const std::function<void(const CheckReport&)>& sink) {
  std::vector<CheckSpec> specs = suite_specs(name, opts.experimental);
  for (auto& s : specs) {
    if (opts.budget) s.budget = *opts.budget;
    if (opts.max_x) {
      if (s.hi > *opts.max_x) s.hi = *opts.max_x;
      if (!s.pairs.empty()) {
        std::vector<std::pair<Nat, Nat>> kept;
        for (const auto& p : s.pairs)
          if (p.first <= *opts.max_x && p.second <= *opts.max_x) kept.push_back(p);
        s.pairs = std::move(kept);
        if (s.pairs.empty()) s.hi = s.lo - 1;  // nothing left: vacuous
      }
    }
  }

  std::vector<CheckReport> out(specs.size());
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      CheckReport rep = run_check(specs[i]);
      std::lock_guard<std::mutex> lock(mu);
      out[i] = rep;
      if (sink) sink(rep);
    }
  };
  unsigned jobs = std::max(1u, opts.jobs);
  if (!specs.empty()) jobs = std::min<unsigned>(jobs, static_cast<unsigned>(specs.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string flatten(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return out;
}

}  // namespace

std::string report_json(const CheckReport& r) {
  return "{\"id\":\"" + json_escape(r.id) + "\",\"status\":\"" + check_status_name(r.status) +
         "\",\"tested_points\":" + std::to_string(r.tested_points) + ",\"first_mismatch\":\"" +
         json_escape(r.first_mismatch) + "\",\"steps_total\":" + std::to_string(r.steps_total) +
         ",\"ambiguous_minus_hits\":" + std::to_string(r.ambiguous_minus_hits) + "}";
}

std::string report_tsv(const CheckReport& r) {
  return r.id + "\t" + check_status_name(r.status) + "\t" + std::to_string(r.tested_points) +
         "\t" + flatten(r.first_mismatch) + "\t" + std::to_string(r.steps_total) + "\t" +
         std::to_string(r.ambiguous_minus_hits);
}

std::string report_text(const CheckReport& r) {
  std::string line = check_status_name(r.status);
  line.resize(22, ' ');
  line += r.id;
  if (line.size() < 58) line.resize(58, ' ');
  line += "  points=" + std::to_string(r.tested_points) + " steps=" + std::to_string(r.steps_total);
  if (r.ambiguous_minus_hits) line += " amb=" + std::to_string(r.ambiguous_minus_hits);
  if (r.informational) line += " [informational]";
  if (!r.first_mismatch.empty()) line += "\n    " + flatten(r.first_mismatch);
  return line;
}

bool any_blocking_failure(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.informational && r.status != CheckStatus::Pass) return true;
  return false;
}

}  // namespace prf
