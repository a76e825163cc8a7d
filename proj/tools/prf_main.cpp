#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prf/catalog.hpp"
#include "prf/errors.hpp"
#include "prf/eval.hpp"
#include "prf/harness.hpp"
#include "prf/parser.hpp"
#include "prf/term.hpp"

using namespace prf;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

MacroExpander builder_macros(Flavor fl) {
  return [fl](char op, const TermPtr& l, const TermPtr& r) {
    switch (op) {
      case '+': return build_addition(l, r, fl);
      case '-': return build_sec6(Sec6Op::Sub, l, r, Sec6Variant::E);
      default: return build_sec6(Sec6Op::OTimes, l, r, Sec6Variant::E);
    }
  };
}

LetEnv load_lets(const std::vector<std::string>& files, const std::vector<std::string>& inlines,
                 Flavor fl) {
  LetEnv env;
  MacroExpander mac = builder_macros(fl);
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw UnknownId("cannot open let file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    for (auto& [name, term] : parse_let_file(ss.str(), &env, mac)) env[name] = term;
  }
  for (const auto& spec : inlines) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) throw UnknownId("--let expects NAME=EXPR");
    std::string name = trim(spec.substr(0, eq));
    if (name.empty()) throw UnknownId("--let expects NAME=EXPR");
    env[name] = parse_expr(spec.substr(eq + 1), &env);
  }
  return env;
}

std::uint64_t env_budget(std::uint64_t fallback) {
  if (const char* e = std::getenv("PRF_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed PRF_BUDGET value\n";
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for iteration-based function bases"};
  app.require_subcommand(1);

  std::vector<std::string> let_files, let_inline;
  std::string macro_flavor = "monus";
  app.add_option("--lets", let_files, "let file(s) with named bindings")->check(CLI::ExistingFile);
  app.add_option("--let", let_inline, "inline binding NAME=EXPR");
  app.add_option("--macro-flavor", macro_flavor, "minus reading used by the (+) let-file macro")
      ->check(CLI::IsMember({"dist", "monus"}));

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "parse an expression and echo its normal rendering");
  std::string parse_src;
  cmd_parse->add_option("expr", parse_src, "expression")->required();

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "evaluate an expression at the given arguments");
  std::string eval_src, eval_mode = "deep", eval_basis;
  std::vector<std::string> eval_args;
  std::uint64_t eval_budget = 50'000'000;
  auto* eval_budget_opt = cmd_eval->add_option("--budget", eval_budget, "step budget");
  cmd_eval->add_option("--mode", eval_mode, "deep expands atom definitions; shallow computes them")
      ->check(CLI::IsMember({"deep", "shallow"}));
  cmd_eval->add_option("--basis", eval_basis, "dialect whose definitions deep mode expands");
  cmd_eval->add_option("expr", eval_src, "expression")->required();
  cmd_eval->add_option("args", eval_args, "natural-number arguments");

  // catalog
  auto* cmd_catalog = app.add_subcommand("catalog", "browse the construction catalog");
  auto* cat_list = cmd_catalog->add_subcommand("list", "list entries");
  std::string cat_section;
  cat_list->add_option("section", cat_section, "restrict to one section");
  auto* cat_show = cmd_catalog->add_subcommand("show", "show one entry");
  std::string cat_id;
  cat_show->add_option("id", cat_id, "entry id, e.g. sec4/Rt")->required();
  cmd_catalog->require_subcommand(1);

  // check
  auto* cmd_check = app.add_subcommand("check", "run a verification suite");
  std::string suite = "all", format = "text";
  std::uint64_t check_budget = 0;
  unsigned jobs = 1;
  std::string max_x;
  bool experimental = false;
  cmd_check->add_option("--suite", suite, "suite name or 'all'");
  cmd_check->add_option("--max-x", max_x, "clamp check ranges to x <= N");
  auto* check_budget_opt = cmd_check->add_option("--budget", check_budget, "per-point step budget");
  cmd_check->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));
  cmd_check->add_option("--format", format, "text, json (one object per line), or tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  cmd_check->add_flag("--experimental", experimental, "include informational extras");

  // export-lets
  auto* cmd_export = app.add_subcommand("export-lets", "emit a section as a let file");
  std::string export_section;
  cmd_export->add_option("section", export_section, "catalog section")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Flavor fl = macro_flavor == "dist" ? Flavor::Dist : Flavor::Monus;
    LetEnv env = load_lets(let_files, let_inline, fl);

    if (*cmd_parse) {
      TermPtr t = parse_expr(parse_src, &env);
      std::cout << to_source(t) << "\n";
      std::cerr << "arity " << t->arity() << ", " << term_count_nodes(t) << " nodes\n";
      return 0;
    }

    if (*cmd_eval) {
      TermPtr t = parse_expr(eval_src, &env);
      std::vector<Nat> args;
      for (const auto& a : eval_args) args.emplace_back(a);
      EvalConfig cfg;
      cfg.mode = eval_mode == "deep" ? EvalMode::Deep : EvalMode::Shallow;
      cfg.budget = eval_budget_opt->count() ? eval_budget : env_budget(eval_budget);
      if (!eval_basis.empty()) cfg.expander = dialect_expander(eval_basis);
      try {
        EvalOutcome out = eval(t, args, cfg);
        std::cout << out.value.str() << "\n";
        std::cerr << "steps " << out.steps_used;
        if (out.ambiguous_minus_hits)
          std::cerr << ", ambiguous minus fired " << out.ambiguous_minus_hits << " time(s)";
        std::cerr << "\n";
        return 0;
      } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    }

    if (*cmd_catalog) {
      if (*cat_list) {
        for (const auto& e : catalog_all()) {
          if (!cat_section.empty() && e.section != cat_section) continue;
          std::cout << e.id << "\t" << e.basis << "\t[" << e.check_lo.str() << ", "
                    << e.feasible_x.str() << "]\n";
        }
        return 0;
      }
      const CatalogEntry& e = catalog_get(cat_id);
      std::cout << "id:        " << e.id << "\n"
                << "basis:     " << e.basis << "\n"
                << "reference: " << (e.oracle_ref.empty() ? "(composite)" : e.oracle_ref) << "\n"
                << "arity:     " << e.term->arity() << "\n"
                << "range:     [" << e.check_lo.str() << ", " << e.feasible_x.str() << "]\n"
                << "budget:    " << e.suggested_budget << "\n"
                << "source:    " << to_source(e.term) << "\n";
      TermPtr ex = expand_for_membership(e.term, e.basis);
      MembershipResult m = in_basis(ex, basis_get(e.basis));
      std::cout << "expanded:  " << term_count_nodes(ex) << " nodes, in basis: "
                << (m.ok ? "yes" : "no (" + m.reason + ")") << "\n";
      return 0;
    }

    if (*cmd_check) {
      SuiteOptions opts;
      if (!max_x.empty()) opts.max_x = Nat(max_x);
      if (check_budget_opt->count())
        opts.budget = check_budget;
      else if (const char* envb = std::getenv("PRF_BUDGET"))
        (void)envb, opts.budget = env_budget(0);
      if (opts.budget && *opts.budget == 0) opts.budget.reset();
      opts.jobs = jobs;
      opts.experimental = experimental;

      std::vector<CheckReport> reports;
      if (format == "text") {
        reports = run_suite(suite, opts);
        std::sort(reports.begin(), reports.end(),
                  [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
        for (const auto& r : reports) std::cout << report_text(r) << "\n";
      } else {
        auto sink = [&](const CheckReport& r) {
          std::cout << (format == "json" ? report_json(r) : report_tsv(r)) << "\n";
          std::cout.flush();
        };
        reports = run_suite(suite, opts, sink);
      }
      std::size_t passed = 0;
      for (const auto& r : reports)
        if (r.status == CheckStatus::Pass || r.informational) ++passed;
      std::cerr << passed << "/" << reports.size() << " checks pass\n";
      return any_blocking_failure(reports) ? 1 : 0;
    }

    if (*cmd_export) {
      std::cout << export_lets(export_section);
      return 0;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownId& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
