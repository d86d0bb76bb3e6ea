// psi: command-line driver for the kernel.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "psi/alpha.hpp"
#include "psi/format.hpp"
#include "psi/iso.hpp"
#include "psi/normalize.hpp"
#include "psi/oracle.hpp"
#include "psi/parse.hpp"
#include "psi/rewrite.hpp"
#include "psi/trace.hpp"
#include "psi/typecheck.hpp"

namespace {

enum Exit {
  kOk = 0,
  kTypeError = 1,
  kParseError = 2,
  kBudgetExceeded = 3,
  kInvariantViolation = 4,
};

void report(const psi::TypeError& e) {
  std::cerr << "type error: " << psi::to_string(e.kind()) << " at "
            << psi::to_string(e.path()) << ": " << e.detail() << "\n";
}

int run_check(const std::string& path) {
  psi::SourceFile file = psi::load_source(path);
  int status = kOk;
  for (const auto& d : file.declarations) {
    try {
      psi::Type t = psi::synthesize(d.ctx, d.term);
      std::cout << d.name << " : " << psi::format(t) << "\n";
    } catch (const psi::TypeError& e) {
      std::cout << d.name << " : <ill-typed>\n";
      report(e);
      status = kTypeError;
    }
  }
  for (const auto& e : file.expectations) {
    if (e.kind != psi::Expectation::Kind::HasType) continue;
    const psi::Declaration* d = file.find(e.name);
    auto t = psi::try_synthesize(d->ctx, d->term);
    bool ok = t && psi::types_isomorphic(*t, *e.type);
    std::cout << (ok ? "ok   " : "FAIL ") << e.name << " : "
              << psi::format(*e.type) << "\n";
    if (!ok) status = kTypeError;
  }
  return status;
}

int run_eval(const std::string& path, bool all, std::size_t budget) {
  psi::SourceFile file = psi::load_source(path);
  int status = kOk;
  bool exhausted = false;
  std::map<std::string, std::vector<psi::ReductionTrace>> results;
  for (const auto& d : file.declarations) {
    try {
      psi::synthesize(d.ctx, d.term);
    } catch (const psi::TypeError& e) {
      std::cout << d.name << " : <ill-typed>\n";
      report(e);
      status = kTypeError;
      continue;
    }
    auto traces = psi::normalize(d.term, all ? psi::Strategy::Exhaustive
                                             : psi::Strategy::Deterministic,
                                 budget);
    for (const auto& t : traces) {
      std::cout << d.name << " => " << psi::format(t.result);
      if (!all) std::cout << "  (" << t.steps.size() << " steps)";
      std::cout << "\n";
      if (!t.exhaustive) exhausted = true;
    }
    results[d.name] = std::move(traces);
  }
  for (const auto& e : file.expectations) {
    if (e.kind != psi::Expectation::Kind::ReducesTo) continue;
    auto it = results.find(e.name);
    if (it == results.end()) continue;
    bool ok = !it->second.empty();
    for (const auto& t : it->second)
      if (psi::term_equiv(t.result, *e.term, budget) != psi::Tri::True)
        ok = false;
    std::cout << (ok ? "ok   " : "FAIL ") << e.name
              << " => " << psi::format(*e.term) << "\n";
    if (!ok) status = kTypeError;
  }
  if (status == kOk && exhausted) {
    std::cerr << "budget exceeded; results may be incomplete\n";
    return kBudgetExceeded;
  }
  return status;
}

psi::Term checked_term(const std::string& text) {
  psi::Term t = psi::parse_term(text);
  psi::synthesize({}, t);
  return t;
}

int run_class(const std::string& text, std::size_t budget) {
  psi::Term t = checked_term(text);
  psi::EquivClass cls = psi::equiv_class(t, budget);
  for (const auto& m : cls.members()) std::cout << psi::format(m) << "\n";
  std::cout << "-- " << cls.size() << " members"
            << (cls.exhausted() ? "" : ", budget exceeded") << "\n";
  return cls.exhausted() ? kOk : kBudgetExceeded;
}

int run_trace(const std::string& text, const std::string& fmt,
              std::size_t budget) {
  psi::Term t = checked_term(text);
  psi::ReductionGraph graph(t, budget, psi::kDefaultGraphBudget);
  if (fmt == "dot")
    std::cout << psi::trace_dot(graph);
  else
    std::cout << psi::trace_json(graph, {budget, psi::kDefaultGraphBudget});
  return graph.complete() ? kOk : kBudgetExceeded;
}

int run_pf(const std::string& text) {
  psi::Type a = psi::parse_type(text);
  for (const auto& p : psi::prime_factors(a))
    std::cout << psi::format(p) << "\n";
  std::cout << "-- canonical: " << psi::to_string(psi::canonicalize(a)) << "\n";
  return kOk;
}

int run_iso(const std::string& a, const std::string& b) {
  bool iso = psi::types_isomorphic(psi::parse_type(a), psi::parse_type(b));
  std::cout << (iso ? "true" : "false") << "\n";
  return kOk;
}

int run_oracle(const std::string& a, const std::string& b,
               std::size_t budget) {
  auto v = psi::iso_oracle(psi::parse_type(a), psi::parse_type(b), budget);
  if (v.related)
    std::cout << "true";
  else if (v.closed)
    std::cout << "false (closure exhausted)";
  else
    std::cout << "false-at-budget";
  std::cout << "  -- visited " << v.visited << "\n";
  return v.related || v.closed ? kOk : kBudgetExceeded;
}

// Batch read-check-eval loop over stdin.
int run_repl(std::size_t budget) {
  psi::Context ctx;
  std::string line;
  int status = kOk;
  while (std::getline(std::cin, line)) {
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line.compare(start, 2, "--") == 0)
      continue;
    line = line.substr(start);
    std::string cmd = ":t";
    std::string arg = line;
    if (line[0] == ':') {
      auto space = line.find(' ');
      cmd = line.substr(0, space);
      arg = space == std::string::npos ? "" : line.substr(space + 1);
    }
    try {
      if (cmd == ":q") break;
      if (cmd == ":ctx") {
        for (auto& [name, type] : psi::parse_context(arg))
          ctx.insert_or_assign(name, type);
      } else if (cmd == ":pf") {
        run_pf(arg);
      } else if (cmd == ":t") {
        psi::Term t = psi::parse_term(arg, ctx);
        std::cout << psi::format(t) << " : "
                  << psi::format(psi::synthesize(ctx, t)) << "\n";
      } else if (cmd == ":eval") {
        psi::Term t = psi::parse_term(arg, ctx);
        psi::synthesize(ctx, t);
        for (const auto& tr :
             psi::normalize(t, psi::Strategy::Exhaustive, budget))
          std::cout << psi::format(tr.result) << "\n";
      } else if (cmd == ":class") {
        psi::Term t = psi::parse_term(arg, ctx);
        psi::synthesize(ctx, t);
        psi::EquivClass cls = psi::equiv_class(t, budget);
        for (const auto& m : cls.members())
          std::cout << psi::format(m) << "\n";
        std::cout << "-- " << cls.size() << " members"
                  << (cls.exhausted() ? "" : ", budget exceeded") << "\n";
      } else {
        std::cout << "unknown command " << cmd << "\n";
      }
    } catch (const psi::ParseError& e) {
      std::cout << "parse error: " << e.what() << "\n";
      status = kParseError;
    } catch (const psi::TypeError& e) {
      std::cout << "type error: " << psi::to_string(e.kind()) << ": "
                << e.detail() << "\n";
      status = kTypeError;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PSI kernel: type checking, isomorphisms and reduction"};
  app.require_subcommand(1);

  std::string file, term, type_a, type_b, fmt = "json";
  std::size_t budget = psi::default_class_budget();
  std::size_t oracle_budget = psi::kDefaultOracleBudget;
  bool det = false, all = false;

  auto* check = app.add_subcommand("check", "Type-check a .psi file");
  check->add_option("FILE", file)->required();

  auto* eval = app.add_subcommand("eval", "Normalize the declarations of a file");
  auto* det_flag = eval->add_flag("--det", det, "Follow the least reduct");
  eval->add_flag("--all", all, "Find every normal form")->excludes(det_flag);
  eval->add_option("--budget", budget, "Equivalence class budget");
  eval->add_option("FILE", file)->required();

  auto* iso = app.add_subcommand("iso", "Decide type isomorphism");
  iso->add_option("T1", type_a)->required();
  iso->add_option("T2", type_b)->required();

  auto* pf = app.add_subcommand("pf", "Prime factors of a type");
  pf->add_option("T", type_a)->required();

  auto* cls = app.add_subcommand("class", "Equivalence class of a term");
  cls->add_option("--budget", budget, "Equivalence class budget");
  cls->add_option("TERM", term)->required();

  auto* trace = app.add_subcommand("trace", "Reduction graph of a term");
  trace->add_option("--format", fmt, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  trace->add_option("--budget", budget, "Equivalence class budget");
  trace->add_option("TERM", term)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force isomorphism search");
  oracle->add_option("T1", type_a)->required();
  oracle->add_option("T2", type_b)->required();
  oracle->add_option("--budget", oracle_budget, "Visited type budget");

  auto* repl = app.add_subcommand("repl", "Read commands from stdin");
  repl->add_option("--budget", budget, "Equivalence class budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  try {
    if (*check) return run_check(file);
    if (*eval) return run_eval(file, all, budget);
    if (*iso) return run_iso(type_a, type_b);
    if (*pf) return run_pf(type_a);
    if (*cls) return run_class(term, budget);
    if (*trace) return run_trace(term, fmt, budget);
    if (*oracle) return run_oracle(type_a, type_b, oracle_budget);
    if (*repl) return run_repl(budget);
  } catch (const psi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const psi::TypeError& e) {
    report(e);
    return kTypeError;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
