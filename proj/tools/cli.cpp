#include "cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nisat/conflict.hpp"
#include "nisat/counter.hpp"
#include "nisat/fuzz.hpp"
#include "nisat/generator.hpp"
#include "nisat/oracle.hpp"
#include "nisat/parse.hpp"
#include "nisat/reorder.hpp"
#include "nisat/report.hpp"

namespace nisat::cli {

namespace {

using nlohmann::json;

struct InputOptions {
  std::string path;
  std::string format = "auto";
  bool strict = false;
  bool allow_empty_clause = false;
};

void add_input(CLI::App* sub, InputOptions& in) {
  sub->add_option("input", in.path, "Formula file (DIMACS CNF or JSON array of clauses)")->required();
  sub->add_option("--format", in.format, "Input format")->check(CLI::IsMember({"auto", "dimacs", "json"}));
  sub->add_flag("--strict", in.strict, "Reject DIMACS clause-count mismatches");
  sub->add_flag("--allow-empty-clause", in.allow_empty_clause,
                "Answer Gamma=0 for DIMACS empty clauses instead of rejecting the file");
}

DimacsResult load(const InputOptions& in, std::ostream& err) {
  DimacsOptions opts{in.strict, in.allow_empty_clause};
  auto r = load_formula(in.path, parse_format_name(in.format), opts);
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  return r;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::sat:
      return kExitSat;
    case Verdict::unsat:
      return kExitUnsat;
    case Verdict::unsupported_interlaced:
      return kExitInterlaced;
  }
  return kExitError;
}

json empty_clause_verdict() {
  return {{"pi_s_t", "0"}, {"verdict", "unsat"}, {"empty_clause", true}, {"advisory", false}};
}

void write_trace_file(const std::string& path, const TraceRun& run) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open trace file " + path);
  f << json{{"event", "initial_matrix"}, {"matrix", report::matrix(run.initial)}}.dump() << '\n';
  for (const auto& e : run.events) f << report::trace_event(e).dump() << '\n';
  f << json{{"event", "final_matrix"}, {"matrix", report::matrix(run.final_matrix)}}.dump() << '\n';
  auto result = report::count_result(run.result);
  result["event"] = "result";
  f << result.dump() << '\n';
  if (!f) throw std::runtime_error("write error on trace file " + path);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact good-choice counting and satisfiability for non-interlaced CNF formulas", "nisat"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON document here instead of standard output");

  InputOptions in;
  bool force = false;
  bool check = false;
  std::string trace_path;
  std::uint64_t cap = kDefaultOracleCap;
  std::uint64_t budget = kDefaultReorderBudget;
  std::string method = "exact";
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string mode = "any";
  GeneratorParams gen;
  std::string corpus_path;
  bool no_shrink = false;

  auto* count_cmd = app.add_subcommand("count", "Count good choices via corrected path values");
  auto* decide_cmd = app.add_subcommand("decide", "Satisfiability verdict");
  for (auto* sub : {count_cmd, decide_cmd}) {
    add_input(sub, in);
    sub->add_flag("--force-interlaced", force, "Apply the pi(s,t) > 0 rule on interlaced input (advisory)");
    sub->add_flag("--check", check, "Cross-check every path value with the matrix-power route");
    sub->add_option("--trace", trace_path, "Write a JSON Lines trace of the correction rounds");
  }
  auto* analyze_cmd = app.add_subcommand("analyze", "Conflict set and interlacing report");
  add_input(analyze_cmd, in);
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force count and witness");
  add_input(oracle_cmd, in);
  oracle_cmd->add_option("--cap", cap, "Maximum number of occurrence tuples to enumerate");
  auto* reorder_cmd = app.add_subcommand("reorder", "Search for a non-interlaced clause order");
  add_input(reorder_cmd, in);
  reorder_cmd->add_option("--budget", budget, "Node budget for the exact search");
  reorder_cmd->add_option("--method", method, "Search method")->check(CLI::IsMember({"exact", "greedy"}));
  auto* trace_cmd = app.add_subcommand("trace", "Full correction trace with matrix dumps");
  add_input(trace_cmd, in);
  trace_cmd->add_option("--trace", trace_path, "Also write the trace as JSON Lines");
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential run against the brute-force oracle");
  fuzz_cmd->add_option("--trials", trials, "Number of random formulas");
  fuzz_cmd->add_option("--seed", seed, "Base seed; trial t uses seed XOR t");
  fuzz_cmd->add_option("--mode", mode, "Interlacing filter")
      ->check(CLI::IsMember({"any", "noninterlaced", "interlaced"}));
  fuzz_cmd->add_option("--cap", cap, "Oracle tuple cap; larger draws are resampled");
  fuzz_cmd->add_option("--min-clauses", gen.min_clauses, "Minimum clause count");
  fuzz_cmd->add_option("--max-clauses", gen.max_clauses, "Maximum clause count");
  fuzz_cmd->add_option("--max-width", gen.max_width, "Maximum clause width");
  fuzz_cmd->add_option("--max-vars", gen.max_variable, "Maximum variable index");
  fuzz_cmd->add_option("--corpus", corpus_path, "JSON array of formulas checked before the random trials");
  fuzz_cmd->add_flag("--no-shrink", no_shrink, "Keep discrepancies unshrunk");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  json doc;
  int code = kExitOk;
  try {
    if (count_cmd->parsed() || decide_cmd->parsed()) {
      auto input = load(in, err);
      if (input.has_empty_clause) {
        doc = empty_clause_verdict();
        code = kExitUnsat;
      } else {
        CountOptions opts;
        opts.force_interlaced = force;
        opts.corrections.cross_check_matpow = check;
        CountResult r;
        if (!trace_path.empty()) {
          auto run = trace_run(input.formula, opts);
          write_trace_file(trace_path, run);
          r = run.result;
        } else {
          r = count(input.formula, opts);
        }
        if (count_cmd->parsed()) {
          doc = report::count_result(r);
        } else {
          doc = {{"verdict", std::string(to_string(r.satisfiable))},
                 {"advisory", r.advisory},
                 {"interlaced", r.interlaced},
                 {"pi_s_t", r.pi_s_t.str()}};
        }
        code = verdict_exit(r.satisfiable);
        if (r.satisfiable == Verdict::unsupported_interlaced)
          err << "interlaced input: pi(s,t) = " << r.pi_s_t << " is advisory only; rerun with --force-interlaced\n";
        else if (r.advisory)
          err << "verdict is advisory: input is interlaced\n";
      }
    } else if (analyze_cmd->parsed()) {
      auto input = load(in, err);
      const auto d = conflict_set(input.formula);
      doc = report::analysis(input.formula, d, is_interlaced(d));
      if (input.has_empty_clause) doc["empty_clause"] = true;
    } else if (oracle_cmd->parsed()) {
      auto input = load(in, err);
      if (input.has_empty_clause) {
        doc = {{"gamma", "0"}, {"satisfiable", false}, {"witness", nullptr}, {"empty_clause", true}};
        code = kExitUnsat;
      } else {
        const auto gamma = brute_force_count(input.formula, cap);
        const auto choice = brute_force_sat(input.formula, cap);
        doc = {{"gamma", gamma.str()}, {"satisfiable", choice.has_value()}};
        doc["witness"] = choice ? report::witness(input.formula, *choice) : json(nullptr);
        code = choice ? kExitSat : kExitUnsat;
      }
    } else if (reorder_cmd->parsed()) {
      auto input = load(in, err);
      if (input.has_empty_clause) throw std::runtime_error("reorder: input has an empty clause");
      auto r = method == "greedy" ? find_order_greedy(input.formula) : find_order_exact(input.formula, budget);
      doc = report::reorder(r);
    } else if (trace_cmd->parsed()) {
      auto input = load(in, err);
      if (input.has_empty_clause) throw std::runtime_error("trace: input has an empty clause");
      auto run = trace_run(input.formula, {.force_interlaced = true, .corrections = {}});
      if (!trace_path.empty()) write_trace_file(trace_path, run);
      json events = json::array();
      for (const auto& e : run.events) events.push_back(report::trace_event(e));
      doc = {{"initial_matrix", report::matrix(run.initial)},
             {"events", events},
             {"final_matrix", report::matrix(run.final_matrix)},
             {"result", report::count_result(run.result)}};
    } else if (fuzz_cmd->parsed()) {
      FuzzParams p;
      p.generator = gen;
      p.generator.seed = seed;
      p.generator.mode = parse_gen_mode(mode);
      p.trials = trials;
      p.cap = cap;
      p.shrink_discrepancies = !no_shrink;
      if (!corpus_path.empty()) {
        std::ifstream f(corpus_path);
        if (!f) throw std::runtime_error("cannot open corpus " + corpus_path);
        json corpus = json::parse(f);
        if (!corpus.is_array()) throw ParseError("corpus must be a JSON array of formulas");
        for (const auto& item : corpus) p.corpus.push_back(parse_native(item.dump()));
      }
      auto r = fuzz(p);
      doc = report::fuzz(r);
      err << "fuzz: " << r.trials << " trials, " << r.agreements << " agreements, " << r.discrepancies.size()
          << " interlaced discrepancies\n";
      if (r.fatal) {
        err << "FATAL: non-interlaced formula " << to_native(r.fatal->formula) << " gives pi(s,t) = "
            << r.fatal->pi_s_t << " but Gamma = " << r.fatal->gamma << '\n';
        code = kExitFatalFinding;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f || !(f << doc.dump(2) << '\n')) {
      err << "error: cannot write " << out_path << '\n';
      return kExitError;
    }
  } else {
    out << doc.dump(2) << '\n';
  }
  return code;
}

}  // namespace nisat::cli
