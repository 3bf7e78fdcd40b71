#include "nisat/report.hpp"

#include "nisat/parse.hpp"

namespace nisat::report {

namespace {

std::string dec(const BigInt& v) { return v.str(); }

}  // namespace

json formula(const Formula& f) { return json::parse(to_native(f)); }

json pair(ConflictPair p) { return json::array({p.i, p.j}); }

json occurrence(OccurrenceRef r) { return json::array({r.clause, r.position}); }

json analysis(const Formula& f, const ConflictSet& d, const InterlaceReport& r) {
  json delta = json::array();
  for (const auto& p : d.pairs()) delta.push_back(pair(p));
  json out{{"k", f.clause_count()}, {"widths", f.widths()}, {"delta", delta}, {"interlaced", r.interlaced}};
  out["witness"] = r.witness ? json::array({pair(r.witness->first), pair(r.witness->second)}) : json(nullptr);
  return out;
}

json matrix(const PathMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.nonzero_entries()) entries.push_back(json::array({e.x, e.y, dec(e.value)}));
  return {{"n", m.size()}, {"entries", entries}};
}

json count_result(const CountResult& r, bool with_timing) {
  json out{{"pi_s_t", dec(r.pi_s_t)},
           {"interlaced", r.interlaced},
           {"verdict", std::string(to_string(r.satisfiable))},
           {"advisory", r.advisory},
           {"gamma_bound", dec(r.gamma_bound)},
           {"corrections", r.corrections},
           {"bound_exceeded", r.bound_exceeded},
           {"multiply_adds", r.multiply_adds}};
  out["witness"] = r.witness ? json::array({pair(r.witness->first), pair(r.witness->second)}) : json(nullptr);
  if (with_timing) {
    out["timing_ns"] = {{"conflicts", r.timing.conflicts.count()},
                        {"base_matrix", r.timing.base_matrix.count()},
                        {"corrections", r.timing.corrections.count()},
                        {"final_path", r.timing.final_path.count()}};
  }
  return out;
}

json trace_event(const TraceEvent& e) {
  return {{"event", "correction"},     {"delta", e.delta},    {"pair", pair(e.pair)},
          {"from", occurrence(e.from)}, {"to", occurrence(e.to)}, {"alpha", dec(e.alpha)},
          {"matrix_digest", e.matrix_digest}};
}

json correction(const CorrectionEdge& e) {
  return {{"from", occurrence(e.from)}, {"to", occurrence(e.to)},   {"alpha", dec(e.alpha)},
          {"value", dec(e.applied_value)}, {"delta", e.delta}, {"seq", e.round_seq}};
}

json witness(const Formula& f, const GoodChoice& c) {
  json picks = json::array();
  json lits = json::array();
  for (const auto& p : c.picks) {
    picks.push_back(occurrence(p));
    lits.push_back(f.literal(p).value());
  }
  return {{"picks", picks}, {"literals", lits}};
}

json reorder(const ReorderResult& r) {
  return {{"found", r.found},
          {"sigma", r.found ? json(r.sigma) : json(nullptr)},
          {"nodes_explored", r.nodes_explored},
          {"budget_exhausted", r.budget_exhausted}};
}

json generator_params(const GeneratorParams& p) {
  return {{"min_clauses", p.min_clauses}, {"max_clauses", p.max_clauses},
          {"max_width", p.max_width},     {"max_variable", p.max_variable},
          {"seed", p.seed},               {"mode", std::string(to_string(p.mode))}};
}

json fuzz(const FuzzReport& r, bool with_timing) {
  json discrepancies = json::array();
  for (const auto& d : r.discrepancies) {
    json item{{"formula", formula(d.formula)},
              {"pi_s_t", dec(d.pi_s_t)},
              {"gamma", dec(d.gamma)},
              {"interlaced", d.interlaced}};
    if (d.shrunk) item["shrunk"] = {{"minimal", formula(d.shrunk->minimal)}, {"steps", d.shrunk->steps}};
    discrepancies.push_back(std::move(item));
  }
  json out{{"trials", r.trials},
           {"agreements", r.agreements},
           {"oversized", r.oversized},
           {"bound_findings", r.bound_findings},
           {"discrepancies", discrepancies},
           {"seed", r.seed},
           {"params", generator_params(r.params)}};
  if (r.fatal) {
    out["fatal"] = {{"formula", formula(r.fatal->formula)},
                    {"pi_s_t", dec(r.fatal->pi_s_t)},
                    {"gamma", dec(r.fatal->gamma)},
                    {"trial_seed", r.fatal->trial_seed},
                    {"params", generator_params(r.params)}};
  } else {
    out["fatal"] = nullptr;
  }
  if (with_timing) out["duration_ns"] = r.duration.count();
  return out;
}

}  // namespace nisat::report
