#include "nisat/counter.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace nisat {

namespace {

using Clock = std::chrono::steady_clock;

struct PendingPair {
  ConflictPair pair;
  OccurrenceRef from;
  OccurrenceRef to;
};

struct RunState {
  PathMatrix initial;
  PathMatrix matrix;
  std::vector<CorrectionEdge> corrections;
  CountResult result;
};

RunState run(const Formula& f, const CountOptions& options, bool keep_initial,
             std::vector<TraceEvent>* events) {
  CountResult r;
  auto t0 = Clock::now();
  const ConflictSet d = conflict_set(f);
  const auto report = is_interlaced(d);
  r.interlaced = report.interlaced;
  r.witness = report.witness;
  auto t1 = Clock::now();
  PathMatrix m = build_base_matrix(f);
  PathMatrix initial = keep_initial ? m : PathMatrix(Formula{});
  auto t2 = Clock::now();

  CorrectionOptions copts = options.corrections;
  if (events) {
    auto user = copts.on_correction;
    copts.on_correction = [&, user](const CorrectionEdge& e, const PathMatrix& cur) {
      events->push_back({e.delta, {e.from.clause, e.to.clause}, e.from, e.to, e.alpha, cur.digest()});
      if (user) user(e, cur);
    };
  }
  auto corrections = apply_corrections(f, m, d, copts);
  auto t3 = Clock::now();

  PathCost cost;
  const auto s = m.index_of(VertexId::source());
  const auto t = m.index_of(VertexId::sink());
  r.pi_s_t = path_value_dp(m, s, t, &cost);
  if (options.corrections.cross_check_matpow && path_value_matpow(m, s, t) != r.pi_s_t)
    throw std::logic_error("path value routes disagree on pi(s,t)");
  auto t4 = Clock::now();

  r.gamma_bound = f.tuple_count();
  r.corrections = corrections.size();
  r.multiply_adds = cost.multiply_adds;
  BigInt magnitude = r.pi_s_t < 0 ? BigInt(-r.pi_s_t) : r.pi_s_t;
  r.bound_exceeded = magnitude > r.gamma_bound;
  if (r.interlaced && !options.force_interlaced) {
    r.satisfiable = Verdict::unsupported_interlaced;
  } else {
    r.satisfiable = r.pi_s_t > 0 ? Verdict::sat : Verdict::unsat;
    r.advisory = r.interlaced;
  }
  r.timing = {t1 - t0, t2 - t1, t3 - t2, t4 - t3};
  return {std::move(initial), std::move(m), std::move(corrections), std::move(r)};
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::sat:
      return "sat";
    case Verdict::unsat:
      return "unsat";
    case Verdict::unsupported_interlaced:
      return "unsupported-interlaced";
  }
  return "unknown";
}

std::vector<CorrectionEdge> apply_corrections(const Formula& f, PathMatrix& m, const ConflictSet& d,
                                              const CorrectionOptions& options) {
  if (!m.is_base()) throw std::logic_error("apply_corrections requires an uncorrected base matrix");
  if (m.clause_count() != f.clause_count() || d.clause_count() != f.clause_count())
    throw std::invalid_argument("matrix, conflict set and formula disagree on clause count");

  std::vector<CorrectionEdge> log;
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  for (int delta = 1; delta < f.clause_count(); ++delta) {
    std::vector<PendingPair> round;
    for (const auto& p : d.with_span(delta))
      for (const auto& [from, to] : complementary_occurrences(f, p)) round.push_back({p, from, to});
    if (rng) std::shuffle(round.begin(), round.end(), *rng);

    for (const auto& item : round) {
      const auto x = m.index_of(VertexId::occurrence(item.from));
      const auto y = m.index_of(VertexId::occurrence(item.to));
      CorrectionEdge e;
      e.from = item.from;
      e.to = item.to;
      e.alpha = path_value_dp(m, x, y);
      if (options.cross_check_matpow && path_value_matpow(m, x, y) != e.alpha)
        throw std::logic_error("path value routes disagree on a correction alpha");
      e.applied_value = -e.alpha;
      e.delta = delta;
      e.round_seq = log.size();
      m.add_edge_value(x, y, e.applied_value);
      log.push_back(e);
      if (options.on_correction) options.on_correction(log.back(), m);
    }
  }
  return log;
}

CountResult count(const Formula& f, const CountOptions& options) {
  return run(f, options, false, nullptr).result;
}

CountResult decide(const Formula& f, bool force_interlaced, const CountOptions& options) {
  CountOptions o = options;
  o.force_interlaced = force_interlaced;
  return count(f, o);
}

TraceRun trace_run(const Formula& f, const CountOptions& options) {
  std::vector<TraceEvent> events;
  auto state = run(f, options, true, &events);
  return {std::move(state.initial), std::move(events), std::move(state.matrix), std::move(state.result)};
}

BigInt replay(const Formula& f, std::span<const TraceEvent> events) {
  PathMatrix m = build_base_matrix(f);
  for (const auto& e : events)
    m.add_edge_value(VertexId::occurrence(e.from), VertexId::occurrence(e.to), -e.alpha);
  return path_value_dp(m, VertexId::source(), VertexId::sink());
}

}  // namespace nisat
