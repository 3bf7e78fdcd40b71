#pragma once

#include <optional>

#include "json.hpp"
#include "nisat/conflict.hpp"
#include "nisat/counter.hpp"
#include "nisat/formula.hpp"
#include "nisat/fuzz.hpp"
#include "nisat/oracle.hpp"
#include "nisat/path_matrix.hpp"
#include "nisat/reorder.hpp"

// JSON encoders for every machine-readable output. Big integers are written
// as decimal strings; clause and occurrence indices are 1-based.
namespace nisat::report {

using nlohmann::json;

json formula(const Formula& f);
json pair(ConflictPair p);
json occurrence(OccurrenceRef r);

/// {k, widths, delta, interlaced, witness}
json analysis(const Formula& f, const ConflictSet& d, const InterlaceReport& r);

/// {n, entries: [[x, y, "value"], ...]} over nonzero entries
json matrix(const PathMatrix& m);

json count_result(const CountResult& r, bool with_timing = true);
json trace_event(const TraceEvent& e);
json correction(const CorrectionEdge& e);

/// {picks: [[i, a], ...], literals: [...]}
json witness(const Formula& f, const GoodChoice& c);

/// {found, sigma, nodes_explored, budget_exhausted}
json reorder(const ReorderResult& r);

json generator_params(const GeneratorParams& p);
json fuzz(const FuzzReport& r, bool with_timing = true);

}  // namespace nisat::report
