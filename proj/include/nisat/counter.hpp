#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nisat/bigint.hpp"
#include "nisat/conflict.hpp"
#include "nisat/formula.hpp"
#include "nisat/path_matrix.hpp"

namespace nisat {

/// Signed correction edge v^i_a -> v^j_b carrying -alpha, where alpha was the
/// path value between the two complementary occurrences when it was added.
struct CorrectionEdge {
  OccurrenceRef from;
  OccurrenceRef to;
  BigInt alpha;
  BigInt applied_value;
  int delta = 0;
  std::size_t round_seq = 0;  // position in the global processing order
};

struct CorrectionOptions {
  // Recompute every alpha with the matrix-power route and throw
  // std::logic_error on disagreement.
  bool cross_check_matpow = false;
  // Process the occurrence pairs of each span round in a seeded random order
  // instead of the canonical (i, a, b) order.
  std::optional<std::uint64_t> shuffle_seed;
  std::function<void(const CorrectionEdge&, const PathMatrix&)> on_correction;
};

/// Adds one correction edge per complementary occurrence pair, spans in
/// increasing order, each alpha taken on the current (already corrected)
/// matrix. Throws std::logic_error if `m` is not a base matrix.
std::vector<CorrectionEdge> apply_corrections(const Formula& f, PathMatrix& m, const ConflictSet& d,
                                              const CorrectionOptions& options = {});

enum class Verdict { sat, unsat, unsupported_interlaced };

std::string_view to_string(Verdict v);

struct PhaseTimings {
  std::chrono::nanoseconds conflicts{0};
  std::chrono::nanoseconds base_matrix{0};
  std::chrono::nanoseconds corrections{0};
  std::chrono::nanoseconds final_path{0};
};

struct CountResult {
  BigInt pi_s_t;
  bool interlaced = false;
  Verdict satisfiable = Verdict::unsat;
  // Verdict was forced on an interlaced input; no correctness guarantee.
  bool advisory = false;
  BigInt gamma_bound;  // product of clause widths
  std::size_t corrections = 0;
  // |pi_s_t| > gamma_bound. Only possible on interlaced inputs.
  bool bound_exceeded = false;
  std::uint64_t multiply_adds = 0;
  std::optional<Crossing> witness;
  PhaseTimings timing;
};

struct CountOptions {
  bool force_interlaced = false;
  CorrectionOptions corrections;
};

/// Full method: conflict set, base matrix, corrections, pi(s,t). On an
/// interlaced input pi(s,t) is still computed but only as an advisory
/// value, and the verdict is unsupported_interlaced unless forced.
CountResult count(const Formula& f, const CountOptions& options = {});
CountResult decide(const Formula& f, bool force_interlaced, const CountOptions& options = {});

struct TraceEvent {
  int delta = 0;
  ConflictPair pair;
  OccurrenceRef from;
  OccurrenceRef to;
  BigInt alpha;
  std::string matrix_digest;  // after this correction
};

struct TraceRun {
  PathMatrix initial;
  std::vector<TraceEvent> events;
  PathMatrix final_matrix;
  CountResult result;
};

TraceRun trace_run(const Formula& f, const CountOptions& options = {});

/// Re-applies the recorded corrections to a fresh base matrix and returns
/// pi(s,t).
BigInt replay(const Formula& f, std::span<const TraceEvent> events);

}  // namespace nisat
