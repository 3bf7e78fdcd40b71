#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "nisat/bigint.hpp"
#include "nisat/formula.hpp"
#include "nisat/generator.hpp"
#include "nisat/oracle.hpp"
#include "nisat/shrink.hpp"

namespace nisat {

struct FuzzParams {
  GeneratorParams generator;
  std::uint64_t trials = 0;
  BigInt cap = kDefaultOracleCap;
  bool shrink_discrepancies = true;
  // Checked before the random trials, e.g. known counterexamples.
  std::vector<Formula> corpus;
};

struct Discrepancy {
  Formula formula;
  BigInt pi_s_t;
  BigInt gamma;
  bool interlaced = true;
  std::optional<ShrunkWitness> shrunk;
};

/// A mismatch on a non-interlaced formula. Stops the run.
struct FatalFinding {
  Formula formula;
  BigInt pi_s_t;
  BigInt gamma;
  std::uint64_t trial_seed = 0;
};

struct FuzzReport {
  std::uint64_t trials = 0;  // formulas checked, corpus included
  std::uint64_t agreements = 0;
  std::uint64_t oversized = 0;       // draws resampled for exceeding the oracle cap
  std::uint64_t bound_findings = 0;  // interlaced runs with |pi| above the width product
  std::vector<Discrepancy> discrepancies;  // sorted by formula text
  std::optional<FatalFinding> fatal;
  std::uint64_t seed = 0;
  GeneratorParams params;
  std::chrono::nanoseconds duration{0};
};

/// Seed used for trial t: seed XOR t. Resampling an oversized draw mixes the
/// attempt number into the high bits.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt = 0);

/// True when pi(s,t) differs from the brute-force count. Oversized formulas
/// are never discrepant.
bool is_discrepant(const Formula& f, const BigInt& cap = kDefaultOracleCap);

/// Differential run of the counter against the oracle.
FuzzReport fuzz(const FuzzParams& params);

}  // namespace nisat
