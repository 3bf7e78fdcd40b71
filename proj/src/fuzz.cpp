#include "nisat/fuzz.hpp"

#include <algorithm>

#include "nisat/counter.hpp"
#include "nisat/parse.hpp"

namespace nisat {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t attempt) {
  return (seed ^ trial) ^ (attempt * 0x9E3779B97F4A7C15ull);
}

bool is_discrepant(const Formula& f, const BigInt& cap) {
  if (f.tuple_count() > cap) return false;
  return count(f, {.force_interlaced = true, .corrections = {}}).pi_s_t != brute_force_count(f, cap);
}

namespace {

constexpr std::uint64_t kMaxResamples = 1000;

// Returns false when the run must stop.
bool check(const Formula& f, std::uint64_t seed_used, const FuzzParams& params, FuzzReport& report) {
  ++report.trials;
  const auto result = count(f, {.force_interlaced = true, .corrections = {}});
  const auto gamma = brute_force_count(f, params.cap);
  if (result.interlaced && result.bound_exceeded) ++report.bound_findings;
  if (result.pi_s_t == gamma) {
    ++report.agreements;
    return true;
  }
  if (!result.interlaced) {
    report.fatal = FatalFinding{f, result.pi_s_t, gamma, seed_used};
    return false;
  }
  Discrepancy d{f, result.pi_s_t, gamma, true, std::nullopt};
  if (params.shrink_discrepancies)
    d.shrunk = shrink(f, [&](const Formula& g) { return is_discrepant(g, params.cap); });
  report.discrepancies.push_back(std::move(d));
  return true;
}

}  // namespace

FuzzReport fuzz(const FuzzParams& params) {
  const auto start = std::chrono::steady_clock::now();
  FuzzReport report;
  report.seed = params.generator.seed;
  report.params = params.generator;

  bool running = true;
  for (const auto& f : params.corpus) {
    if (f.tuple_count() > params.cap) {
      ++report.oversized;
      continue;
    }
    if (!(running = check(f, 0, params, report))) break;
  }

  for (std::uint64_t t = 0; running && t < params.trials; ++t) {
    GeneratorParams g = params.generator;
    std::optional<Formula> f;
    for (std::uint64_t attempt = 0; attempt < kMaxResamples; ++attempt) {
      g.seed = trial_seed(params.generator.seed, t, attempt);
      auto candidate = random_formula(g);
      if (candidate.tuple_count() <= params.cap) {
        f = std::move(candidate);
        break;
      }
      ++report.oversized;
    }
    if (!f) continue;
    running = check(*f, g.seed, params, report);
  }

  std::sort(report.discrepancies.begin(), report.discrepancies.end(),
            [](const Discrepancy& a, const Discrepancy& b) { return to_native(a.formula) < to_native(b.formula); });
  report.duration = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace nisat
