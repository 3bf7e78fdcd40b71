#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "nisat/formula.hpp"

namespace nisat {

enum class GenMode { any, non_interlaced_only, interlaced_only };

std::string_view to_string(GenMode m);
GenMode parse_gen_mode(std::string_view name);

struct GeneratorParams {
  int min_clauses = 1;
  int max_clauses = 8;
  int max_width = 3;
  std::int64_t max_variable = 6;
  std::uint64_t seed = 0;
  GenMode mode = GenMode::any;
  std::uint64_t max_attempts = 1'000'000;
};

class GeneratorExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Clause count, widths and variables uniform in their ranges, signs fair.
/// Filtered modes resample until the interlacing predicate matches and
/// throw GeneratorExhausted after max_attempts draws.
Formula random_formula(const GeneratorParams& p);

}  // namespace nisat
