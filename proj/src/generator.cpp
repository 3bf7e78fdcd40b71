#include "nisat/generator.hpp"

#include <random>
#include <string>

#include "nisat/conflict.hpp"

namespace nisat {

std::string_view to_string(GenMode m) {
  switch (m) {
    case GenMode::any:
      return "any";
    case GenMode::non_interlaced_only:
      return "noninterlaced";
    case GenMode::interlaced_only:
      return "interlaced";
  }
  return "any";
}

GenMode parse_gen_mode(std::string_view name) {
  if (name == "any") return GenMode::any;
  if (name == "noninterlaced" || name == "non-interlaced") return GenMode::non_interlaced_only;
  if (name == "interlaced") return GenMode::interlaced_only;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

Formula random_formula(const GeneratorParams& p) {
  if (p.min_clauses < 1 || p.max_clauses < p.min_clauses || p.max_width < 1 || p.max_variable < 1)
    throw std::invalid_argument("generator bounds must be >= 1 with min_clauses <= max_clauses");
  if (p.mode == GenMode::interlaced_only && p.max_clauses < 4)
    throw GeneratorExhausted("interlaced-only is infeasible: a crossing needs at least 4 clauses");

  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<int> k_dist(p.min_clauses, p.max_clauses);
  std::uniform_int_distribution<int> w_dist(1, p.max_width);
  std::uniform_int_distribution<std::int64_t> v_dist(1, p.max_variable);
  std::bernoulli_distribution sign(0.5);

  for (std::uint64_t attempt = 0; attempt < p.max_attempts; ++attempt) {
    const int k = k_dist(rng);
    std::vector<Clause> clauses;
    clauses.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      std::vector<Literal> lits;
      const int w = w_dist(rng);
      for (int a = 0; a < w; ++a) {
        const auto v = v_dist(rng);
        lits.emplace_back(sign(rng) ? v : -v);
      }
      clauses.emplace_back(std::move(lits));
    }
    Formula f(std::move(clauses));
    if (p.mode == GenMode::any) return f;
    const bool interlaced = is_interlaced(conflict_set(f)).interlaced;
    if (interlaced == (p.mode == GenMode::interlaced_only)) return f;
  }
  throw GeneratorExhausted("no " + std::string(to_string(p.mode)) + " formula after " +
                           std::to_string(p.max_attempts) + " attempts");
}

}  // namespace nisat
