#pragma once

#include <cstdint>
#include <vector>

#include "nisat/formula.hpp"

namespace nisat {

struct ReorderResult {
  bool found = false;
  std::vector<int> sigma;  // 1-based; permute(f, sigma) is non-interlaced
  std::uint64_t nodes_explored = 0;
  bool budget_exhausted = false;
};

inline constexpr std::uint64_t kDefaultReorderBudget = 10'000'000;

/// Backtracking over clause orders, pruning a prefix as soon as two conflict
/// pairs with both ends placed cross. Exhaustive within `budget` nodes: a
/// not-found result with budget_exhausted == false means no non-interlaced
/// order exists. Exponential in the worst case.
ReorderResult find_order_exact(const Formula& f, std::uint64_t budget = kDefaultReorderBudget);

/// Insertion heuristic: clauses by decreasing conflict degree, each at the
/// position adding the fewest crossings. Not-found proves nothing.
ReorderResult find_order_greedy(const Formula& f);

}  // namespace nisat
