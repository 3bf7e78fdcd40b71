#pragma once

#include <cstddef>
#include <functional>

#include "nisat/formula.hpp"

namespace nisat {

using FormulaPredicate = std::function<bool(const Formula&)>;

struct ShrunkWitness {
  Formula original;
  Formula minimal;
  std::size_t steps = 0;
};

/// Greedy fixed point over single steps: drop a clause, drop one occurrence
/// from a clause of width >= 2, or renumber variable v to v-1 when v-1 is
/// unused (complementarity is unchanged). A step is kept only if the
/// predicate still holds. Throws std::invalid_argument if it fails on `f`.
ShrunkWitness shrink(const Formula& f, const FormulaPredicate& predicate);

/// Every formula one step away from `f`, in the order shrink() tries them.
std::vector<Formula> shrink_candidates(const Formula& f);

}  // namespace nisat
