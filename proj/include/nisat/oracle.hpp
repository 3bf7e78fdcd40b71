#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nisat/bigint.hpp"
#include "nisat/formula.hpp"

namespace nisat {

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  SearchSpaceTooLarge(const BigInt& tuples, const BigInt& cap);

  const BigInt& tuples() const noexcept { return tuples_; }

 private:
  BigInt tuples_;
};

/// One occurrence per clause with no complementary pair across clauses.
struct GoodChoice {
  std::vector<OccurrenceRef> picks;
};

bool is_good_choice(const Formula& f, const GoodChoice& c);

/// Number of good choices by exhaustive search over occurrence tuples, with
/// pruning on the first conflict. Throws SearchSpaceTooLarge when the
/// product of widths exceeds `cap`.
BigInt brute_force_count(const Formula& f, const BigInt& cap = kDefaultOracleCap);

/// First good choice in odometer order, or nullopt when none exists.
std::optional<GoodChoice> brute_force_sat(const Formula& f, const BigInt& cap = kDefaultOracleCap);

}  // namespace nisat
