#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "nisat/bigint.hpp"

namespace nisat {

/// A nonzero integer literal; a negative value is the negation of the
/// variable with the same absolute value.
class Literal {
 public:
  /// Throws std::invalid_argument for 0 and for INT64_MIN (no negation).
  explicit Literal(std::int64_t value);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t variable() const noexcept { return value_ < 0 ? -value_ : value_; }
  bool positive() const noexcept { return value_ > 0; }
  Literal negation() const noexcept { return Literal(-value_, Unchecked{}); }
  bool complements(Literal other) const noexcept { return value_ == -other.value_; }

  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  struct Unchecked {};
  Literal(std::int64_t value, Unchecked) noexcept : value_(value) {}

  std::int64_t value_;
};

/// Ordered, nonempty list of literal occurrences. Duplicates and
/// complementary literals may co-occur; each is a distinct occurrence.
class Clause {
 public:
  /// Throws std::invalid_argument when `literals` is empty.
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<std::int64_t> values);

  std::size_t width() const noexcept { return literals_.size(); }
  std::span<const Literal> literals() const noexcept { return literals_; }
  /// 1-based position, as in OccurrenceRef.
  Literal at(std::size_t position) const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

/// Addresses one occurrence: clause i, position a, both 1-based.
struct OccurrenceRef {
  int clause = 0;
  int position = 0;

  friend auto operator<=>(const OccurrenceRef&, const OccurrenceRef&) = default;
};

/// Ordered list of clauses. Order is preserved exactly from input because
/// interlacing depends on it.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {}
  Formula(std::initializer_list<Clause> clauses) : clauses_(clauses) {}

  int clause_count() const noexcept { return static_cast<int>(clauses_.size()); }
  std::span<const Clause> clauses() const noexcept { return clauses_; }
  /// 1-based clause index.
  const Clause& clause(int i) const;
  Literal literal(OccurrenceRef occ) const;

  std::vector<std::size_t> widths() const;
  std::size_t occurrence_count() const;
  /// Product of the clause widths (1 for the empty formula).
  BigInt tuple_count() const;
  std::int64_t max_variable() const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  std::vector<Clause> clauses_;
};

/// Clause i of the result is clause sigma[i-1] of `f` (sigma holds 1-based
/// indices). Throws std::invalid_argument unless sigma is a bijection on 1..k.
Formula permute(const Formula& f, std::span<const int> sigma);

std::vector<int> inverse_permutation(std::span<const int> sigma);
bool is_permutation_of_k(std::span<const int> sigma, int k);

}  // namespace nisat
