#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "nisat/formula.hpp"

namespace nisat {

/// Clause-index pair [i, j], 1-based, i < j.
struct ConflictPair {
  int i = 0;
  int j = 0;

  int span() const noexcept { return j - i; }
  friend auto operator<=>(const ConflictPair&, const ConflictPair&) = default;
};

/// Pairs of clauses holding complementary literals. Kept sorted
/// lexicographically and also bucketed by span j - i.
class ConflictSet {
 public:
  ConflictSet() = default;
  /// Pairs are normalized (sorted, deduplicated); each must satisfy 1 <= i < j.
  ConflictSet(std::vector<ConflictPair> pairs, int clause_count);

  const std::vector<ConflictPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(ConflictPair p) const;
  int clause_count() const noexcept { return k_; }

  /// Pairs with j - i == span in ascending i; empty outside 1..k-1.
  const std::vector<ConflictPair>& with_span(int span) const;

  friend bool operator==(const ConflictSet& a, const ConflictSet& b) { return a.pairs_ == b.pairs_; }

 private:
  std::vector<ConflictPair> pairs_;
  std::vector<std::vector<ConflictPair>> by_span_;
  int k_ = 0;
};

ConflictSet conflict_set(const Formula& f);

/// Complementary occurrence pairs between clauses p.i and p.j, ordered by
/// (a, b).
std::vector<std::pair<OccurrenceRef, OccurrenceRef>> complementary_occurrences(
    const Formula& f, ConflictPair p);

struct Crossing {
  ConflictPair first;
  ConflictPair second;

  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

struct InterlaceReport {
  bool interlaced = false;
  std::optional<Crossing> witness;  // lexicographically smallest crossing
};

/// True iff two pairs strictly cross: i < i' < j < j'. Nested pairs and
/// pairs sharing an endpoint do not cross.
inline bool crosses(ConflictPair a, ConflictPair b) noexcept {
  return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

InterlaceReport is_interlaced(const ConflictSet& d);

}  // namespace nisat
