#include "nisat/conflict.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace nisat {

ConflictSet::ConflictSet(std::vector<ConflictPair> pairs, int clause_count)
    : pairs_(std::move(pairs)), k_(clause_count) {
  for (const auto& p : pairs_)
    if (p.i < 1 || p.i >= p.j || p.j > k_) throw std::invalid_argument("conflict pair out of range");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  by_span_.resize(static_cast<std::size_t>(std::max(k_, 1)));
  for (const auto& p : pairs_) by_span_[static_cast<std::size_t>(p.span())].push_back(p);
}

bool ConflictSet::contains(ConflictPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

const std::vector<ConflictPair>& ConflictSet::with_span(int span) const {
  static const std::vector<ConflictPair> none;
  if (span < 1 || static_cast<std::size_t>(span) >= by_span_.size()) return none;
  return by_span_[static_cast<std::size_t>(span)];
}

ConflictSet conflict_set(const Formula& f) {
  const int k = f.clause_count();
  std::vector<std::unordered_set<std::int64_t>> values(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i)
    for (auto l : f.clause(i).literals()) values[static_cast<std::size_t>(i - 1)].insert(l.value());

  std::vector<ConflictPair> pairs;
  for (int i = 1; i <= k; ++i) {
    const auto& vi = values[static_cast<std::size_t>(i - 1)];
    for (int j = i + 1; j <= k; ++j) {
      const auto& vj = values[static_cast<std::size_t>(j - 1)];
      const bool hit = std::any_of(vi.begin(), vi.end(), [&](std::int64_t v) { return vj.count(-v) > 0; });
      if (hit) pairs.push_back({i, j});
    }
  }
  return ConflictSet(std::move(pairs), k);
}

std::vector<std::pair<OccurrenceRef, OccurrenceRef>> complementary_occurrences(
    const Formula& f, ConflictPair p) {
  std::vector<std::pair<OccurrenceRef, OccurrenceRef>> out;
  const auto& ci = f.clause(p.i);
  const auto& cj = f.clause(p.j);
  for (std::size_t a = 1; a <= ci.width(); ++a)
    for (std::size_t b = 1; b <= cj.width(); ++b)
      if (ci.at(a).complements(cj.at(b)))
        out.push_back({{p.i, static_cast<int>(a)}, {p.j, static_cast<int>(b)}});
  return out;
}

InterlaceReport is_interlaced(const ConflictSet& d) {
  const auto& pairs = d.pairs();
  // Pairs are sorted, so the first hit in (outer, inner) order is the
  // lexicographically smallest ([i,j],[i',j']) with i < i' < j < j'.
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      const auto& a = pairs[x];
      const auto& b = pairs[y];
      if (b.i >= a.j) break;
      if (a.i < b.i && b.i < a.j && a.j < b.j) return {true, Crossing{a, b}};
    }
  }
  return {};
}

}  // namespace nisat
