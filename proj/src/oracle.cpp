#include "nisat/oracle.hpp"

#include <unordered_map>

namespace nisat {

namespace {

// Variables compressed to dense ids; each occurrence keeps (id, sign).
class Enumerator {
 public:
  explicit Enumerator(const Formula& f) {
    std::unordered_map<std::int64_t, std::size_t> ids;
    for (const auto& c : f.clauses()) {
      std::vector<Occ> row;
      for (auto l : c.literals()) {
        auto [it, inserted] = ids.try_emplace(l.variable(), ids.size());
        row.push_back({it->second, l.positive()});
      }
      clauses_.push_back(std::move(row));
    }
    pos_.assign(ids.size(), 0);
    neg_.assign(ids.size(), 0);
    picks_.assign(clauses_.size(), 0);
  }

  std::uint64_t count_all() { return descend(0, false); }

  std::optional<GoodChoice> first() {
    if (descend(0, true) == 0) return std::nullopt;
    GoodChoice g;
    for (std::size_t i = 0; i < picks_.size(); ++i)
      g.picks.push_back({static_cast<int>(i) + 1, static_cast<int>(picks_[i]) + 1});
    return g;
  }

 private:
  struct Occ {
    std::size_t var;
    bool positive;
  };

  std::uint64_t descend(std::size_t depth, bool stop_at_first) {
    if (depth == clauses_.size()) return 1;
    std::uint64_t total = 0;
    const auto& row = clauses_[depth];
    for (std::size_t a = 0; a < row.size(); ++a) {
      const auto [var, positive] = row[a];
      if ((positive ? neg_ : pos_)[var] > 0) continue;
      auto& slot = (positive ? pos_ : neg_)[var];
      ++slot;
      picks_[depth] = a;
      total += descend(depth + 1, stop_at_first);
      --slot;
      if (stop_at_first && total > 0) return total;
    }
    return total;
  }

  std::vector<std::vector<Occ>> clauses_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::size_t> picks_;
};

void check_cap(const Formula& f, const BigInt& cap) {
  const BigInt tuples = f.tuple_count();
  if (tuples > cap) throw SearchSpaceTooLarge(tuples, cap);
}

}  // namespace

SearchSpaceTooLarge::SearchSpaceTooLarge(const BigInt& tuples, const BigInt& cap)
    : std::runtime_error("search space too large: " + tuples.str() + " occurrence tuples exceed cap " +
                         cap.str()),
      tuples_(tuples) {}

bool is_good_choice(const Formula& f, const GoodChoice& c) {
  if (static_cast<int>(c.picks.size()) != f.clause_count()) return false;
  std::vector<Literal> chosen;
  for (std::size_t i = 0; i < c.picks.size(); ++i) {
    const auto& p = c.picks[i];
    if (p.clause != static_cast<int>(i) + 1) return false;
    if (p.position < 1 || static_cast<std::size_t>(p.position) > f.clause(p.clause).width()) return false;
    chosen.push_back(f.literal(p));
  }
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (chosen[i].complements(chosen[j])) return false;
  return true;
}

BigInt brute_force_count(const Formula& f, const BigInt& cap) {
  check_cap(f, cap);
  return Enumerator(f).count_all();
}

std::optional<GoodChoice> brute_force_sat(const Formula& f, const BigInt& cap) {
  check_cap(f, cap);
  return Enumerator(f).first();
}

}  // namespace nisat
