#include "nisat/reorder.hpp"

#include <algorithm>
#include <numeric>

#include "nisat/conflict.hpp"

namespace nisat {

namespace {

// Conflict adjacency over original clause indices (0-based).
std::vector<std::vector<int>> conflict_graph(const Formula& f) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(f.clause_count()));
  const auto d = conflict_set(f);
  for (const auto& p : d.pairs()) {
    adj[static_cast<std::size_t>(p.i - 1)].push_back(p.j - 1);
    adj[static_cast<std::size_t>(p.j - 1)].push_back(p.i - 1);
  }
  return adj;
}

class ExactSearch {
 public:
  ExactSearch(const Formula& f, std::uint64_t budget) : adj_(conflict_graph(f)), budget_(budget) {
    const auto k = adj_.size();
    position_.assign(k, 0);
    for (std::size_t c = 0; c < k; ++c) (adj_[c].empty() ? isolated_ : active_).push_back(static_cast<int>(c));
  }

  ReorderResult run() {
    ReorderResult r;
    if (extend()) {
      r.found = true;
      for (int c : order_) r.sigma.push_back(c + 1);
      for (int c : isolated_) r.sigma.push_back(c + 1);
    }
    r.nodes_explored = nodes_;
    r.budget_exhausted = exhausted_;
    return r;
  }

 private:
  bool extend() {
    if (order_.size() == active_.size()) return true;
    const int p = static_cast<int>(order_.size()) + 1;
    for (int c : active_) {
      if (position_[static_cast<std::size_t>(c)] != 0) continue;
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      const auto mark = placed_pairs_.size();
      bool ok = true;
      for (int u : adj_[static_cast<std::size_t>(c)]) {
        const int q = position_[static_cast<std::size_t>(u)];
        if (q == 0) continue;
        const ConflictPair fresh{q, p};
        for (std::size_t e = 0; e < mark && ok; ++e) ok = !crosses(placed_pairs_[e], fresh);
        if (!ok) break;
        placed_pairs_.push_back(fresh);
      }
      if (ok) {
        position_[static_cast<std::size_t>(c)] = p;
        order_.push_back(c);
        if (extend()) return true;
        order_.pop_back();
        position_[static_cast<std::size_t>(c)] = 0;
      }
      placed_pairs_.resize(mark);
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::uint64_t budget_;
  std::vector<int> active_;
  std::vector<int> isolated_;
  std::vector<int> position_;  // 1-based position, 0 when unplaced
  std::vector<int> order_;
  std::vector<ConflictPair> placed_pairs_;  // in positions
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::size_t crossings_of(const std::vector<int>& seq, const std::vector<std::vector<int>>& adj) {
  std::vector<int> pos(adj.size(), 0);
  for (std::size_t p = 0; p < seq.size(); ++p) pos[static_cast<std::size_t>(seq[p])] = static_cast<int>(p) + 1;
  std::vector<ConflictPair> pairs;
  for (int c : seq)
    for (int u : adj[static_cast<std::size_t>(c)]) {
      const int a = pos[static_cast<std::size_t>(c)];
      const int b = pos[static_cast<std::size_t>(u)];
      if (b != 0 && a < b) pairs.push_back({a, b});
    }
  std::size_t n = 0;
  for (std::size_t x = 0; x < pairs.size(); ++x)
    for (std::size_t y = x + 1; y < pairs.size(); ++y)
      if (crosses(pairs[x], pairs[y])) ++n;
  return n;
}

}  // namespace

ReorderResult find_order_exact(const Formula& f, std::uint64_t budget) {
  return ExactSearch(f, budget).run();
}

ReorderResult find_order_greedy(const Formula& f) {
  const auto adj = conflict_graph(f);
  std::vector<int> by_degree(adj.size());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size(); });

  ReorderResult r;
  std::vector<int> seq;
  for (int c : by_degree) {
    std::size_t best_at = 0;
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t at = 0; at <= seq.size(); ++at) {
      auto trial = seq;
      trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(at), c);
      ++r.nodes_explored;
      const auto n = crossings_of(trial, adj);
      // Ties go to the later slot so conflict-free input keeps its order.
      if (n <= best) {
        best = n;
        best_at = at;
      }
    }
    seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(best_at), c);
  }
  if (crossings_of(seq, adj) == 0) {
    r.found = true;
    for (int c : seq) r.sigma.push_back(c + 1);
  }
  return r;
}

}  // namespace nisat
