#include "nisat/shrink.hpp"

#include <set>
#include <stdexcept>

namespace nisat {

std::vector<Formula> shrink_candidates(const Formula& f) {
  std::vector<Formula> out;
  const auto clauses = f.clauses();
  const int k = f.clause_count();

  for (int drop = 0; drop < k; ++drop) {
    std::vector<Clause> rest;
    for (int i = 0; i < k; ++i)
      if (i != drop) rest.push_back(clauses[static_cast<std::size_t>(i)]);
    out.emplace_back(std::move(rest));
  }

  for (int i = 0; i < k; ++i) {
    const auto lits = clauses[static_cast<std::size_t>(i)].literals();
    if (lits.size() < 2) continue;
    for (std::size_t a = 0; a < lits.size(); ++a) {
      std::vector<Literal> fewer;
      for (std::size_t b = 0; b < lits.size(); ++b)
        if (b != a) fewer.push_back(lits[b]);
      std::vector<Clause> next(clauses.begin(), clauses.end());
      next[static_cast<std::size_t>(i)] = Clause(std::move(fewer));
      out.emplace_back(std::move(next));
    }
  }

  std::set<std::int64_t> vars;
  for (const auto& c : clauses)
    for (auto l : c.literals()) vars.insert(l.variable());
  for (auto v : vars) {
    if (v <= 1 || vars.count(v - 1)) continue;
    std::vector<Clause> next;
    for (const auto& c : clauses) {
      std::vector<Literal> lits;
      for (auto l : c.literals())
        lits.emplace_back(l.variable() == v ? (l.positive() ? v - 1 : -(v - 1)) : l.value());
      next.emplace_back(std::move(lits));
    }
    out.emplace_back(std::move(next));
  }
  return out;
}

ShrunkWitness shrink(const Formula& f, const FormulaPredicate& predicate) {
  if (!predicate(f)) throw std::invalid_argument("shrink: predicate does not hold on the input");
  ShrunkWitness w{f, f, 0};
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (auto& candidate : shrink_candidates(w.minimal)) {
      if (predicate(candidate)) {
        w.minimal = std::move(candidate);
        ++w.steps;
        progressed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace nisat
