#include "nisat/formula.hpp"

#include <algorithm>
#include <limits>

namespace nisat {

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(std::string_view text) { return BigInt(std::string(text)); }

Literal::Literal(std::int64_t value) : value_(value) {
  if (value == 0) throw std::invalid_argument("zero literal");
  if (value == std::numeric_limits<std::int64_t>::min())
    throw std::invalid_argument("literal out of range");
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) throw std::invalid_argument("empty clause unsupported");
}

Clause::Clause(std::initializer_list<std::int64_t> values) {
  literals_.reserve(values.size());
  for (auto v : values) literals_.emplace_back(v);
  if (literals_.empty()) throw std::invalid_argument("empty clause unsupported");
}

Literal Clause::at(std::size_t position) const {
  if (position < 1 || position > literals_.size())
    throw std::out_of_range("occurrence position out of range");
  return literals_[position - 1];
}

const Clause& Formula::clause(int i) const {
  if (i < 1 || i > clause_count()) throw std::out_of_range("clause index out of range");
  return clauses_[static_cast<std::size_t>(i - 1)];
}

Literal Formula::literal(OccurrenceRef occ) const {
  return clause(occ.clause).at(static_cast<std::size_t>(occ.position));
}

std::vector<std::size_t> Formula::widths() const {
  std::vector<std::size_t> out;
  out.reserve(clauses_.size());
  for (const auto& c : clauses_) out.push_back(c.width());
  return out;
}

std::size_t Formula::occurrence_count() const {
  std::size_t n = 0;
  for (const auto& c : clauses_) n += c.width();
  return n;
}

BigInt Formula::tuple_count() const {
  BigInt p = 1;
  for (const auto& c : clauses_) p *= c.width();
  return p;
}

std::int64_t Formula::max_variable() const {
  std::int64_t m = 0;
  for (const auto& c : clauses_)
    for (auto l : c.literals()) m = std::max(m, l.variable());
  return m;
}

bool is_permutation_of_k(std::span<const int> sigma, int k) {
  if (static_cast<int>(sigma.size()) != k) return false;
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (int s : sigma) {
    if (s < 1 || s > k || seen[static_cast<std::size_t>(s)]) return false;
    seen[static_cast<std::size_t>(s)] = true;
  }
  return true;
}

std::vector<int> inverse_permutation(std::span<const int> sigma) {
  if (!is_permutation_of_k(sigma, static_cast<int>(sigma.size())))
    throw std::invalid_argument("sigma is not a bijection on clause indices");
  std::vector<int> inv(sigma.size());
  for (std::size_t p = 0; p < sigma.size(); ++p)
    inv[static_cast<std::size_t>(sigma[p] - 1)] = static_cast<int>(p) + 1;
  return inv;
}

Formula permute(const Formula& f, std::span<const int> sigma) {
  if (!is_permutation_of_k(sigma, f.clause_count()))
    throw std::invalid_argument("sigma is not a bijection on clause indices");
  std::vector<Clause> out;
  out.reserve(sigma.size());
  for (int s : sigma) out.push_back(f.clause(s));
  return Formula(std::move(out));
}

}  // namespace nisat
