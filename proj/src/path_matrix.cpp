#include "nisat/path_matrix.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace nisat {

PathMatrix::PathMatrix(const Formula& f) : k_(f.clause_count()) {
  n_ = 2 + f.occurrence_count();
  entries_.assign(n_ * n_, BigInt(0));
  succ_.resize(n_);
  layer_.reserve(n_);
  layer_.push_back(0);
  std::size_t next = 1;
  for (int i = 1; i <= k_; ++i) {
    clause_offset_.push_back(next);
    const auto w = f.clause(i).width();
    layer_.insert(layer_.end(), w, i);
    next += w;
  }
  layer_.push_back(k_ + 1);
}

std::size_t PathMatrix::index_of(const VertexId& v) const {
  switch (v.kind) {
    case VertexId::Kind::source:
      return 0;
    case VertexId::Kind::sink:
      return n_ - 1;
    case VertexId::Kind::occurrence:
      break;
  }
  const auto [i, a] = v.occ;
  if (i < 1 || i > k_ || a < 1) throw std::out_of_range("vertex out of range");
  const std::size_t start = clause_offset_[static_cast<std::size_t>(i - 1)];
  const std::size_t end = i == k_ ? n_ - 1 : clause_offset_[static_cast<std::size_t>(i)];
  const std::size_t idx = start + static_cast<std::size_t>(a - 1);
  if (idx >= end) throw std::out_of_range("vertex out of range");
  return idx;
}

VertexId PathMatrix::vertex_at(std::size_t index) const {
  if (index >= n_) throw std::out_of_range("vertex index out of range");
  if (index == 0) return VertexId::source();
  if (index == n_ - 1) return VertexId::sink();
  const int i = layer_[index];
  return VertexId::occurrence(i, static_cast<int>(index - clause_offset_[static_cast<std::size_t>(i - 1)]) + 1);
}

void PathMatrix::add_edge_value(std::size_t x, std::size_t y, const BigInt& w) {
  if (x >= n_ || y >= n_) throw std::out_of_range("vertex index out of range");
  if (layer_[x] >= layer_[y])
    throw std::invalid_argument("edge violates topological order (backward or same-layer)");
  if (w.is_zero()) return;
  auto& e = entries_[x * n_ + y];
  auto& s = succ_[x];
  if (!std::binary_search(s.begin(), s.end(), y)) s.insert(std::lower_bound(s.begin(), s.end(), y), y);
  e += w;
  base_ = false;
}

std::vector<PathMatrix::Entry> PathMatrix::nonzero_entries() const {
  std::vector<Entry> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (auto y : succ_[x])
      if (!at(x, y).is_zero()) out.push_back({x, y, at(x, y)});
  return out;
}

std::string PathMatrix::digest() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix(std::to_string(n_));
  for (const auto& e : nonzero_entries())
    mix(";" + std::to_string(e.x) + "," + std::to_string(e.y) + "=" + e.value.str());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PathMatrix build_base_matrix(const Formula& f) {
  PathMatrix m(f);
  const int k = f.clause_count();
  const auto s = m.index_of(VertexId::source());
  const auto t = m.index_of(VertexId::sink());
  const BigInt one = 1;
  if (k == 0) {
    m.add_edge_value(s, t, one);
  } else {
    for (std::size_t a = 1; a <= f.clause(1).width(); ++a)
      m.add_edge_value(s, m.index_of(VertexId::occurrence(1, static_cast<int>(a))), one);
    for (int i = 1; i < k; ++i)
      for (std::size_t a = 1; a <= f.clause(i).width(); ++a)
        for (std::size_t b = 1; b <= f.clause(i + 1).width(); ++b)
          m.add_edge_value(m.index_of(VertexId::occurrence(i, static_cast<int>(a))),
                           m.index_of(VertexId::occurrence(i + 1, static_cast<int>(b))), one);
    for (std::size_t a = 1; a <= f.clause(k).width(); ++a)
      m.add_edge_value(m.index_of(VertexId::occurrence(k, static_cast<int>(a))), t, one);
  }
  // Type-0 edges are the base state.
  m.base_ = true;
  return m;
}

namespace {

// Row-major square product with zero skipping.
std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t n,
                             PathCost* cost) {
  std::vector<BigInt> c(n * n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const auto& ail = a[i * n + l];
      if (ail.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& blj = b[l * n + j];
        if (blj.is_zero()) continue;
        c[i * n + j] += ail * blj;
        if (cost) ++cost->multiply_adds;
      }
    }
  }
  return c;
}

}  // namespace

BigInt path_value_matpow(const PathMatrix& m, std::size_t x, std::size_t y, PathCost* cost) {
  const std::size_t n = m.size();
  if (x >= n || y >= n) throw std::out_of_range("vertex index out of range");
  // Private copy with M[y,y] := 1; the caller's matrix is never touched.
  std::vector<BigInt> base(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) base[r * n + c] = m.at(r, c);
  base[y * n + y] = 1;

  std::vector<BigInt> power(n * n, BigInt(0));
  for (std::size_t r = 0; r < n; ++r) power[r * n + r] = 1;
  const int exponent = m.clause_count() + 1;
  for (int step = 0; step < exponent; ++step) power = multiply(power, base, n, cost);
  return power[x * n + y];
}

BigInt path_value_matpow(const PathMatrix& m, const VertexId& x, const VertexId& y) {
  return path_value_matpow(m, m.index_of(x), m.index_of(y));
}

BigInt path_value_dp(const PathMatrix& m, std::size_t x, std::size_t y, PathCost* cost) {
  const std::size_t n = m.size();
  if (x >= n || y >= n) throw std::out_of_range("vertex index out of range");
  if (x == y) return 1;
  if (y < x) return 0;
  std::vector<BigInt> val(y - x + 1, BigInt(0));
  val[0] = 1;
  for (std::size_t u = x; u < y; ++u) {
    const auto& vu = val[u - x];
    if (vu.is_zero()) continue;
    for (auto v : m.successors(u)) {
      if (v > y) break;
      const auto& w = m.at(u, v);
      if (w.is_zero()) continue;
      val[v - x] += vu * w;
      if (cost) ++cost->multiply_adds;
    }
  }
  return val[y - x];
}

BigInt path_value_dp(const PathMatrix& m, const VertexId& x, const VertexId& y) {
  return path_value_dp(m, m.index_of(x), m.index_of(y));
}

}  // namespace nisat
