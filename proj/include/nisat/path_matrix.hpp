#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nisat/bigint.hpp"
#include "nisat/formula.hpp"

namespace nisat {

struct VertexId {
  enum class Kind { source, sink, occurrence };

  Kind kind = Kind::source;
  OccurrenceRef occ{};

  static VertexId source() { return {Kind::source, {}}; }
  static VertexId sink() { return {Kind::sink, {}}; }
  static VertexId occurrence(int clause, int position) { return {Kind::occurrence, {clause, position}}; }
  static VertexId occurrence(OccurrenceRef r) { return {Kind::occurrence, r}; }

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// Dense N x N value matrix of the layered graph: source (index 0),
/// occurrences in clause-major then position order, sink (index N-1).
/// Entry (x, y) is the summed value of all edges x -> y. Edges only ever
/// go from a lower layer to a strictly higher one, so the graph stays
/// acyclic and index order is a topological order.
class PathMatrix;
PathMatrix build_base_matrix(const Formula& f);

class PathMatrix {
 public:
  explicit PathMatrix(const Formula& f);

  std::size_t size() const noexcept { return n_; }
  int clause_count() const noexcept { return k_; }

  std::size_t index_of(const VertexId& v) const;
  VertexId vertex_at(std::size_t index) const;
  /// 0 for the source, i for occurrences of clause i, k+1 for the sink.
  int layer_of(std::size_t index) const { return layer_.at(index); }

  const BigInt& at(std::size_t x, std::size_t y) const { return entries_[x * n_ + y]; }
  const BigInt& at(const VertexId& x, const VertexId& y) const { return at(index_of(x), index_of(y)); }

  /// entry(x, y) += w. Throws std::invalid_argument unless layer(x) < layer(y).
  void add_edge_value(std::size_t x, std::size_t y, const BigInt& w);
  void add_edge_value(const VertexId& x, const VertexId& y, const BigInt& w) {
    add_edge_value(index_of(x), index_of(y), w);
  }

  /// Targets y with a (possibly since-cancelled) edge x -> y, ascending.
  const std::vector<std::size_t>& successors(std::size_t x) const { return succ_[x]; }

  /// False once any value has been added on top of the type-0 edges.
  bool is_base() const noexcept { return base_; }

  struct Entry {
    std::size_t x;
    std::size_t y;
    BigInt value;
  };
  std::vector<Entry> nonzero_entries() const;
  /// FNV-1a over the nonzero entries, 16 hex digits.
  std::string digest() const;

  friend bool operator==(const PathMatrix& a, const PathMatrix& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.entries_ == b.entries_;
  }

 private:
  friend PathMatrix build_base_matrix(const Formula& f);

  std::size_t n_ = 0;
  int k_ = 0;
  std::vector<BigInt> entries_;
  std::vector<int> layer_;
  std::vector<std::size_t> clause_offset_;  // index of v^i_1, by clause (0-based)
  std::vector<std::vector<std::size_t>> succ_;
  bool base_ = true;
};

/// Type-0 edges only: s -> C1, Ci -> Ci+1 (all occurrence pairs), Ck -> t,
/// or s -> t when the formula is empty.
PathMatrix build_base_matrix(const Formula& f);

/// Counts big-integer multiply-adds performed by a path evaluation.
struct PathCost {
  std::uint64_t multiply_adds = 0;
};

/// Sum over paths x -> y of the product of edge values, by raising the
/// matrix (with y made absorbing) to the power k+1. Reference route.
BigInt path_value_matpow(const PathMatrix& m, std::size_t x, std::size_t y, PathCost* cost = nullptr);
BigInt path_value_matpow(const PathMatrix& m, const VertexId& x, const VertexId& y);

/// Same contract, one forward pass over the topological order.
BigInt path_value_dp(const PathMatrix& m, std::size_t x, std::size_t y, PathCost* cost = nullptr);
BigInt path_value_dp(const PathMatrix& m, const VertexId& x, const VertexId& y);

}  // namespace nisat
