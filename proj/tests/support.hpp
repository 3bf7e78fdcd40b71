#pragma once

// Test-only oracles. These deliberately share no code paths with the
// library routines they check.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "nisat/bigint.hpp"
#include "nisat/conflict.hpp"
#include "nisat/formula.hpp"
#include "nisat/path_matrix.hpp"

namespace nisat::testing {

// Sum over every explicit path x -> y (depth-first, all successors scanned
// through the dense matrix) of the product of its edge values.
inline BigInt enumerate_paths(const PathMatrix& m, std::size_t x, std::size_t y) {
  if (x == y) return 1;
  BigInt total = 0;
  for (std::size_t z = 0; z < m.size(); ++z) {
    const auto& w = m.at(x, z);
    if (w.is_zero()) continue;
    total += w * enumerate_paths(m, z, y);
  }
  return total;
}

// Good choices counted over the full odometer with no pruning.
inline BigInt naive_good_choices(const Formula& f) {
  const int k = f.clause_count();
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  BigInt good = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        ok = !f.clause(i + 1).literals()[idx[static_cast<std::size_t>(i)]].complements(
            f.clause(j + 1).literals()[idx[static_cast<std::size_t>(j)]]);
    if (ok) ++good;
    int d = k - 1;
    while (d >= 0 && ++idx[static_cast<std::size_t>(d)] == f.clause(d + 1).width()) idx[static_cast<std::size_t>(d--)] = 0;
    if (d < 0) break;
  }
  return good;
}

// Direct definition of interlacing: any two conflict pairs with
// i < i' < j < j', checked on all ordered pairs of clause-index pairs.
inline bool naive_interlaced(const Formula& f) {
  const int k = f.clause_count();
  auto conflicts = [&](int i, int j) {
    for (auto a : f.clause(i).literals())
      for (auto b : f.clause(j).literals())
        if (a.value() == -b.value()) return true;
    return false;
  };
  for (int i = 1; i <= k; ++i)
    for (int ip = i + 1; ip <= k; ++ip)
      for (int j = ip + 1; j <= k; ++j)
        for (int jp = j + 1; jp <= k; ++jp)
          if (conflicts(i, j) && conflicts(ip, jp)) return true;
  return false;
}

// Whether any of the k! clause orders is non-interlaced.
inline bool some_order_non_interlaced(const Formula& f) {
  std::vector<int> sigma(static_cast<std::size_t>(f.clause_count()));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    if (!naive_interlaced(permute(f, sigma))) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

// Every complementary occurrence pair in adjacent clauses has a zero entry.
inline bool adjacent_conflicts_zeroed(const Formula& f, const PathMatrix& m) {
  for (int i = 1; i < f.clause_count(); ++i)
    for (std::size_t a = 1; a <= f.clause(i).width(); ++a)
      for (std::size_t b = 1; b <= f.clause(i + 1).width(); ++b)
        if (f.clause(i).at(a).complements(f.clause(i + 1).at(b)) &&
            !m.at(VertexId::occurrence(i, static_cast<int>(a)), VertexId::occurrence(i + 1, static_cast<int>(b))).is_zero())
          return false;
  return true;
}

inline std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "nisat_tests";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace nisat::testing
