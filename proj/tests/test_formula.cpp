#include <random>

#include "doctest.h"
#include "nisat/conflict.hpp"
#include "nisat/formula.hpp"
#include "nisat/generator.hpp"
#include "support.hpp"

using namespace nisat;

namespace {

ConflictSet pairs(std::vector<ConflictPair> p, int k) { return ConflictSet(std::move(p), k); }

}  // namespace

TEST_SUITE("formula") {
  TEST_CASE("literal negation is an involution and zero is rejected") {
    Literal l(-7);
    CHECK(l.negation().value() == 7);
    CHECK(l.negation().negation() == l);
    CHECK(l.complements(Literal(7)));
    CHECK_FALSE(l.complements(l));
    CHECK_THROWS_AS(Literal(0), std::invalid_argument);
  }

  TEST_CASE("clauses keep duplicates and complementary literals but not emptiness") {
    Clause c{1, 2, 1, -2, -1};
    CHECK(c.width() == 5);
    CHECK(c.at(3).value() == 1);
    CHECK_THROWS_AS(Clause(std::vector<Literal>{}), std::invalid_argument);
    CHECK_THROWS_AS(c.at(0), std::out_of_range);
    CHECK_THROWS_AS(c.at(6), std::out_of_range);
  }

  TEST_CASE("formula accessors are 1-based") {
    Formula f{{1, 2, -3}, {-1, -2}};
    CHECK(f.clause_count() == 2);
    CHECK(f.widths() == std::vector<std::size_t>{3, 2});
    CHECK(f.literal({1, 3}).value() == -3);
    CHECK(f.tuple_count() == 6);
    CHECK(Formula{}.tuple_count() == 1);
  }

  TEST_CASE("permute reorders clauses only") {
    Formula f{{1}, {2}, {-1}, {-2}};
    std::vector<int> sigma{1, 2, 4, 3};
    CHECK(permute(f, sigma) == Formula{{1}, {2}, {-2}, {-1}});
    std::vector<int> id{1, 2, 3, 4};
    CHECK(permute(f, id) == f);
    CHECK(permute(Formula{}, std::vector<int>{}) == Formula{});
    CHECK_THROWS_AS(permute(f, std::vector<int>{1, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(permute(f, std::vector<int>{1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(permute(f, std::vector<int>{0, 1, 2, 3}), std::invalid_argument);
  }

  TEST_CASE("conflict set examples") {
    CHECK(conflict_set({{1}, {2}, {-1}, {-2}}).pairs() == std::vector<ConflictPair>{{1, 3}, {2, 4}});
    CHECK(conflict_set({{1}, {2}, {-2}, {-1}}).pairs() == std::vector<ConflictPair>{{1, 4}, {2, 3}});
    CHECK(conflict_set({{1, 2}, {1, 2}}).empty());
    // Several complementary occurrences still give a single pair.
    CHECK(conflict_set({{1, 2, 1}, {-1, -2}}).pairs() == std::vector<ConflictPair>{{1, 2}});
    // A clause holding x and -x conflicts with nothing by itself.
    CHECK(conflict_set({{1, -1}}).empty());
  }

  TEST_CASE("conflict set buckets by span") {
    auto d = conflict_set({{1}, {2}, {-2}, {-1}});
    CHECK(d.with_span(1) == std::vector<ConflictPair>{{2, 3}});
    CHECK(d.with_span(2).empty());
    CHECK(d.with_span(3) == std::vector<ConflictPair>{{1, 4}});
    CHECK(d.with_span(0).empty());
    CHECK(d.with_span(9).empty());
  }

  TEST_CASE("interlacing examples and witness") {
    auto r = is_interlaced(pairs({{1, 3}, {2, 4}}, 4));
    CHECK(r.interlaced);
    REQUIRE(r.witness);
    CHECK(r.witness->first == ConflictPair{1, 3});
    CHECK(r.witness->second == ConflictPair{2, 4});
    CHECK_FALSE(is_interlaced(pairs({{1, 4}, {2, 3}}, 4)).interlaced);
    CHECK_FALSE(is_interlaced(pairs({}, 0)).interlaced);
    // Shared endpoints do not cross.
    CHECK_FALSE(is_interlaced(pairs({{1, 3}, {3, 5}, {1, 5}}, 5)).interlaced);
    CHECK_FALSE(is_interlaced(pairs({{1, 3}, {1, 4}, {2, 3}}, 4)).interlaced);
  }

  TEST_CASE("witness is the lexicographically smallest crossing") {
    auto r = is_interlaced(pairs({{1, 5}, {2, 4}, {2, 6}, {3, 7}, {1, 3}}, 7));
    REQUIRE(r.witness);
    CHECK(r.witness->first == ConflictPair{1, 3});
    CHECK(r.witness->second == ConflictPair{2, 4});
  }

  TEST_CASE("property: interlacing matches the direct definition and needs k >= 4") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
      GeneratorParams p{.min_clauses = 1, .max_clauses = 7, .max_width = 3, .max_variable = 5, .seed = rng()};
      auto f = random_formula(p);
      const bool fast = is_interlaced(conflict_set(f)).interlaced;
      REQUIRE(fast == testing::naive_interlaced(f));
      if (f.clause_count() <= 3) REQUIRE_FALSE(fast);
    }
  }

  TEST_CASE("property: conflict set relabels through the permutation") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 500; ++t) {
      GeneratorParams p{.min_clauses = 1, .max_clauses = 7, .max_width = 3, .max_variable = 5, .seed = rng()};
      auto f = random_formula(p);
      std::vector<int> sigma(static_cast<std::size_t>(f.clause_count()));
      std::iota(sigma.begin(), sigma.end(), 1);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      const auto inv = inverse_permutation(sigma);
      std::vector<ConflictPair> relabeled;
      const auto d = conflict_set(f);
      for (auto [i, j] : d.pairs()) {
        int a = inv[static_cast<std::size_t>(i - 1)], b = inv[static_cast<std::size_t>(j - 1)];
        relabeled.push_back({std::min(a, b), std::max(a, b)});
      }
      REQUIRE(conflict_set(permute(f, sigma)) == ConflictSet(relabeled, f.clause_count()));
    }
  }

  TEST_CASE("interlacing depends only on the conflict set") {
    // Different literals, same conflict structure.
    Formula a{{1}, {2}, {-1}, {-2}};
    Formula b{{5, 9}, {7}, {-5, 3}, {-7, 3}};
    REQUIRE(conflict_set(a) == conflict_set(b));
    CHECK(is_interlaced(conflict_set(a)).interlaced == is_interlaced(conflict_set(b)).interlaced);
  }
}
