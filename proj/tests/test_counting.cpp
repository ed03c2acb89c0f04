#include "counting.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracle_helpers.hpp"
#include "permanent.hpp"

using namespace scsudoku;

TEST_CASE("empty 4x4 grid has 288 solutions") {
  CountResult r = count_solutions(Grid(2));
  CHECK(r.count == 288);
  CHECK(r.nodes > 0);

  // deterministic in single-threaded mode
  CountResult again = count_solutions(Grid(2));
  CHECK(again.count == r.count);
  CHECK(again.nodes == r.nodes);
}

TEST_CASE("counter agrees with the independent row-tuple oracle") {
  const auto& oracle = testutil::all_4x4_solutions();
  CHECK(oracle.size() == 288);

  std::set<std::string> expected;
  for (const auto& g : oracle) expected.insert(g.serialize());
  std::set<std::string> found;
  for_each_solution(Grid(2), 0, [&](const Grid& g) {
    found.insert(g.serialize());
    return true;
  });
  CHECK(found == expected);
}

TEST_CASE("inconsistent grids count zero without an error") {
  Grid g(2);
  g.set(0, 0, 1);
  g.set(0, 1, 1);
  CountResult r = count_solutions(g);
  CHECK(r.count == 0);
}

TEST_CASE("a complete grid counts itself") {
  Grid solved = testutil::canonical_9x9_solution();
  CHECK(count_solutions(solved).count == 1);
}

TEST_CASE("solutions of partial grids pass the consistency check") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 5; ++rep) {
    Grid g = testutil::random_partial_grid(2, 6, -1, rng);
    for_each_solution(g, 0, [&](const Grid& full) {
      CHECK(full.is_consistent());
      CHECK(full.is_complete());
      return true;
    });
  }
}

TEST_CASE("the node budget aborts instead of lying") {
  CHECK_THROWS_AS(count_solutions(Grid(2), 10), Error);
  try {
    count_solutions(Grid(2), 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
  // a full 3x3 count is far beyond desk scale; the budget must trip
  CHECK_THROWS_AS(count_solutions(Grid(3), 100000), Error);
}

TEST_CASE("partly filled counts at n = 2, exhaustive over patterns") {
  SUBCASE("(2;1,1): every pattern admits 12 completions") {
    auto pf = count_partly_filled({2, 1, 1});
    CHECK(pf.patterns == 24);
    CHECK(pf.min == 12);
    CHECK(pf.max == 12);
    CHECK(pf.histogram.size() == 1);
    CHECK(pf.histogram.at(12) == 24);
  }

  SUBCASE("(2;1,2): counts split between 2 and 4") {
    auto pf = count_partly_filled({2, 1, 2});
    CHECK(pf.patterns == 96);
    CHECK(pf.min == 2);
    CHECK(pf.max == 4);
    CHECK(pf.histogram.size() == 2);
    CHECK(pf.histogram.at(2) == 48);
    CHECK(pf.histogram.at(4) == 48);
  }

  SUBCASE("(2;2,1): transposing the rectangle preserves the histogram") {
    auto a = count_partly_filled({2, 1, 2});
    auto b = count_partly_filled({2, 2, 1});
    CHECK(a.histogram == b.histogram);
  }

  SUBCASE("(2;2,2): the full grid is its own single completion") {
    auto pf = count_partly_filled({2, 2, 2});
    CHECK(pf.patterns == 288);
    CHECK(pf.min == 1);
    CHECK(pf.max == 1);
  }

  SUBCASE("(2;0,0): the empty pattern") {
    auto pf = count_partly_filled({2, 0, 0});
    CHECK(pf.patterns == 1);
    CHECK(pf.min == 288);
  }
}

TEST_CASE("partly filled counts: sampling mode") {
  auto pf = count_partly_filled({2, 1, 1}, 0, 10, 42);
  CHECK(pf.patterns == 10);
  CHECK(pf.min == 12);
  CHECK(pf.max == 12);

  // identical seeds draw identical patterns
  auto again = count_partly_filled({2, 1, 1}, 0, 10, 42);
  CHECK(again.histogram == pf.histogram);

  // n = 3 needs a sample size, and modest budgets abort the huge counts
  CHECK_THROWS_AS(count_partly_filled({3, 2, 2}), Error);
  CHECK_THROWS_AS(count_partly_filled({3, 2, 2}, 10000, 1, 7), Error);
}

TEST_CASE("coupled counting") {
  SUBCASE("a single component reduces to the plain count") {
    CHECK(count_coupled(CoupledLayout(2, {{0, 0}})).count == 288);
  }

  SUBCASE("frozen counts for small n = 2 chains") {
    // values fixed from an independent enumeration of the union grids
    CHECK(count_coupled(CoupledLayout(2, {{0, 0}, {1, 1}})).count == 3456);
    CHECK(count_coupled(CoupledLayout(2, {{0, 0}, {1, 0}})).count == 960);
    CHECK(count_coupled(CoupledLayout(2, {{0, 0}, {1, 1}, {2, 2}})).count == 41472);
    CHECK(count_coupled(CoupledLayout(2, {{0, 0}, {1, 0}, {2, 0}})).count == 3456);
  }

  SUBCASE("budget abort on n = 3 layouts") {
    CHECK_THROWS_AS(count_coupled(stair_layout(2), 50000), Error);
  }
}

TEST_CASE("row completions match the permanent of the admissibility matrix") {
  SUBCASE("empty first row band cases") {
    CHECK(count_row_completions(Grid(2), 0) == 24);  // 4!
    Grid g(3);
    for (int c = 0; c < 9; ++c) g.set(0, c, c + 1);
    mpz_class direct = count_row_completions(g, 1);
    CHECK(direct == 12096);
    CHECK(direct == permanent_ryser(admissibility_matrix(g, 1)));
  }

  SUBCASE("random partial grids, both routes") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 40; ++rep) {
      int n = rep % 2 == 0 ? 2 : 3;
      int row = static_cast<int>(rng() % static_cast<std::uint64_t>(n * n));
      Grid g = testutil::random_partial_grid(n, n == 2 ? 6 : 25, row, rng);
      CHECK(count_row_completions(g, row) == permanent_ryser(admissibility_matrix(g, row)));
    }
  }

  SUBCASE("errors") {
    Grid g(2);
    g.set(0, 0, 1);
    CHECK_THROWS_AS(count_row_completions(g, 0), Error);  // row not empty
    CHECK_THROWS_AS(count_row_completions(g, 4), Error);
    Grid bad(2);
    bad.set(1, 0, 2);
    bad.set(1, 1, 2);
    CHECK_THROWS_AS(count_row_completions(bad, 0), Error);
  }
}

TEST_CASE("counts are invariant under band interchange") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    Grid g = testutil::random_partial_grid(2, 5, -1, rng);
    mpz_class base = count_solutions(g).count;
    Grid r = swap_bands(g, {BandOrientation::row, 1}, {BandOrientation::row, 2});
    Grid c = swap_bands(g, {BandOrientation::column, 1}, {BandOrientation::column, 2});
    CHECK(count_solutions(r).count == base);
    CHECK(count_solutions(c).count == base);
  }

  // exhaustively: band swaps permute the full solution set
  std::set<std::string> all;
  for (const auto& g : testutil::all_4x4_solutions()) all.insert(g.serialize());
  for (const auto& g : testutil::all_4x4_solutions()) {
    Grid r = swap_bands(g, {BandOrientation::row, 1}, {BandOrientation::row, 2});
    Grid c = swap_bands(g, {BandOrientation::column, 1}, {BandOrientation::column, 2});
    CHECK(all.count(r.serialize()) == 1);
    CHECK(all.count(c.serialize()) == 1);
  }
}
