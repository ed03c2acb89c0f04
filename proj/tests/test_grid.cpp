#include "grid.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracle_helpers.hpp"

using namespace scsudoku;

namespace {

Grid random_grid(int n, std::mt19937_64& rng) {
  Grid g(n);
  const int s = g.side();
  std::uniform_int_distribution<int> value(0, s);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) g.set(r, c, value(rng));
  }
  return g;
}

}  // namespace

TEST_CASE("parse empty 4x4 grid") {
  Grid g = Grid::parse("n 2\n....\n....\n....\n....\n");
  CHECK(g.block_order() == 2);
  CHECK(g.side() == 4);
  CHECK(g.filled_count() == 0);
  CHECK(g.is_consistent());
}

TEST_CASE("parse 9x9 puzzle keeps exactly the clue cells") {
  // a typical puzzle with 30 clues
  const std::string text =
      "n 3\n"
      "53..7....\n"
      "6..195...\n"
      ".98....6.\n"
      "8...6...3\n"
      "4..8.3..1\n"
      "7...2...6\n"
      ".6....28.\n"
      "...419..5\n"
      "....8..79\n";
  Grid g = Grid::parse(text);
  CHECK(g.filled_count() == 30);
  CHECK(g.at(0, 0) == 5);
  CHECK(g.at(0, 1) == 3);
  CHECK(g.at(0, 2) == 0);
  CHECK(g.at(8, 8) == 9);
  CHECK(g.is_consistent());
  CHECK(g.serialize() == text);
}

TEST_CASE("parse rejects malformed grids") {
  CHECK_THROWS_AS(Grid::parse(""), Error);
  CHECK_THROWS_AS(Grid::parse("m 2\n....\n....\n....\n....\n"), Error);
  // 15 cells instead of 16
  CHECK_THROWS_AS(Grid::parse("n 2\n....\n....\n....\n...\n"), Error);
  // too many rows
  CHECK_THROWS_AS(Grid::parse("n 2\n....\n....\n....\n....\n....\n"), Error);
  // out-of-range value for n=2
  CHECK_THROWS_AS(Grid::parse("n 2\n5...\n....\n....\n....\n"), Error);
  CHECK_THROWS_AS(Grid::parse("n 2\n1 2 3 7\n. . . .\n. . . .\n. . . .\n"), Error);
  CHECK_THROWS_AS(Grid::parse("n 0\n"), Error);
}

TEST_CASE("grid round-trips through text") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 4}) {
    for (int rep = 0; rep < 10; ++rep) {
      Grid g = random_grid(n, rng);
      Grid back = Grid::parse(g.serialize());
      CHECK(back == g);
      CHECK(back.serialize() == g.serialize());
    }
  }
}

TEST_CASE("is_consistent spots duplicates in every group kind") {
  Grid g(2);
  CHECK(g.is_consistent());

  Grid row_dup = g;
  row_dup.set(0, 0, 1);
  row_dup.set(0, 3, 1);
  CHECK_FALSE(row_dup.is_consistent());

  Grid col_dup = g;
  col_dup.set(0, 2, 3);
  col_dup.set(3, 2, 3);
  CHECK_FALSE(col_dup.is_consistent());

  Grid block_dup = g;
  block_dup.set(0, 0, 2);
  block_dup.set(1, 1, 2);
  CHECK_FALSE(block_dup.is_consistent());
}

TEST_CASE("band swaps preserve consistency and completeness") {
  Grid solved = testutil::canonical_9x9_solution();
  REQUIRE(solved.is_consistent());
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      Grid r = swap_bands(solved, {BandOrientation::row, a}, {BandOrientation::row, b});
      CHECK(r.is_consistent());
      CHECK(r.is_complete());
      Grid c = swap_bands(solved, {BandOrientation::column, a}, {BandOrientation::column, b});
      CHECK(c.is_consistent());
      CHECK(c.is_complete());
    }
  }
  CHECK_THROWS_AS(
      swap_bands(solved, {BandOrientation::row, 1}, {BandOrientation::column, 2}), Error);
  CHECK_THROWS_AS(swap_bands(solved, {BandOrientation::row, 0}, {BandOrientation::row, 1}),
                  Error);
  CHECK_THROWS_AS(swap_bands(solved, {BandOrientation::row, 1}, {BandOrientation::row, 4}),
                  Error);
}

TEST_CASE("apply_partly_filled accepts exactly the rectangle") {
  SUBCASE("empty spec, empty filling") {
    Grid g = apply_partly_filled({2, 0, 0}, Grid(2));
    CHECK(g.filled_count() == 0);
  }

  SUBCASE("(2;1,2): full first row band") {
    Grid filling(2);
    int top[2][4] = {{1, 2, 3, 4}, {3, 4, 1, 2}};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 4; ++c) filling.set(r, c, top[r][c]);
    }
    Grid g = apply_partly_filled({2, 1, 2}, filling);
    CHECK(g.filled_count() == 8);
  }

  SUBCASE("(3;2,2): restriction of a full solution to the rectangle") {
    Grid solved = testutil::canonical_9x9_solution();
    Grid filling(3);
    for (int r = 0; r < 6; ++r) {
      for (int c = 0; c < 6; ++c) filling.set(r, c, solved.at(r, c));
    }
    Grid g = apply_partly_filled({3, 2, 2}, filling);
    CHECK(g.filled_count() == 36);
  }

  SUBCASE("rejects stray, missing, or clashing cells") {
    Grid outside(2);
    outside.set(3, 3, 1);
    CHECK_THROWS_AS(apply_partly_filled({2, 1, 1}, outside), Error);

    Grid partial(2);
    partial.set(0, 0, 1);  // rectangle cell (1,1) left empty
    CHECK_THROWS_AS(apply_partly_filled({2, 1, 1}, partial), Error);

    Grid clash(2);
    clash.set(0, 0, 1);
    clash.set(0, 1, 1);
    clash.set(1, 0, 2);
    clash.set(1, 1, 2);
    CHECK_THROWS_AS(apply_partly_filled({2, 1, 1}, clash), Error);

    CHECK_THROWS_AS(apply_partly_filled({2, 3, 1}, Grid(2)), Error);
  }
}

TEST_CASE("catalog layouts have the known shapes") {
  CoupledLayout stair1 = stair_layout(1);
  CHECK(stair1.component_count() == 1);
  CHECK(stair1.total_cells() == 81);

  CoupledLayout shogun = shogun_layout();
  CHECK(shogun.component_count() == 11);
  CHECK(shogun.total_cells() == 783);

  CoupledLayout sumo = sumo_layout();
  CHECK(sumo.component_count() == 13);
  CHECK(sumo.total_cells() == 909);

  for (int stages = 1; stages <= 6; ++stages) {
    CHECK(stair_layout(stages).total_cells() == 81 + 45 * (stages - 1));
    CHECK(belt_layout(stages).total_cells() == 81 + 54 * (stages - 1));
  }

  CHECK_THROWS_AS(stair_layout(0), Error);
  CHECK_THROWS_AS(belt_layout(0), Error);

  CHECK(CoupledLayout::catalog("shogun").component_count() == 11);
  CHECK(CoupledLayout::catalog("stair:4").component_count() == 4);
  CHECK(CoupledLayout::catalog("belt:2").component_count() == 2);
  CHECK_THROWS_AS(CoupledLayout::catalog("samurai"), Error);
  CHECK_THROWS_AS(CoupledLayout::catalog("stair:x"), Error);
}

TEST_CASE("total_cells matches inclusion-exclusion where overlaps are disjoint") {
  // For shogun, sumo, and belt every pairwise overlap is disjoint from the
  // others, so a plain pairwise correction reproduces the union size. The
  // stair chain has blocks shared by three consecutive stages, so only the
  // closed form (checked above) applies there.
  for (const auto& layout : {shogun_layout(), sumo_layout(), belt_layout(6)}) {
    long long cells = 81LL * layout.component_count();
    const int m = layout.component_count();
    for (int a = 0; a < m; ++a) {
      auto ba = layout.component_blocks(a);
      std::set<BlockCoord> set_a(ba.begin(), ba.end());
      for (int b = a + 1; b < m; ++b) {
        for (const auto& blk : layout.component_blocks(b)) {
          if (set_a.count(blk)) cells -= 9;
        }
      }
    }
    CHECK(cells == layout.total_cells());
  }
}

TEST_CASE("layout validation") {
  CHECK_THROWS_AS(CoupledLayout(3, {}), Error);
  CHECK_THROWS_AS(CoupledLayout(3, {{0, 0}, {0, 0}}), Error);
  // touching only at a corner is not edge-connected
  CHECK_THROWS_AS(CoupledLayout(3, {{0, 0}, {3, 3}}), Error);
  CHECK_THROWS_AS(CoupledLayout(3, {{0, 0}, {0, 7}}), Error);
  CHECK_NOTHROW(CoupledLayout(3, {{0, 0}, {0, 3}}));  // abutting is connected
  CHECK_NOTHROW(CoupledLayout(3, {{0, 0}, {-1, -1}}));
}

TEST_CASE("layout round-trips through text") {
  for (const auto& layout :
       {shogun_layout(), sumo_layout(), stair_layout(3), CoupledLayout(2, {{0, 0}, {1, 1}})}) {
    CoupledLayout back = CoupledLayout::parse(layout.serialize());
    CHECK(back.block_order() == layout.block_order());
    CHECK(back.components() == layout.components());
    CHECK(back.serialize() == layout.serialize());
  }
  CHECK_THROWS_AS(CoupledLayout::parse("n 3\ncomponent 0\n"), Error);
  CHECK_THROWS_AS(CoupledLayout::parse("n 3\nblock 0 0\n"), Error);
}
