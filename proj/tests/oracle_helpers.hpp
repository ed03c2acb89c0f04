// Test-only oracles, independent of the library's search and bound paths.
#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "grid.hpp"

namespace testutil {

// Every solved 4x4 grid, found by checking all 24^4 tuples of permutation
// rows against the column and block constraints. Deliberately shares no
// machinery with the library's backtracking counter.
inline const std::vector<scsudoku::Grid>& all_4x4_solutions() {
  static const std::vector<scsudoku::Grid> solutions = [] {
    std::array<int, 4> base{1, 2, 3, 4};
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p = base;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<scsudoku::Grid> out;
    for (const auto& r0 : perms) {
      for (const auto& r1 : perms) {
        for (const auto& r2 : perms) {
          for (const auto& r3 : perms) {
            std::array<std::array<int, 4>, 4> rows{r0, r1, r2, r3};
            bool ok = true;
            for (int c = 0; c < 4 && ok; ++c) {
              for (int a = 0; a < 4 && ok; ++a) {
                for (int b = a + 1; b < 4 && ok; ++b) {
                  if (rows[a][c] == rows[b][c]) ok = false;
                }
              }
            }
            for (int br = 0; br < 2 && ok; ++br) {
              for (int bc = 0; bc < 2 && ok; ++bc) {
                std::array<int, 4> blk{rows[br * 2][bc * 2], rows[br * 2][bc * 2 + 1],
                                       rows[br * 2 + 1][bc * 2], rows[br * 2 + 1][bc * 2 + 1]};
                std::sort(blk.begin(), blk.end());
                if (blk != std::array<int, 4>{1, 2, 3, 4}) ok = false;
              }
            }
            if (!ok) continue;
            scsudoku::Grid g(2);
            for (int r = 0; r < 4; ++r) {
              for (int c = 0; c < 4; ++c) g.set(r, c, rows[r][c]);
            }
            out.push_back(g);
          }
        }
      }
    }
    return out;
  }();
  return solutions;
}

// A complete valid n=3 grid from the usual shifted-rows construction.
inline scsudoku::Grid canonical_9x9_solution() {
  scsudoku::Grid g(3);
  for (int r = 0; r < 9; ++r) {
    int shift = (r % 3) * 3 + r / 3;
    for (int c = 0; c < 9; ++c) g.set(r, c, (c + shift) % 9 + 1);
  }
  return g;
}

// Random consistent partial grid with `fills` placement attempts, keeping
// the given row empty (pass -1 to allow all rows). Placements that would
// break consistency are skipped.
inline scsudoku::Grid random_partial_grid(int n, int fills, int keep_row_empty,
                                          std::mt19937_64& rng) {
  scsudoku::Grid g(n);
  const int s = g.side();
  std::uniform_int_distribution<int> cell_dist(0, s - 1);
  std::uniform_int_distribution<int> value_dist(1, s);
  for (int t = 0; t < fills; ++t) {
    int r = cell_dist(rng);
    int c = cell_dist(rng);
    if (r == keep_row_empty || g.at(r, c) != 0) continue;
    int v = value_dist(rng);
    g.set(r, c, v);
    if (!g.is_consistent()) g.set(r, c, 0);
  }
  return g;
}

}  // namespace testutil
