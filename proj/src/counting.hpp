#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "grid.hpp"

namespace scsudoku {

struct CountResult {
  mpz_class count;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{0.0};
};

// Exact number of completions of g satisfying all row/column/block
// constraints. An inconsistent grid counts 0 (it is unsatisfiable, not
// malformed). node_budget = 0 means unlimited; exceeding a budget aborts
// with budget_exceeded rather than returning a wrong count.
CountResult count_solutions(const Grid& g, std::uint64_t node_budget = 0);

// Invokes fn for every completion; enumeration stops early if fn returns
// false. Same constraint semantics and budget behavior as count_solutions.
void for_each_solution(const Grid& g, std::uint64_t node_budget,
                       const std::function<bool(const Grid&)>& fn);

// Exact count of joint assignments to the union of cells of a coupled
// layout such that every component is individually a valid Sudoku. Shared
// cells are constrained by all owning components at once.
CountResult count_coupled(const CoupledLayout& layout, std::uint64_t node_budget = 0);

// Number of ways to fill the (entirely empty) target row consistently with
// the already-filled cells of g; equals the permanent of the corresponding
// admissibility matrix.
mpz_class count_row_completions(const Grid& g, int row_index);

struct PartlyFilledCounts {
  mpz_class min;
  mpz_class max;
  std::map<mpz_class, std::uint64_t> histogram;  // solution count -> #patterns
  std::uint64_t patterns = 0;
};

// Solution counts of an (n;c1,c2) partly filled Sudoku over consistent
// fillings of the rectangle: exhaustive over all patterns when sample = 0
// (n = 2 scale), or over `sample` randomly generated patterns otherwise.
PartlyFilledCounts count_partly_filled(const PartlyFilledSpec& spec,
                                       std::uint64_t node_budget = 0,
                                       std::uint64_t sample = 0,
                                       std::uint64_t seed = 0);

}  // namespace scsudoku
