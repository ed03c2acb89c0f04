#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "bounds.hpp"
#include "grid.hpp"

namespace scsudoku {

// An ordering of a layout's components together with, for each component,
// the rectangle of its blocks that are already filled when it is processed
// (i.e. shared with the union of earlier components).
struct Decomposition {
  std::vector<int> order;
  std::vector<PartlyFilledSpec> specs;  // parallel to order
};

struct ComponentBound {
  int component;
  PartlyFilledSpec spec;
  LogBound bound;
  bool exact_count_used;  // stored exact S(n) instead of the Theorem bound
};

struct CompositeBound {
  LogBound total;  // product over per-component bounds
  std::vector<ComponentBound> per_component;
  long long cells;
  double rate_upper;  // ln(total) / (ln(n^2) * cells)
};

// Processes components in the given order; each component's blocks shared
// with the union of earlier ones must form a rectangle U x V (in the
// combinatorial sense: a Cartesian product of band subsets, equivalent to
// the contiguous rectangle by band interchange). The recorded (c1,c2) is
// oriented to minimize the Theorem bound, which is sound because the exact
// count is orientation-independent.
Decomposition decompose(const CoupledLayout& layout, std::span<const int> order);

// Natural order 0..k-1.
Decomposition decompose(const CoupledLayout& layout);

// Product of per-component bounds for a decomposition. Components with an
// empty rectangle use the stored exact count S(n) when use_exact_free_count
// is set (available for n <= 3 only), otherwise the plain bound.
CompositeBound composite_bound(const CoupledLayout& layout, const Decomposition& d,
                               bool use_exact_free_count);

// Order minimizing the composite bound, over all valid orders and both
// orientations of non-square overlap rectangles. Exhaustive (subset DP);
// layouts beyond 12 components are rejected — supply an explicit order or
// use the greedy variant instead. Ties break to the lexicographically
// smallest order.
Decomposition best_decomposition(const CoupledLayout& layout, bool use_exact_free_count);

// Non-optimal fallback for large layouts: repeatedly picks the component
// with the largest valid overlap with the processed set.
Decomposition greedy_decomposition(const CoupledLayout& layout);

// R = log_{n^2}(S) / C for a solution count or bound given in natural log.
double coding_rate(double ln_value, int n, long long cells);

enum class StageKind { stair, belt };

// Large-stage limit of the coding-rate upper bound of a stair or belt
// chain: per-stage log increment over per-stage cell increment.
double rate_limit(StageKind kind);

// Stored exact solution counts: S(2) = 288 (reproduced by the counter in
// this project's test suite) and S(3) = 6670903752021072936960 (known from
// the exhaustive enumeration of Felgenhauer & Jarvis, 2006; far beyond
// desk-scale recomputation).
const mpz_class& exact_solution_count(int n);

}  // namespace scsudoku
