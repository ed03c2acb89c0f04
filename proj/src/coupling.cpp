#include "coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace scsudoku {

namespace {

// Blocks of component k (in component-local coordinates) shared with the
// union of the blocks of the components in `mask`. Returns the (c1,c2)
// rectangle size, or nullopt when the shared set is not a Cartesian
// product U x V of row and column bands.
std::optional<PartlyFilledSpec> overlap_spec(const CoupledLayout& layout, int k,
                                             const std::set<BlockCoord>& processed) {
  const int n = layout.block_order();
  BlockCoord off = layout.components()[static_cast<size_t>(k)];
  std::set<int> rows, cols;
  int shared = 0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (processed.count({off.row + r, off.col + c})) {
        rows.insert(r);
        cols.insert(c);
        ++shared;
      }
    }
  }
  if (shared == 0) return PartlyFilledSpec{n, 0, 0};
  if (shared != static_cast<int>(rows.size() * cols.size())) return std::nullopt;
  for (int r : rows) {
    for (int c : cols) {
      if (!processed.count({off.row + r, off.col + c})) return std::nullopt;
    }
  }
  return PartlyFilledSpec{n, static_cast<int>(rows.size()), static_cast<int>(cols.size())};
}

// S_U(n;c1,c2) != S_U(n;c2,c1) in general while the exact count is
// symmetric, so a non-square overlap may be labeled either way; keep the
// cheaper labeling.
PartlyFilledSpec orient_for_minimum(PartlyFilledSpec spec) {
  if (spec.c1 != spec.c2 && spec.c1 > 0 && spec.c2 > 0) {
    PartlyFilledSpec flipped{spec.n, spec.c2, spec.c1};
    if (partly_filled_bound(flipped).ln() < partly_filled_bound(spec).ln()) return flipped;
  }
  return spec;
}

double component_ln(const PartlyFilledSpec& spec, bool use_exact_free_count) {
  if (spec.c1 == 0 || spec.c2 == 0) {
    if (use_exact_free_count) return ln_of_mpz(exact_solution_count(spec.n));
    return herzberg_bound(spec.n).ln();
  }
  return partly_filled_bound(spec).ln();
}

constexpr int kExhaustiveLimit = 12;

}  // namespace

Decomposition decompose(const CoupledLayout& layout, std::span<const int> order) {
  const int m = layout.component_count();
  if (static_cast<int>(order.size()) != m) {
    fail(ErrorCode::invalid_argument, "order must be a permutation of all components");
  }
  std::vector<char> seen(static_cast<size_t>(m), 0);
  for (int k : order) {
    if (k < 0 || k >= m || seen[static_cast<size_t>(k)]) {
      fail(ErrorCode::invalid_argument, "order must be a permutation of all components");
    }
    seen[static_cast<size_t>(k)] = 1;
  }

  Decomposition d;
  std::set<BlockCoord> processed;
  for (int k : order) {
    auto spec = overlap_spec(layout, k, processed);
    if (!spec) {
      fail(ErrorCode::invalid_argument,
           "component " + std::to_string(k) +
               "'s overlap with the processed set is not a block rectangle");
    }
    d.order.push_back(k);
    d.specs.push_back(orient_for_minimum(*spec));
    auto blocks = layout.component_blocks(k);
    processed.insert(blocks.begin(), blocks.end());
  }
  return d;
}

Decomposition decompose(const CoupledLayout& layout) {
  std::vector<int> order(static_cast<size_t>(layout.component_count()));
  std::iota(order.begin(), order.end(), 0);
  return decompose(layout, order);
}

CompositeBound composite_bound(const CoupledLayout& layout, const Decomposition& d,
                               bool use_exact_free_count) {
  if (d.order.size() != d.specs.size() ||
      d.order.size() != static_cast<size_t>(layout.component_count())) {
    fail(ErrorCode::invalid_argument, "decomposition does not match the layout");
  }
  CompositeBound out;
  out.total = LogBound();
  for (size_t i = 0; i < d.order.size(); ++i) {
    const PartlyFilledSpec& spec = d.specs[i];
    bool free_component = spec.c1 == 0 || spec.c2 == 0;
    LogBound b;
    bool used_exact = false;
    if (free_component && use_exact_free_count) {
      b = LogBound::from_exact(exact_solution_count(spec.n));
      used_exact = true;
    } else if (free_component) {
      b = herzberg_bound(spec.n);
    } else {
      b = partly_filled_bound(spec);
    }
    out.per_component.push_back({d.order[i], spec, b, used_exact});
    out.total = out.total * b;
  }
  out.cells = layout.total_cells();
  out.rate_upper = coding_rate(out.total.ln(), layout.block_order(), out.cells);
  return out;
}

Decomposition best_decomposition(const CoupledLayout& layout, bool use_exact_free_count) {
  const int m = layout.component_count();
  if (m > kExhaustiveLimit) {
    fail(ErrorCode::too_large,
         "exhaustive order search is limited to 12 components; supply an explicit "
         "order or use the greedy decomposition");
  }

  // g[mask] = minimal remaining cost once exactly the components in mask
  // are processed. Costs depend only on (component, processed set), so the
  // order search collapses to a subset DP.
  const std::uint32_t full = (1u << m) - 1;
  std::vector<std::set<BlockCoord>> blocks_of(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    auto b = layout.component_blocks(k);
    blocks_of[static_cast<size_t>(k)] = {b.begin(), b.end()};
  }
  auto processed_blocks = [&](std::uint32_t mask) {
    std::set<BlockCoord> blocks;
    for (int k = 0; k < m; ++k) {
      if ((mask >> k) & 1u) {
        blocks.insert(blocks_of[static_cast<size_t>(k)].begin(),
                      blocks_of[static_cast<size_t>(k)].end());
      }
    }
    return blocks;
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(static_cast<size_t>(full + 1) * static_cast<size_t>(m), kInf);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    auto processed = processed_blocks(mask);
    for (int k = 0; k < m; ++k) {
      if ((mask >> k) & 1u) continue;
      auto spec = overlap_spec(layout, k, processed);
      if (!spec) continue;
      cost[static_cast<size_t>(mask) * m + k] =
          component_ln(orient_for_minimum(*spec), use_exact_free_count);
    }
  }

  std::vector<double> g(static_cast<size_t>(full) + 1, kInf);
  g[full] = 0.0;
  for (std::uint32_t mask = full; mask-- > 0;) {
    for (int k = 0; k < m; ++k) {
      if ((mask >> k) & 1u) continue;
      double ck = cost[static_cast<size_t>(mask) * m + k];
      if (ck == kInf) continue;
      double total = ck + g[mask | (1u << k)];
      if (total < g[mask]) g[mask] = total;
    }
  }
  if (g[0] == kInf) {
    fail(ErrorCode::invalid_argument, "layout admits no valid decomposition order");
  }

  // Walk forward, always taking the smallest component that achieves the
  // optimum; this reproduces the lexicographically smallest optimal order.
  std::vector<int> order;
  std::uint32_t mask = 0;
  while (mask != full) {
    for (int k = 0; k < m; ++k) {
      if ((mask >> k) & 1u) continue;
      double ck = cost[static_cast<size_t>(mask) * m + k];
      if (ck == kInf) continue;
      if (ck + g[mask | (1u << k)] == g[mask]) {
        order.push_back(k);
        mask |= 1u << k;
        break;
      }
    }
  }
  return decompose(layout, order);
}

Decomposition greedy_decomposition(const CoupledLayout& layout) {
  const int m = layout.component_count();
  std::vector<int> order;
  std::vector<char> taken(static_cast<size_t>(m), 0);
  std::set<BlockCoord> processed;
  for (int step = 0; step < m; ++step) {
    int best = -1;
    int best_overlap = -1;
    for (int k = 0; k < m; ++k) {
      if (taken[static_cast<size_t>(k)]) continue;
      auto spec = overlap_spec(layout, k, processed);
      if (!spec) continue;
      int overlap = spec->c1 * spec->c2;
      // after the first pick, only blocks adjacent to the processed set
      // keep the decomposition meaningful, but a zero overlap stays legal
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = k;
      }
    }
    if (best < 0) {
      fail(ErrorCode::invalid_argument, "greedy order ran into a non-rectangular overlap");
    }
    taken[static_cast<size_t>(best)] = 1;
    order.push_back(best);
    auto blocks = layout.component_blocks(best);
    processed.insert(blocks.begin(), blocks.end());
  }
  return decompose(layout, order);
}

double coding_rate(double ln_value, int n, long long cells) {
  if (n < 2) fail(ErrorCode::invalid_argument, "coding rate needs n >= 2");
  if (cells <= 0) fail(ErrorCode::invalid_argument, "coding rate needs a positive cell count");
  return ln_value / (std::log(static_cast<double>(n) * n) * static_cast<double>(cells));
}

double rate_limit(StageKind kind) {
  CoupledLayout one = kind == StageKind::stair ? stair_layout(1) : belt_layout(1);
  CoupledLayout two = kind == StageKind::stair ? stair_layout(2) : belt_layout(2);
  long long stage_cells = two.total_cells() - one.total_cells();
  Decomposition d = decompose(two);
  double stage_ln = partly_filled_bound(d.specs[1]).ln();
  const int n = two.block_order();
  return stage_ln / std::log(static_cast<double>(n) * n) / static_cast<double>(stage_cells);
}

const mpz_class& exact_solution_count(int n) {
  static const mpz_class s2(288);
  static const mpz_class s3("6670903752021072936960");
  if (n == 2) return s2;
  if (n == 3) return s3;
  fail(ErrorCode::unsupported, "no stored exact count for n = " + std::to_string(n));
}

}  // namespace scsudoku
