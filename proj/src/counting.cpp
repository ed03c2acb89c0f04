#include "counting.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace scsudoku {

namespace {

constexpr int kMaxSymbols = 64;  // candidate masks live in one uint64

// Generic all-different system: cells take values 1..symbols, every group
// must have pairwise distinct filled values. Rows, columns, and blocks of
// each component become groups; shared cells of coupled layouts simply
// belong to the groups of every owning component.
struct System {
  int symbols = 0;
  std::vector<std::vector<int>> cell_groups;  // per cell: group ids
  std::vector<int> fixed;                     // initial values, 0 = empty
  std::vector<int> open_cells;                // cells the search assigns
  int group_count = 0;
};

class Searcher {
 public:
  Searcher(const System& sys, std::uint64_t budget)
      : sys_(sys), budget_(budget), full_mask_(sys.symbols == 64
                                                   ? ~0ull
                                                   : (1ull << sys.symbols) - 1) {
    group_used_.assign(static_cast<size_t>(sys.group_count), 0);
    values_ = sys.fixed;
    open_ = sys.open_cells;
    for (size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] != 0) place(static_cast<int>(i), values_[i]);
    }
  }

  // visitor: called with the value vector at every full assignment; return
  // false to stop the search.
  std::uint64_t run(const std::function<bool(const std::vector<int>&)>* visitor) {
    visitor_ = visitor;
    stop_ = false;
    count_ = 0;
    descend(static_cast<int>(open_.size()));
    return count_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t candidates(int cell) const {
    std::uint64_t used = 0;
    for (int gi : sys_.cell_groups[static_cast<size_t>(cell)]) {
      used |= group_used_[static_cast<size_t>(gi)];
    }
    return full_mask_ & ~used;
  }

  void place(int cell, int value) {
    std::uint64_t bit = 1ull << (value - 1);
    for (int gi : sys_.cell_groups[static_cast<size_t>(cell)]) {
      group_used_[static_cast<size_t>(gi)] |= bit;
    }
    values_[static_cast<size_t>(cell)] = value;
  }

  void remove(int cell, int value) {
    std::uint64_t bit = 1ull << (value - 1);
    for (int gi : sys_.cell_groups[static_cast<size_t>(cell)]) {
      group_used_[static_cast<size_t>(gi)] &= ~bit;
    }
    values_[static_cast<size_t>(cell)] = 0;
  }

  void descend(int open_count) {
    if (stop_) return;
    if (open_count == 0) {
      ++count_;
      if (visitor_ && !(*visitor_)(values_)) stop_ = true;
      return;
    }
    // most-constrained cell first
    int best = -1;
    std::uint64_t best_cands = 0;
    int best_n = kMaxSymbols + 1;
    for (int k = 0; k < open_count; ++k) {
      std::uint64_t cands = candidates(open_[static_cast<size_t>(k)]);
      int c = std::popcount(cands);
      if (c < best_n) {
        best_n = c;
        best = k;
        best_cands = cands;
        if (c <= 1) break;
      }
    }
    if (best_n == 0) return;
    std::swap(open_[static_cast<size_t>(best)], open_[static_cast<size_t>(open_count - 1)]);
    int cell = open_[static_cast<size_t>(open_count - 1)];
    std::uint64_t cands = best_cands;
    while (cands != 0 && !stop_) {
      int value = std::countr_zero(cands) + 1;
      cands &= cands - 1;
      if (budget_ != 0 && nodes_ >= budget_) {
        fail(ErrorCode::budget_exceeded,
             "node budget exceeded after " + std::to_string(nodes_) + " nodes");
      }
      ++nodes_;
      place(cell, value);
      descend(open_count - 1);
      remove(cell, value);
    }
    std::swap(open_[static_cast<size_t>(best)], open_[static_cast<size_t>(open_count - 1)]);
  }

  const System& sys_;
  std::uint64_t budget_;
  std::uint64_t full_mask_;
  std::vector<std::uint64_t> group_used_;
  std::vector<int> values_;
  std::vector<int> open_;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  bool stop_ = false;
  const std::function<bool(const std::vector<int>&)>* visitor_ = nullptr;
};

System grid_system(const Grid& g) {
  const int s = g.side();
  const int n = g.block_order();
  if (s > kMaxSymbols) fail(ErrorCode::too_large, "counting supports block order up to 8");
  System sys;
  sys.symbols = s;
  sys.cell_groups.assign(static_cast<size_t>(s) * s, {});
  auto add_group = [&](const std::vector<int>& cells) {
    for (int ci : cells) sys.cell_groups[static_cast<size_t>(ci)].push_back(sys.group_count);
    ++sys.group_count;
  };
  std::vector<int> cells(static_cast<size_t>(s));
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) cells[static_cast<size_t>(c)] = r * s + c;
    add_group(cells);
  }
  for (int c = 0; c < s; ++c) {
    for (int r = 0; r < s; ++r) cells[static_cast<size_t>(r)] = r * s + c;
    add_group(cells);
  }
  for (int br = 0; br < n; ++br) {
    for (int bc = 0; bc < n; ++bc) {
      int k = 0;
      for (int dr = 0; dr < n; ++dr) {
        for (int dc = 0; dc < n; ++dc) {
          cells[static_cast<size_t>(k++)] = (br * n + dr) * s + (bc * n + dc);
        }
      }
      add_group(cells);
    }
  }
  sys.fixed.assign(static_cast<size_t>(s) * s, 0);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) sys.fixed[static_cast<size_t>(r * s + c)] = g.at(r, c);
  }
  for (int i = 0; i < s * s; ++i) {
    if (sys.fixed[static_cast<size_t>(i)] == 0) sys.open_cells.push_back(i);
  }
  return sys;
}

}  // namespace

CountResult count_solutions(const Grid& g, std::uint64_t node_budget) {
  auto start = std::chrono::steady_clock::now();
  CountResult result;
  if (!g.is_consistent()) {
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;  // unsatisfiable, not malformed
  }
  System sys = grid_system(g);
  Searcher search(sys, node_budget);
  result.count = search.run(nullptr);
  result.nodes = search.nodes();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

void for_each_solution(const Grid& g, std::uint64_t node_budget,
                       const std::function<bool(const Grid&)>& fn) {
  if (!g.is_consistent()) return;
  System sys = grid_system(g);
  Searcher search(sys, node_budget);
  const int s = g.side();
  std::function<bool(const std::vector<int>&)> visitor = [&](const std::vector<int>& values) {
    Grid full(g.block_order());
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) full.set(r, c, values[static_cast<size_t>(r * s + c)]);
    }
    return fn(full);
  };
  search.run(&visitor);
}

CountResult count_coupled(const CoupledLayout& layout, std::uint64_t node_budget) {
  auto start = std::chrono::steady_clock::now();
  const int n = layout.block_order();
  const int s = n * n;
  if (s > kMaxSymbols) fail(ErrorCode::too_large, "counting supports block order up to 8");

  // index the union of cells; block coordinates may be negative
  std::map<std::pair<int, int>, int> cell_index;
  for (int k = 0; k < layout.component_count(); ++k) {
    BlockCoord off = layout.components()[static_cast<size_t>(k)];
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) {
        cell_index.emplace(std::make_pair(off.row * n + r, off.col * n + c), 0);
      }
    }
  }
  int next = 0;
  for (auto& [coord, idx] : cell_index) idx = next++;

  System sys;
  sys.symbols = s;
  sys.cell_groups.assign(static_cast<size_t>(next), {});
  auto add_group = [&](const std::vector<int>& cells) {
    for (int ci : cells) sys.cell_groups[static_cast<size_t>(ci)].push_back(sys.group_count);
    ++sys.group_count;
  };
  std::vector<int> cells(static_cast<size_t>(s));
  for (int k = 0; k < layout.component_count(); ++k) {
    BlockCoord off = layout.components()[static_cast<size_t>(k)];
    int base_r = off.row * n;
    int base_c = off.col * n;
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) {
        cells[static_cast<size_t>(c)] = cell_index.at({base_r + r, base_c + c});
      }
      add_group(cells);
    }
    for (int c = 0; c < s; ++c) {
      for (int r = 0; r < s; ++r) {
        cells[static_cast<size_t>(r)] = cell_index.at({base_r + r, base_c + c});
      }
      add_group(cells);
    }
    for (int br = 0; br < n; ++br) {
      for (int bc = 0; bc < n; ++bc) {
        int t = 0;
        for (int dr = 0; dr < n; ++dr) {
          for (int dc = 0; dc < n; ++dc) {
            cells[static_cast<size_t>(t++)] =
                cell_index.at({base_r + br * n + dr, base_c + bc * n + dc});
          }
        }
        add_group(cells);
      }
    }
  }
  sys.fixed.assign(static_cast<size_t>(next), 0);
  for (int i = 0; i < next; ++i) sys.open_cells.push_back(i);

  CountResult result;
  Searcher search(sys, node_budget);
  result.count = search.run(nullptr);
  result.nodes = search.nodes();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

mpz_class count_row_completions(const Grid& g, int row_index) {
  const int s = g.side();
  const int n = g.block_order();
  if (row_index < 0 || row_index >= s) {
    fail(ErrorCode::invalid_argument, "row index out of range");
  }
  if (!g.is_consistent()) fail(ErrorCode::inconsistent, "grid violates Sudoku constraints");
  if (s > kMaxSymbols) fail(ErrorCode::too_large, "counting supports block order up to 8");
  for (int c = 0; c < s; ++c) {
    if (g.at(row_index, c) != 0) {
      fail(ErrorCode::invalid_argument, "target row must be entirely empty");
    }
  }

  // Per-cell permissible values from filled cells only; the row itself
  // contributes the all-different constraint over the assignment.
  std::vector<std::uint64_t> allowed(static_cast<size_t>(s), 0);
  std::uint64_t full = s == 64 ? ~0ull : (1ull << s) - 1;
  for (int i = 0; i < s; ++i) {
    std::uint64_t banned = 0;
    for (int r = 0; r < s; ++r) {
      int v = g.at(r, i);
      if (v != 0) banned |= 1ull << (v - 1);
    }
    int br = (row_index / n) * n;
    int bc = (i / n) * n;
    for (int dr = 0; dr < n; ++dr) {
      for (int dc = 0; dc < n; ++dc) {
        int v = g.at(br + dr, bc + dc);
        if (v != 0) banned |= 1ull << (v - 1);
      }
    }
    allowed[static_cast<size_t>(i)] = full & ~banned;
  }

  mpz_class total = 0;
  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == s) {
      total += 1;
      return;
    }
    std::uint64_t cands = allowed[static_cast<size_t>(i)] & ~used;
    while (cands != 0) {
      std::uint64_t bit = cands & (~cands + 1);
      cands &= cands - 1;
      used |= bit;
      self(self, i + 1);
      used &= ~bit;
    }
  };
  rec(rec, 0);
  return total;
}

PartlyFilledCounts count_partly_filled(const PartlyFilledSpec& spec,
                                       std::uint64_t node_budget, std::uint64_t sample,
                                       std::uint64_t seed) {
  spec.validate();
  const int s = spec.n * spec.n;
  if (s > kMaxSymbols) fail(ErrorCode::too_large, "counting supports block order up to 8");
  if (spec.n > 2 && sample == 0) {
    fail(ErrorCode::too_large,
         "exhaustive pattern enumeration is limited to n = 2; pass a sample size");
  }

  PartlyFilledCounts out;
  auto record = [&](const Grid& pattern) {
    mpz_class cnt = count_solutions(pattern, node_budget).count;
    ++out.histogram[cnt];
    ++out.patterns;
    if (out.patterns == 1) {
      out.min = cnt;
      out.max = cnt;
    } else {
      out.min = std::min(out.min, cnt);
      out.max = std::max(out.max, cnt);
    }
    return true;
  };

  const int rect_rows = spec.c1 * spec.n;
  const int rect_cols = spec.c2 * spec.n;
  if (rect_rows == 0 || rect_cols == 0) {
    // Empty rectangle: the single pattern is the empty grid.
    record(Grid(spec.n));
    return out;
  }

  // Enumerate consistent fillings of the rectangle by searching over just
  // those cells; the rest of the grid stays empty.
  System sys = grid_system(Grid(spec.n));
  sys.open_cells.clear();
  for (int r = 0; r < rect_rows; ++r) {
    for (int c = 0; c < rect_cols; ++c) sys.open_cells.push_back(r * s + c);
  }

  auto pattern_grid = [&](const std::vector<int>& values) {
    Grid pattern(spec.n);
    for (int r = 0; r < rect_rows; ++r) {
      for (int c = 0; c < rect_cols; ++c) {
        pattern.set(r, c, values[static_cast<size_t>(r * s + c)]);
      }
    }
    return pattern;
  };

  if (sample == 0) {
    Searcher search(sys, node_budget);
    std::function<bool(const std::vector<int>&)> visitor =
        [&](const std::vector<int>& values) { return record(pattern_grid(values)); };
    search.run(&visitor);
  } else {
    // Random patterns: backtracking fill of the rectangle with the value
    // order shuffled per cell. Draws are independent; duplicates possible.
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < sample; ++t) {
      Grid pattern(spec.n);
      auto fill = [&](auto&& self, int idx) -> bool {
        if (idx == rect_rows * rect_cols) return true;
        int r = idx / rect_cols;
        int c = idx % rect_cols;
        std::vector<int> order(static_cast<size_t>(s));
        for (int v = 0; v < s; ++v) order[static_cast<size_t>(v)] = v + 1;
        std::shuffle(order.begin(), order.end(), rng);
        for (int v : order) {
          pattern.set(r, c, v);
          if (pattern.is_consistent() && self(self, idx + 1)) return true;
        }
        pattern.set(r, c, 0);
        return false;
      };
      if (!fill(fill, 0)) {
        fail(ErrorCode::invalid_argument, "rectangle admits no consistent filling");
      }
      record(pattern);
    }
  }
  return out;
}

}  // namespace scsudoku
