#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace scsudoku {

// An n x n Sudoku grid: n^2 blocks of n x n cells, so the cell array is
// n^2 x n^2 with values in 1..n^2 (0 = empty). A Grid is raw data; it may
// violate the Sudoku constraints, which is_consistent() checks.
class Grid {
 public:
  explicit Grid(int block_order);

  static Grid parse(const std::string& text);
  std::string serialize() const;

  int block_order() const { return n_; }
  int side() const { return n_ * n_; }
  int cell_count() const { return side() * side(); }

  int at(int row, int col) const;
  void set(int row, int col, int value);  // value 0 clears the cell
  int filled_count() const;
  bool is_complete() const;

  // True iff no row, column, or block contains a duplicate filled value.
  bool is_consistent() const;

  bool operator==(const Grid& other) const = default;

 private:
  int index(int row, int col) const { return row * side() + col; }
  void check_cell(int row, int col) const;

  int n_;
  std::vector<int> cells_;  // row-major, side*side entries
};

enum class BandOrientation { row, column };

// n consecutive blocks spanning the grid; index is 1-based (1..n).
struct Band {
  BandOrientation orientation;
  int index;
};

// Swaps two parallel bands; the result of swapping bands of a consistent
// grid is again consistent.
Grid swap_bands(const Grid& g, const Band& a, const Band& b);

// A partly filled Sudoku (n;c1,c2): the top-left c1 x c2 rectangle of
// blocks is entirely pre-filled. (c1,c2) = (0,0) is an ordinary Sudoku.
// Any rectangle position is equivalent to the canonical top-left one by
// band interchange, so only the canonical form is represented.
struct PartlyFilledSpec {
  int n;
  int c1;
  int c2;

  void validate() const;
  bool operator==(const PartlyFilledSpec&) const = default;
};

// Checks that `filling` fills exactly the spec's block rectangle (all its
// cells set, everything else empty) and is consistent, then returns it.
Grid apply_partly_filled(const PartlyFilledSpec& spec, const Grid& filling);

// Block coordinate on the shared lattice of a coupled layout, in block
// units (one block = n x n cells).
struct BlockCoord {
  int row;
  int col;

  auto operator<=>(const BlockCoord&) const = default;
};

// Several n x n Sudokus placed on a shared block lattice. Components are
// block-aligned, pairwise distinct, and their union must be edge-connected;
// every pairwise region intersection is then a contiguous block rectangle.
class CoupledLayout {
 public:
  CoupledLayout(int block_order, std::vector<BlockCoord> components);

  static CoupledLayout parse(const std::string& text);
  std::string serialize() const;

  // Catalog layouts: "shogun", "sumo", "stair:L", "belt:L".
  static CoupledLayout catalog(const std::string& kind);

  int block_order() const { return n_; }
  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<BlockCoord>& components() const { return components_; }

  // Global block coordinates covered by component k (n*n of them).
  std::vector<BlockCoord> component_blocks(int k) const;

  // Number of distinct cells in the union of all components.
  long long total_cells() const;

 private:
  int n_;
  std::vector<BlockCoord> components_;
};

CoupledLayout shogun_layout();
CoupledLayout sumo_layout();
CoupledLayout stair_layout(int stages);
CoupledLayout belt_layout(int stages);

}  // namespace scsudoku
