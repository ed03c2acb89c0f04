#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "grid.hpp"

namespace scsudoku {

// Square (0,1)-matrix used for permanents and row-admissibility.
class BinaryMatrix {
 public:
  explicit BinaryMatrix(int size);

  static BinaryMatrix parse(const std::string& text);
  std::string serialize() const;
  static BinaryMatrix identity(int size);
  static BinaryMatrix all_ones(int size);

  int size() const { return m_; }
  bool at(int row, int col) const;
  void set(int row, int col, bool value);
  int row_weight(int row) const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  int m_;
  std::vector<std::uint8_t> a_;
};

// Exact permanent by expanding the sum over all permutations; only for
// matrices up to 9x9.
mpz_class permanent_naive(const BinaryMatrix& a);

// Exact permanent by Ryser's inclusion-exclusion formula with Gray-code
// subset iteration; up to 30x30.
mpz_class permanent_ryser(const BinaryMatrix& a);

// Bregman-Minc inequality: per A <= prod_i r_i!^(1/r_i) over row sums r_i.
// A row of weight 0 forces both the permanent and the bound to 0.
LogBound bregman_minc_bound(const BinaryMatrix& a);

// The (side x side) matrix whose (i,j) entry is 1 iff value j+1 can be
// placed in cell i of the (fully empty) target row without clashing with
// any filled cell of g. Its permanent counts the valid row completions.
BinaryMatrix admissibility_matrix(const Grid& g, int row_index);

}  // namespace scsudoku
