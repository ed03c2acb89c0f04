#include "permanent.hpp"

#include <bit>
#include <sstream>

namespace scsudoku {

namespace {

constexpr int kNaiveLimit = 9;
constexpr int kRyserLimit = 30;

}  // namespace

BinaryMatrix::BinaryMatrix(int size) : m_(size) {
  if (m_ < 1 || m_ > 4096) fail(ErrorCode::invalid_argument, "matrix size out of range");
  a_.assign(static_cast<size_t>(m_) * m_, 0);
}

bool BinaryMatrix::at(int row, int col) const {
  if (row < 0 || row >= m_ || col < 0 || col >= m_) {
    fail(ErrorCode::invalid_argument, "matrix index out of range");
  }
  return a_[static_cast<size_t>(row) * m_ + col] != 0;
}

void BinaryMatrix::set(int row, int col, bool value) {
  if (row < 0 || row >= m_ || col < 0 || col >= m_) {
    fail(ErrorCode::invalid_argument, "matrix index out of range");
  }
  a_[static_cast<size_t>(row) * m_ + col] = value ? 1 : 0;
}

int BinaryMatrix::row_weight(int row) const {
  if (row < 0 || row >= m_) fail(ErrorCode::invalid_argument, "row index out of range");
  int w = 0;
  for (int c = 0; c < m_; ++c) w += a_[static_cast<size_t>(row) * m_ + c];
  return w;
}

BinaryMatrix BinaryMatrix::identity(int size) {
  BinaryMatrix m(size);
  for (int i = 0; i < size; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::all_ones(int size) {
  BinaryMatrix m(size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) m.set(i, j, true);
  }
  return m;
}

BinaryMatrix BinaryMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::string sym;
  int m = 0;
  if (!(in >> sym >> m) || sym != "m") {
    fail(ErrorCode::parse_error, "expected header 'm <int>'");
  }
  if (m < 1 || m > 4096) fail(ErrorCode::parse_error, "matrix size out of range");
  BinaryMatrix a(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int v;
      if (!(in >> v)) fail(ErrorCode::parse_error, "matrix has too few entries");
      if (v != 0 && v != 1) fail(ErrorCode::parse_error, "matrix entries must be 0 or 1");
      a.set(i, j, v == 1);
    }
  }
  int extra;
  if (in >> extra) fail(ErrorCode::parse_error, "matrix has too many entries");
  return a;
}

std::string BinaryMatrix::serialize() const {
  std::ostringstream out;
  out << "m " << m_ << "\n";
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (j > 0) out << ' ';
      out << (at(i, j) ? 1 : 0);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

void naive_rec(const BinaryMatrix& a, int row, std::uint64_t used_cols, mpz_class& total) {
  const int m = a.size();
  if (row == m) {
    total += 1;
    return;
  }
  for (int j = 0; j < m; ++j) {
    if ((used_cols >> j) & 1u) continue;
    if (!a.at(row, j)) continue;  // zero factor kills the whole term
    naive_rec(a, row + 1, used_cols | (1ull << j), total);
  }
}

}  // namespace

mpz_class permanent_naive(const BinaryMatrix& a) {
  if (a.size() > kNaiveLimit) {
    fail(ErrorCode::too_large, "naive permanent limited to 9x9; use ryser");
  }
  mpz_class total = 0;
  naive_rec(a, 0, 0, total);
  return total;
}

mpz_class permanent_ryser(const BinaryMatrix& a) {
  const int m = a.size();
  if (m > kRyserLimit) fail(ErrorCode::too_large, "ryser permanent limited to 30x30");

  // per A = (-1)^m sum_{S != empty} (-1)^|S| prod_i rowsum_i(S), with the
  // column subsets S visited in Gray-code order so each step adjusts the
  // row sums by a single column.
  std::vector<std::int64_t> row_sums(static_cast<size_t>(m), 0);
  mpz_class total = 0;
  mpz_class product;
  std::uint64_t gray = 0;
  const std::uint64_t end = 1ull << m;
  for (std::uint64_t k = 1; k < end; ++k) {
    std::uint64_t next_gray = k ^ (k >> 1);
    std::uint64_t flipped = gray ^ next_gray;
    int j = std::countr_zero(flipped);
    int delta = (next_gray >> j) & 1u ? 1 : -1;
    for (int i = 0; i < m; ++i) {
      if (a.at(i, j)) row_sums[static_cast<size_t>(i)] += delta;
    }
    gray = next_gray;

    product = 1;
    bool zero = false;
    for (int i = 0; i < m; ++i) {
      if (row_sums[static_cast<size_t>(i)] == 0) {
        zero = true;
        break;
      }
      product *= row_sums[static_cast<size_t>(i)];
    }
    if (zero) continue;
    if (std::popcount(gray) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  if (m % 2 != 0) total = -total;
  return total;
}

LogBound bregman_minc_bound(const BinaryMatrix& a) {
  std::vector<BoundTerm> terms;
  for (int i = 0; i < a.size(); ++i) {
    std::int64_t r = a.row_weight(i);
    if (r == 0) return LogBound::zero();
    terms.push_back({r, 1, r});
  }
  return LogBound::from_terms(std::move(terms));
}

BinaryMatrix admissibility_matrix(const Grid& g, int row_index) {
  const int s = g.side();
  const int n = g.block_order();
  if (row_index < 0 || row_index >= s) {
    fail(ErrorCode::invalid_argument, "row index out of range");
  }
  if (!g.is_consistent()) fail(ErrorCode::inconsistent, "grid violates Sudoku constraints");
  for (int c = 0; c < s; ++c) {
    if (g.at(row_index, c) != 0) {
      fail(ErrorCode::invalid_argument, "target row must be entirely empty");
    }
  }

  BinaryMatrix a(s);
  for (int i = 0; i < s; ++i) {
    std::vector<char> banned(static_cast<size_t>(s) + 1, 0);
    for (int r = 0; r < s; ++r) {
      int v = g.at(r, i);
      if (v != 0) banned[static_cast<size_t>(v)] = 1;
    }
    int br = (row_index / n) * n;
    int bc = (i / n) * n;
    for (int dr = 0; dr < n; ++dr) {
      for (int dc = 0; dc < n; ++dc) {
        int v = g.at(br + dr, bc + dc);
        if (v != 0) banned[static_cast<size_t>(v)] = 1;
      }
    }
    for (int j = 0; j < s; ++j) {
      a.set(i, j, banned[static_cast<size_t>(j) + 1] == 0);
    }
  }
  return a;
}

}  // namespace scsudoku
