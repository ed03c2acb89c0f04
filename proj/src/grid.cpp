#include "grid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace scsudoku {

namespace {

constexpr int kMaxBlockOrder = 64;  // side up to 4096

std::vector<std::string> non_empty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == ',') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

int parse_int(const std::string& tok, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ErrorCode::parse_error, std::string("invalid ") + what + ": '" + tok + "'");
  }
  return value;
}

int parse_header(const std::vector<std::string>& lines, const char* symbol) {
  if (lines.empty()) fail(ErrorCode::parse_error, "empty input");
  auto toks = split_tokens(lines[0]);
  if (toks.size() != 2 || toks[0] != symbol) {
    fail(ErrorCode::parse_error, std::string("expected header '") + symbol + " <int>'");
  }
  return parse_int(toks[1], symbol);
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid

Grid::Grid(int block_order) : n_(block_order) {
  if (n_ < 1 || n_ > kMaxBlockOrder) {
    fail(ErrorCode::invalid_argument,
         "block order must be in 1.." + std::to_string(kMaxBlockOrder));
  }
  cells_.assign(static_cast<size_t>(cell_count()), 0);
}

void Grid::check_cell(int row, int col) const {
  if (row < 0 || row >= side() || col < 0 || col >= side()) {
    fail(ErrorCode::invalid_argument, "cell index out of range");
  }
}

int Grid::at(int row, int col) const {
  check_cell(row, col);
  return cells_[static_cast<size_t>(index(row, col))];
}

void Grid::set(int row, int col, int value) {
  check_cell(row, col);
  if (value < 0 || value > side()) {
    fail(ErrorCode::invalid_argument,
         "cell value must be 0 (empty) or in 1.." + std::to_string(side()));
  }
  cells_[static_cast<size_t>(index(row, col))] = value;
}

int Grid::filled_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](int v) { return v != 0; }));
}

bool Grid::is_complete() const { return filled_count() == cell_count(); }

bool Grid::is_consistent() const {
  const int s = side();
  std::vector<char> seen(static_cast<size_t>(s) + 1);
  auto group_ok = [&](auto cell_at) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int k = 0; k < s; ++k) {
      int v = cell_at(k);
      if (v == 0) continue;
      if (seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
    }
    return true;
  };
  for (int r = 0; r < s; ++r) {
    if (!group_ok([&](int k) { return cells_[static_cast<size_t>(index(r, k))]; })) return false;
  }
  for (int c = 0; c < s; ++c) {
    if (!group_ok([&](int k) { return cells_[static_cast<size_t>(index(k, c))]; })) return false;
  }
  for (int br = 0; br < n_; ++br) {
    for (int bc = 0; bc < n_; ++bc) {
      if (!group_ok([&](int k) {
            int r = br * n_ + k / n_;
            int c = bc * n_ + k % n_;
            return cells_[static_cast<size_t>(index(r, c))];
          })) {
        return false;
      }
    }
  }
  return true;
}

Grid Grid::parse(const std::string& text) {
  auto lines = non_empty_lines(text);
  int n = parse_header(lines, "n");
  Grid g(n);
  const int s = g.side();
  if (static_cast<int>(lines.size()) != 1 + s) {
    fail(ErrorCode::parse_error, "expected " + std::to_string(s) + " cell rows, got " +
                                     std::to_string(lines.size() - 1));
  }
  for (int r = 0; r < s; ++r) {
    const std::string& line = lines[static_cast<size_t>(r) + 1];
    bool compact = n <= 3 && static_cast<int>(line.size()) == s &&
                   line.find(' ') == std::string::npos &&
                   line.find(',') == std::string::npos;
    if (compact) {
      for (int c = 0; c < s; ++c) {
        char ch = line[static_cast<size_t>(c)];
        if (ch == '.') continue;
        if (ch < '1' || ch > '9' || ch - '0' > s) {
          fail(ErrorCode::parse_error, std::string("invalid cell character '") + ch + "'");
        }
        g.set(r, c, ch - '0');
      }
    } else {
      auto toks = split_tokens(line);
      if (static_cast<int>(toks.size()) != s) {
        fail(ErrorCode::parse_error, "row " + std::to_string(r) + " has " +
                                         std::to_string(toks.size()) + " cells, expected " +
                                         std::to_string(s));
      }
      for (int c = 0; c < s; ++c) {
        if (toks[static_cast<size_t>(c)] == ".") continue;
        int v = parse_int(toks[static_cast<size_t>(c)], "cell value");
        if (v < 1 || v > s) {
          fail(ErrorCode::parse_error, "cell value " + std::to_string(v) + " out of range 1.." +
                                           std::to_string(s));
        }
        g.set(r, c, v);
      }
    }
  }
  return g;
}

std::string Grid::serialize() const {
  std::ostringstream out;
  out << "n " << n_ << "\n";
  const int s = side();
  for (int r = 0; r < s; ++r) {
    if (n_ <= 3) {
      for (int c = 0; c < s; ++c) {
        int v = cells_[static_cast<size_t>(index(r, c))];
        out << (v == 0 ? '.' : static_cast<char>('0' + v));
      }
    } else {
      for (int c = 0; c < s; ++c) {
        if (c > 0) out << ',';
        int v = cells_[static_cast<size_t>(index(r, c))];
        if (v == 0) {
          out << '.';
        } else {
          out << v;
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

Grid swap_bands(const Grid& g, const Band& a, const Band& b) {
  const int n = g.block_order();
  if (a.orientation != b.orientation) {
    fail(ErrorCode::invalid_argument, "cannot swap bands of different orientation");
  }
  if (a.index < 1 || a.index > n || b.index < 1 || b.index > n) {
    fail(ErrorCode::invalid_argument, "band index out of range");
  }
  Grid out = g;
  if (a.index == b.index) return out;
  const int s = g.side();
  for (int k = 0; k < n; ++k) {
    for (int t = 0; t < s; ++t) {
      int ia = (a.index - 1) * n + k;
      int ib = (b.index - 1) * n + k;
      if (a.orientation == BandOrientation::row) {
        out.set(ia, t, g.at(ib, t));
        out.set(ib, t, g.at(ia, t));
      } else {
        out.set(t, ia, g.at(t, ib));
        out.set(t, ib, g.at(t, ia));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// PartlyFilledSpec

void PartlyFilledSpec::validate() const {
  if (n < 1 || n > kMaxBlockOrder) {
    fail(ErrorCode::invalid_argument, "block order out of range");
  }
  if (c1 < 0 || c1 > n || c2 < 0 || c2 > n) {
    fail(ErrorCode::invalid_argument, "c1 and c2 must lie in 0..n");
  }
}

Grid apply_partly_filled(const PartlyFilledSpec& spec, const Grid& filling) {
  spec.validate();
  if (filling.block_order() != spec.n) {
    fail(ErrorCode::invalid_argument, "filling has wrong block order");
  }
  const int s = filling.side();
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      bool inside = r < spec.c1 * spec.n && c < spec.c2 * spec.n;
      int v = filling.at(r, c);
      if (inside && v == 0) {
        fail(ErrorCode::invalid_argument, "filled rectangle has an empty cell");
      }
      if (!inside && v != 0) {
        fail(ErrorCode::invalid_argument, "filling has cells outside the rectangle");
      }
    }
  }
  if (!filling.is_consistent()) {
    fail(ErrorCode::inconsistent, "filling violates Sudoku constraints");
  }
  return filling;
}

// ---------------------------------------------------------------------------
// CoupledLayout

CoupledLayout::CoupledLayout(int block_order, std::vector<BlockCoord> components)
    : n_(block_order), components_(std::move(components)) {
  if (n_ < 1 || n_ > kMaxBlockOrder) {
    fail(ErrorCode::invalid_argument, "block order out of range");
  }
  if (components_.empty()) {
    fail(ErrorCode::invalid_argument, "layout needs at least one component");
  }
  std::set<BlockCoord> offsets(components_.begin(), components_.end());
  if (offsets.size() != components_.size()) {
    fail(ErrorCode::invalid_argument, "component block regions must be pairwise distinct");
  }

  // Edge connectivity of the union of blocks; coupled Sudokus share blocks,
  // so a disconnected set is rejected.
  std::set<BlockCoord> blocks;
  for (int k = 0; k < component_count(); ++k) {
    auto cb = component_blocks(k);
    blocks.insert(cb.begin(), cb.end());
  }
  std::vector<BlockCoord> frontier{*blocks.begin()};
  std::set<BlockCoord> visited{*blocks.begin()};
  while (!frontier.empty()) {
    BlockCoord cur = frontier.back();
    frontier.pop_back();
    const BlockCoord neighbors[4] = {{cur.row - 1, cur.col},
                                     {cur.row + 1, cur.col},
                                     {cur.row, cur.col - 1},
                                     {cur.row, cur.col + 1}};
    for (const auto& nb : neighbors) {
      if (blocks.count(nb) && !visited.count(nb)) {
        visited.insert(nb);
        frontier.push_back(nb);
      }
    }
  }
  if (visited.size() != blocks.size()) {
    fail(ErrorCode::invalid_argument, "component union is not edge-connected");
  }
}

std::vector<BlockCoord> CoupledLayout::component_blocks(int k) const {
  if (k < 0 || k >= component_count()) {
    fail(ErrorCode::invalid_argument, "component index out of range");
  }
  std::vector<BlockCoord> blocks;
  blocks.reserve(static_cast<size_t>(n_) * n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      blocks.push_back({components_[static_cast<size_t>(k)].row + r,
                        components_[static_cast<size_t>(k)].col + c});
    }
  }
  return blocks;
}

long long CoupledLayout::total_cells() const {
  std::set<BlockCoord> blocks;
  for (int k = 0; k < component_count(); ++k) {
    auto cb = component_blocks(k);
    blocks.insert(cb.begin(), cb.end());
  }
  return static_cast<long long>(blocks.size()) * n_ * n_;
}

CoupledLayout CoupledLayout::parse(const std::string& text) {
  auto lines = non_empty_lines(text);
  int n = parse_header(lines, "n");
  std::vector<BlockCoord> comps;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_tokens(lines[i]);
    if (toks.size() != 3 || toks[0] != "component") {
      fail(ErrorCode::parse_error, "expected 'component <row_offset> <col_offset>'");
    }
    comps.push_back({parse_int(toks[1], "row offset"), parse_int(toks[2], "col offset")});
  }
  return CoupledLayout(n, std::move(comps));
}

std::string CoupledLayout::serialize() const {
  std::ostringstream out;
  out << "n " << n_ << "\n";
  for (const auto& c : components_) {
    out << "component " << c.row << " " << c.col << "\n";
  }
  return out.str();
}

// The Shogun and Sumo grids are chains of overlapping 3x3 Sudokus: rows of
// outer grids spaced four blocks apart, with center grids bridging each
// 2x2 arrangement of neighbours through their corner blocks. Outer grids
// are listed first so that the natural decomposition order processes every
// center grid after all of its neighbours.
CoupledLayout shogun_layout() {
  return CoupledLayout(3, {{0, 0},
                           {0, 4},
                           {0, 8},
                           {0, 12},
                           {4, 0},
                           {4, 4},
                           {4, 8},
                           {4, 12},
                           {2, 2},
                           {2, 6},
                           {2, 10}});
}

CoupledLayout sumo_layout() {
  return CoupledLayout(3, {{0, 0},
                           {0, 4},
                           {0, 8},
                           {4, 0},
                           {4, 4},
                           {4, 8},
                           {8, 0},
                           {8, 4},
                           {8, 8},
                           {2, 2},
                           {2, 6},
                           {6, 2},
                           {6, 6}});
}

// Each stage is shifted one block down-right from the previous one, so
// consecutive stages share a 2x2 rectangle of blocks (36 cells at n=3).
CoupledLayout stair_layout(int stages) {
  if (stages < 1) fail(ErrorCode::invalid_argument, "stage count must be >= 1");
  std::vector<BlockCoord> comps;
  for (int k = 0; k < stages; ++k) comps.push_back({k, k});
  return CoupledLayout(3, std::move(comps));
}

// Each stage is shifted two block rows down, so consecutive stages share a
// full row band (1x3 blocks, 27 cells at n=3).
CoupledLayout belt_layout(int stages) {
  if (stages < 1) fail(ErrorCode::invalid_argument, "stage count must be >= 1");
  std::vector<BlockCoord> comps;
  for (int k = 0; k < stages; ++k) comps.push_back({2 * k, 0});
  return CoupledLayout(3, std::move(comps));
}

CoupledLayout CoupledLayout::catalog(const std::string& kind) {
  if (kind == "shogun") return shogun_layout();
  if (kind == "sumo") return sumo_layout();
  auto colon = kind.find(':');
  if (colon != std::string::npos) {
    std::string base = kind.substr(0, colon);
    int stages = parse_int(kind.substr(colon + 1), "stage count");
    if (base == "stair") return stair_layout(stages);
    if (base == "belt") return belt_layout(stages);
  }
  fail(ErrorCode::invalid_argument,
       "unknown layout kind '" + kind + "' (expected shogun, sumo, stair:L, or belt:L)");
}

}  // namespace scsudoku
