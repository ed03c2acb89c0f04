#include "scsudoku.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "counting.hpp"
#include "coupling.hpp"
#include "error.hpp"
#include "grid.hpp"
#include "permanent.hpp"

using namespace scsudoku;

struct scs_grid {
  Grid g;
};
struct scs_layout {
  CoupledLayout l;
};
struct scs_matrix {
  BinaryMatrix m;
};
struct scs_bound {
  LogBound b;
};
struct scs_decomposition {
  CoupledLayout layout;  // owned copy so the handle is self-contained
  Decomposition d;
};
struct scs_composite {
  CompositeBound c;
};
struct scs_pf_counts {
  PartlyFilledCounts counts;
  std::vector<std::pair<std::string, unsigned long long>> entries;  // count -> #patterns
};

namespace {

thread_local std::string g_last_error;

scs_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse_error:
      return SCS_ERROR_PARSE;
    case ErrorCode::invalid_argument:
      return SCS_ERROR_INVALID_ARGUMENT;
    case ErrorCode::inconsistent:
      return SCS_ERROR_INCONSISTENT;
    case ErrorCode::too_large:
      return SCS_ERROR_TOO_LARGE;
    case ErrorCode::budget_exceeded:
      return SCS_ERROR_BUDGET_EXCEEDED;
    case ErrorCode::unsupported:
      return SCS_ERROR_UNSUPPORTED;
    case ErrorCode::io_error:
      return SCS_ERROR_IO;
  }
  return SCS_ERROR_INTERNAL;
}

template <typename Fn>
scs_status guarded(Fn&& fn) {
  try {
    fn();
    return SCS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SCS_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string read_text_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_error, std::string("cannot open '") + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

scs_status require(bool ok, const char* message) {
  if (ok) return SCS_OK;
  g_last_error = message;
  return SCS_ERROR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* scs_version(void) { return "0.1.0"; }

const char* scs_status_name(scs_status status) {
  switch (status) {
    case SCS_OK:
      return "ok";
    case SCS_ERROR_PARSE:
      return "parse error";
    case SCS_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case SCS_ERROR_INCONSISTENT:
      return "inconsistent";
    case SCS_ERROR_TOO_LARGE:
      return "too large";
    case SCS_ERROR_BUDGET_EXCEEDED:
      return "node budget exceeded";
    case SCS_ERROR_UNSUPPORTED:
      return "unsupported";
    case SCS_ERROR_IO:
      return "i/o error";
    case SCS_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

const char* scs_last_error(void) { return g_last_error.c_str(); }

void scs_string_free(char* s) { delete[] s; }

/* ---- grids ---- */

scs_status scs_grid_parse(const char* text, scs_grid** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new scs_grid{Grid::parse(text)}; });
}

scs_status scs_grid_read_file(const char* path, scs_grid** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new scs_grid{Grid::parse(read_text_file(path))}; });
}

scs_status scs_grid_serialize(const scs_grid* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(g->g.serialize()); });
}

int scs_grid_block_order(const scs_grid* g) { return g ? g->g.block_order() : 0; }

scs_status scs_grid_is_consistent(const scs_grid* g, int* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = g->g.is_consistent() ? 1 : 0; });
}

void scs_grid_free(scs_grid* g) { delete g; }

/* ---- layouts ---- */

scs_status scs_layout_catalog(const char* kind, scs_layout** out) {
  if (auto st = require(kind && out, "null argument")) return st;
  return guarded([&] { *out = new scs_layout{CoupledLayout::catalog(kind)}; });
}

scs_status scs_layout_parse(const char* text, scs_layout** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new scs_layout{CoupledLayout::parse(text)}; });
}

scs_status scs_layout_read_file(const char* path, scs_layout** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new scs_layout{CoupledLayout::parse(read_text_file(path))}; });
}

scs_status scs_layout_serialize(const scs_layout* l, char** out) {
  if (auto st = require(l && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(l->l.serialize()); });
}

int scs_layout_block_order(const scs_layout* l) { return l ? l->l.block_order() : 0; }

int scs_layout_component_count(const scs_layout* l) {
  return l ? l->l.component_count() : 0;
}

scs_status scs_layout_component(const scs_layout* l, int index, int* block_row,
                                int* block_col) {
  if (auto st = require(l && block_row && block_col, "null argument")) return st;
  return guarded([&] {
    if (index < 0 || index >= l->l.component_count()) {
      fail(ErrorCode::invalid_argument, "component index out of range");
    }
    *block_row = l->l.components()[static_cast<size_t>(index)].row;
    *block_col = l->l.components()[static_cast<size_t>(index)].col;
  });
}

long long scs_layout_total_cells(const scs_layout* l) { return l ? l->l.total_cells() : 0; }

void scs_layout_free(scs_layout* l) { delete l; }

/* ---- matrices / permanents ---- */

scs_status scs_matrix_parse(const char* text, scs_matrix** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new scs_matrix{BinaryMatrix::parse(text)}; });
}

scs_status scs_matrix_read_file(const char* path, scs_matrix** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new scs_matrix{BinaryMatrix::parse(read_text_file(path))}; });
}

scs_status scs_matrix_serialize(const scs_matrix* m, char** out) {
  if (auto st = require(m && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(m->m.serialize()); });
}

int scs_matrix_size(const scs_matrix* m) { return m ? m->m.size() : 0; }

scs_status scs_matrix_permanent(const scs_matrix* m, scs_perm_method method,
                                char** out_decimal) {
  if (auto st = require(m && out_decimal, "null argument")) return st;
  return guarded([&] {
    mpz_class value;
    switch (method) {
      case SCS_PERM_NAIVE:
        value = permanent_naive(m->m);
        break;
      case SCS_PERM_RYSER:
        value = permanent_ryser(m->m);
        break;
      default:
        fail(ErrorCode::invalid_argument, "unknown permanent method");
    }
    *out_decimal = dup_string(value.get_str());
  });
}

scs_status scs_matrix_bregman_minc(const scs_matrix* m, scs_bound** out) {
  if (auto st = require(m && out, "null argument")) return st;
  return guarded([&] { *out = new scs_bound{bregman_minc_bound(m->m)}; });
}

scs_status scs_grid_admissibility(const scs_grid* g, int row_index, scs_matrix** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = new scs_matrix{admissibility_matrix(g->g, row_index)}; });
}

void scs_matrix_free(scs_matrix* m) { delete m; }

/* ---- bounds ---- */

scs_status scs_bound_isolated(int n, int c1, int c2, scs_bound** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = new scs_bound{partly_filled_bound(PartlyFilledSpec{n, c1, c2})};
  });
}

double scs_bound_ln(const scs_bound* b) { return b ? b->b.ln() : 0.0; }

double scs_bound_log10(const scs_bound* b) { return b ? b->b.log10() : 0.0; }

int scs_bound_is_exact(const scs_bound* b) {
  return b && b->b.exact().has_value() ? 1 : 0;
}

scs_status scs_bound_exact_decimal(const scs_bound* b, char** out) {
  if (auto st = require(b && out, "null argument")) return st;
  return guarded([&] {
    if (!b->b.exact()) fail(ErrorCode::unsupported, "bound has no exact integer value");
    *out = dup_string(b->b.exact()->get_str());
  });
}

scs_status scs_bound_floor_decimal(const scs_bound* b, char** out, int* confident) {
  if (auto st = require(b && out, "null argument")) return st;
  return guarded([&] {
    auto f = b->b.floor_value();
    *out = dup_string(f.value.get_str());
    if (confident) *confident = f.confident ? 1 : 0;
  });
}

int scs_bound_term_count(const scs_bound* b) {
  return b ? static_cast<int>(b->b.terms().size()) : 0;
}

scs_status scs_bound_term(const scs_bound* b, int index, long long* factorial_arg,
                          long long* exp_num, long long* exp_den) {
  if (auto st = require(b && factorial_arg && exp_num && exp_den, "null argument")) return st;
  return guarded([&] {
    const auto& terms = b->b.terms();
    if (index < 0 || index >= static_cast<int>(terms.size())) {
      fail(ErrorCode::invalid_argument, "term index out of range");
    }
    const auto& t = terms[static_cast<size_t>(index)];
    *factorial_arg = t.factorial_arg;
    *exp_num = t.exp_num;
    *exp_den = t.exp_den;
  });
}

void scs_bound_free(scs_bound* b) { delete b; }

scs_status scs_asymptotic_exponents(double d1, double d2, double* alpha, double* beta) {
  if (auto st = require(alpha && beta, "null argument")) return st;
  return guarded([&] {
    auto e = asymptotic_exponents(d1, d2);
    *alpha = e.alpha;
    *beta = e.beta;
  });
}

/* ---- decompositions / composites ---- */

scs_status scs_layout_decompose(const scs_layout* l, const int* order, int order_len,
                                scs_decomposition** out) {
  if (auto st = require(l && out, "null argument")) return st;
  return guarded([&] {
    Decomposition d;
    if (order == nullptr) {
      d = decompose(l->l);
    } else {
      d = decompose(l->l, std::span<const int>(order, static_cast<size_t>(order_len)));
    }
    *out = new scs_decomposition{l->l, std::move(d)};
  });
}

scs_status scs_layout_best_decomposition(const scs_layout* l, int use_exact_free,
                                         scs_decomposition** out) {
  if (auto st = require(l && out, "null argument")) return st;
  return guarded([&] {
    *out = new scs_decomposition{l->l, best_decomposition(l->l, use_exact_free != 0)};
  });
}

scs_status scs_layout_greedy_decomposition(const scs_layout* l, scs_decomposition** out) {
  if (auto st = require(l && out, "null argument")) return st;
  return guarded([&] { *out = new scs_decomposition{l->l, greedy_decomposition(l->l)}; });
}

int scs_decomposition_size(const scs_decomposition* d) {
  return d ? static_cast<int>(d->d.order.size()) : 0;
}

scs_status scs_decomposition_entry(const scs_decomposition* d, int pos, int* component,
                                   int* c1, int* c2) {
  if (auto st = require(d && component && c1 && c2, "null argument")) return st;
  return guarded([&] {
    if (pos < 0 || pos >= static_cast<int>(d->d.order.size())) {
      fail(ErrorCode::invalid_argument, "position out of range");
    }
    *component = d->d.order[static_cast<size_t>(pos)];
    *c1 = d->d.specs[static_cast<size_t>(pos)].c1;
    *c2 = d->d.specs[static_cast<size_t>(pos)].c2;
  });
}

scs_status scs_decomposition_composite(const scs_decomposition* d, int use_exact_free,
                                       scs_composite** out) {
  if (auto st = require(d && out, "null argument")) return st;
  return guarded([&] {
    *out = new scs_composite{composite_bound(d->layout, d->d, use_exact_free != 0)};
  });
}

void scs_decomposition_free(scs_decomposition* d) { delete d; }

double scs_composite_ln(const scs_composite* c) { return c ? c->c.total.ln() : 0.0; }

double scs_composite_log10(const scs_composite* c) { return c ? c->c.total.log10() : 0.0; }

double scs_composite_rate_upper(const scs_composite* c) { return c ? c->c.rate_upper : 0.0; }

long long scs_composite_cells(const scs_composite* c) { return c ? c->c.cells : 0; }

int scs_composite_size(const scs_composite* c) {
  return c ? static_cast<int>(c->c.per_component.size()) : 0;
}

scs_status scs_composite_component(const scs_composite* c, int pos, int* component, int* c1,
                                   int* c2, double* ln, int* used_exact_count) {
  if (auto st = require(c != nullptr, "null argument")) return st;
  return guarded([&] {
    if (pos < 0 || pos >= static_cast<int>(c->c.per_component.size())) {
      fail(ErrorCode::invalid_argument, "position out of range");
    }
    const auto& e = c->c.per_component[static_cast<size_t>(pos)];
    if (component) *component = e.component;
    if (c1) *c1 = e.spec.c1;
    if (c2) *c2 = e.spec.c2;
    if (ln) *ln = e.bound.ln();
    if (used_exact_count) *used_exact_count = e.exact_count_used ? 1 : 0;
  });
}

void scs_composite_free(scs_composite* c) { delete c; }

/* ---- rates ---- */

scs_status scs_coding_rate(double ln_value, int n, long long cells, double* out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] { *out = coding_rate(ln_value, n, cells); });
}

scs_status scs_rate_limit(const char* kind, double* out) {
  if (auto st = require(kind && out, "null argument")) return st;
  return guarded([&] {
    std::string k(kind);
    if (k == "stair") {
      *out = rate_limit(StageKind::stair);
    } else if (k == "belt") {
      *out = rate_limit(StageKind::belt);
    } else {
      fail(ErrorCode::invalid_argument, "kind must be 'stair' or 'belt'");
    }
  });
}

/* ---- counting ---- */

scs_status scs_count_solutions(const scs_grid* g, unsigned long long node_budget,
                               char** count_decimal, unsigned long long* nodes,
                               double* seconds) {
  if (auto st = require(g && count_decimal, "null argument")) return st;
  return guarded([&] {
    CountResult r = count_solutions(g->g, node_budget);
    *count_decimal = dup_string(r.count.get_str());
    if (nodes) *nodes = r.nodes;
    if (seconds) *seconds = r.elapsed.count();
  });
}

scs_status scs_count_coupled(const scs_layout* l, unsigned long long node_budget,
                             char** count_decimal, unsigned long long* nodes,
                             double* seconds) {
  if (auto st = require(l && count_decimal, "null argument")) return st;
  return guarded([&] {
    CountResult r = count_coupled(l->l, node_budget);
    *count_decimal = dup_string(r.count.get_str());
    if (nodes) *nodes = r.nodes;
    if (seconds) *seconds = r.elapsed.count();
  });
}

scs_status scs_count_row_completions(const scs_grid* g, int row_index, char** count_decimal) {
  if (auto st = require(g && count_decimal, "null argument")) return st;
  return guarded([&] {
    *count_decimal = dup_string(count_row_completions(g->g, row_index).get_str());
  });
}

scs_status scs_count_partly_filled(int n, int c1, int c2, unsigned long long node_budget,
                                   unsigned long long sample, unsigned long long seed,
                                   scs_pf_counts** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    auto counts = count_partly_filled(PartlyFilledSpec{n, c1, c2}, node_budget, sample, seed);
    auto* handle = new scs_pf_counts{std::move(counts), {}};
    for (const auto& [count, patterns] : handle->counts.histogram) {
      handle->entries.emplace_back(count.get_str(), patterns);
    }
    *out = handle;
  });
}

unsigned long long scs_pf_counts_patterns(const scs_pf_counts* p) {
  return p ? p->counts.patterns : 0;
}

int scs_pf_counts_entry_count(const scs_pf_counts* p) {
  return p ? static_cast<int>(p->entries.size()) : 0;
}

scs_status scs_pf_counts_entry(const scs_pf_counts* p, int index, char** count_decimal,
                               unsigned long long* patterns) {
  if (auto st = require(p && count_decimal, "null argument")) return st;
  return guarded([&] {
    if (index < 0 || index >= static_cast<int>(p->entries.size())) {
      fail(ErrorCode::invalid_argument, "entry index out of range");
    }
    *count_decimal = dup_string(p->entries[static_cast<size_t>(index)].first);
    if (patterns) *patterns = p->entries[static_cast<size_t>(index)].second;
  });
}

scs_status scs_pf_counts_min(const scs_pf_counts* p, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(p->counts.min.get_str()); });
}

scs_status scs_pf_counts_max(const scs_pf_counts* p, char** out) {
  if (auto st = require(p && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(p->counts.max.get_str()); });
}

void scs_pf_counts_free(scs_pf_counts* p) { delete p; }

}  // extern "C"
