#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodgeham/rational.hpp"

namespace hodgeham {

// Sparse vector: terms sorted by index, all coefficients nonzero.
struct SparseVec {
  std::vector<std::pair<uint32_t, Rational>> t;

  static SparseVec unit(uint32_t i) {
    SparseVec v;
    v.t.emplace_back(i, Rational(1));
    return v;
  }

  bool empty() const { return t.empty(); }
  size_t nnz() const { return t.size(); }

  // Coefficient lookup by binary search.
  Rational at(uint32_t i) const;

  // Requires strictly increasing index order across calls.
  void push(uint32_t i, const Rational& c) {
    if (!is_zero(c)) t.emplace_back(i, c);
  }

  bool operator==(const SparseVec& o) const { return t == o.t; }
};

// dst += c * src, merging sorted term lists.
void axpy(SparseVec& dst, const Rational& c, const SparseVec& src);
SparseVec scaled(const SparseVec& v, const Rational& c);

// Column-major exact rational matrix over a finite block. Row/column labels
// are carried for report output; operations only use dimensions.
class BlockMatrix {
 public:
  BlockMatrix() : rows_(0) {}
  BlockMatrix(uint32_t rows, uint32_t cols) : rows_(rows), col_(cols) {}

  static BlockMatrix identity(uint32_t n);

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return static_cast<uint32_t>(col_.size()); }

  void set_column(uint32_t c, SparseVec v) { col_[c] = std::move(v); }
  const SparseVec& column(uint32_t c) const { return col_[c]; }
  void add_entry(uint32_t r, uint32_t c, const Rational& v);
  Rational entry(uint32_t r, uint32_t c) const { return col_[c].at(r); }
  void append_column(SparseVec v) { col_.push_back(std::move(v)); }

  BlockMatrix transposed() const;
  BlockMatrix times(const BlockMatrix& rhs) const;
  SparseVec apply(const SparseVec& x) const;
  bool is_zero() const;
  bool operator==(const BlockMatrix& o) const {
    return rows_ == o.rows_ && col_ == o.col_;
  }

  BlockMatrix plus(const BlockMatrix& o, const Rational& scale) const;

  // max over columns of the l1 norm of the column.
  Rational max_col_l1() const;

  std::vector<std::string> row_labels, col_labels;

 private:
  uint32_t rows_;
  std::vector<SparseVec> col_;
};

// Incremental column echelon elimination. Deterministic: columns are
// processed in the order supplied and the pivot of each independent column
// is its least-index nonzero entry after reduction, so every derived basis
// is a function of the input order alone.
class Eliminator {
 public:
  explicit Eliminator(uint32_t rows, bool track_history = false);

  // Reduces col against installed pivots. Installs a new pivot and returns
  // its row when a nonzero residual remains; returns nullopt for dependent
  // columns (recording the dependency when history tracking is on).
  std::optional<uint32_t> add_column(const SparseVec& col);

  uint32_t rank() const { return static_cast<uint32_t>(order_.size()); }
  uint32_t rows() const { return nrows_; }

  // Residual of x after reduction; pivot_coeffs (optional) receives
  // (pivot insertion index, coefficient) pairs used.
  SparseVec reduce(const SparseVec& x,
                   std::vector<std::pair<uint32_t, Rational>>* pivot_coeffs
                   = nullptr) const;
  bool in_span(const SparseVec& x) const { return reduce(x).empty(); }

  // Expresses x as a combination of the added columns, or nullopt when x is
  // outside their span. Requires history tracking.
  std::optional<SparseVec> solve(const SparseVec& x) const;

  // Pivot columns in insertion order, each normalized to leading entry 1.
  const SparseVec& pivot_column(uint32_t j) const { return cols_[order_[j]]; }
  uint32_t pivot_row(uint32_t j) const { return order_[j]; }

  // Dependency combinations (over added-column indices) found so far; one
  // per dependent column, in encounter order. Requires history tracking.
  const std::vector<SparseVec>& kernel_combos() const { return kernel_; }

 private:
  uint32_t nrows_;
  bool track_;
  uint32_t added_ = 0;
  // cols_[r] = pivot column with leading row r (empty slot if none yet).
  std::vector<SparseVec> cols_;
  std::vector<SparseVec> hist_;  // combination of added columns per pivot row
  std::vector<bool> has_pivot_;
  std::vector<uint32_t> order_;  // pivot rows in insertion order
  std::vector<uint32_t> slot_of_row_;  // pivot row -> insertion index
  std::vector<SparseVec> kernel_;

  mutable std::vector<Rational> scratch_;
  mutable std::vector<uint32_t> heap_;
  mutable std::vector<bool> present_;

  SparseVec reduce_impl(const SparseVec& x,
                        std::vector<std::pair<uint32_t, Rational>>* coeffs,
                        SparseVec* hist_accum) const;
};

uint32_t rank(const BlockMatrix& a);

// Kernel basis: one column per dependent input column, deterministic.
BlockMatrix kernel_basis(const BlockMatrix& a);

// Image basis: reduced echelon pivot columns in discovery order.
BlockMatrix image_basis(const BlockMatrix& a);

// Some solution of A x = b, or nullopt when inconsistent.
std::optional<SparseVec> solve(const BlockMatrix& a, const SparseVec& b);

// Inverse of a square full-rank matrix; throws std::invalid_argument otherwise.
BlockMatrix invert(const BlockMatrix& a);

// Column spans, compared by two containment rank tests.
bool subspace_contained(const BlockMatrix& sub, const BlockMatrix& sup);
bool subspace_equal(const BlockMatrix& u, const BlockMatrix& v);

}  // namespace hodgeham
