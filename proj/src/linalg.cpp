#include "hodgeham/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hodgeham {

Rational SparseVec::at(uint32_t i) const {
  auto it = std::lower_bound(
      t.begin(), t.end(), i,
      [](const auto& term, uint32_t idx) { return term.first < idx; });
  if (it != t.end() && it->first == i) return it->second;
  return Rational(0);
}

void axpy(SparseVec& dst, const Rational& c, const SparseVec& src) {
  if (is_zero(c) || src.empty()) return;
  SparseVec out;
  out.t.reserve(dst.t.size() + src.t.size());
  size_t i = 0, j = 0;
  while (i < dst.t.size() && j < src.t.size()) {
    if (dst.t[i].first < src.t[j].first) {
      out.t.push_back(std::move(dst.t[i++]));
    } else if (dst.t[i].first > src.t[j].first) {
      out.t.emplace_back(src.t[j].first, c * src.t[j].second);
      ++j;
    } else {
      Rational v = dst.t[i].second + c * src.t[j].second;
      if (!is_zero(v)) out.t.emplace_back(dst.t[i].first, std::move(v));
      ++i, ++j;
    }
  }
  for (; i < dst.t.size(); ++i) out.t.push_back(std::move(dst.t[i]));
  for (; j < src.t.size(); ++j)
    out.t.emplace_back(src.t[j].first, c * src.t[j].second);
  dst = std::move(out);
}

SparseVec scaled(const SparseVec& v, const Rational& c) {
  SparseVec out;
  if (is_zero(c)) return out;
  out.t.reserve(v.t.size());
  for (const auto& [i, x] : v.t) out.t.emplace_back(i, c * x);
  return out;
}

BlockMatrix BlockMatrix::identity(uint32_t n) {
  BlockMatrix m(n, n);
  for (uint32_t i = 0; i < n; ++i) m.set_column(i, SparseVec::unit(i));
  return m;
}

void BlockMatrix::add_entry(uint32_t r, uint32_t c, const Rational& v) {
  if (hodgeham::is_zero(v)) return;
  auto& terms = col_[c].t;
  auto it = std::lower_bound(
      terms.begin(), terms.end(), r,
      [](const auto& term, uint32_t idx) { return term.first < idx; });
  if (it != terms.end() && it->first == r) {
    it->second += v;
    if (hodgeham::is_zero(it->second)) terms.erase(it);
  } else {
    terms.emplace(it, r, v);
  }
}

BlockMatrix BlockMatrix::transposed() const {
  BlockMatrix out(cols(), rows());
  std::vector<size_t> fill(rows_, 0);
  for (const auto& col : col_)
    for (const auto& [r, v] : col.t) ++fill[r];
  std::vector<SparseVec> tcols(rows_);
  for (uint32_t r = 0; r < rows_; ++r) tcols[r].t.reserve(fill[r]);
  for (uint32_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : col_[c].t) tcols[r].t.emplace_back(c, v);
  for (uint32_t r = 0; r < rows_; ++r) out.set_column(r, std::move(tcols[r]));
  out.row_labels = col_labels;
  out.col_labels = row_labels;
  return out;
}

SparseVec BlockMatrix::apply(const SparseVec& x) const {
  std::vector<std::pair<uint32_t, Rational>> buf;
  for (const auto& [i, xi] : x.t)
    for (const auto& [r, v] : col_[i].t) buf.emplace_back(r, xi * v);
  std::sort(buf.begin(), buf.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [r, v] : buf) {
    if (!out.t.empty() && out.t.back().first == r)
      out.t.back().second += v;
    else
      out.t.emplace_back(r, std::move(v));
  }
  std::erase_if(out.t,
                [](const auto& term) { return hodgeham::is_zero(term.second); });
  return out;
}

BlockMatrix BlockMatrix::times(const BlockMatrix& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("times: shape");
  BlockMatrix out(rows_, rhs.cols());
  for (uint32_t c = 0; c < rhs.cols(); ++c)
    out.set_column(c, apply(rhs.column(c)));
  out.row_labels = row_labels;
  out.col_labels = rhs.col_labels;
  return out;
}

bool BlockMatrix::is_zero() const {
  for (const auto& col : col_)
    if (!col.empty()) return false;
  return true;
}

BlockMatrix BlockMatrix::plus(const BlockMatrix& o, const Rational& scale) const {
  if (rows_ != o.rows_ || cols() != o.cols())
    throw std::invalid_argument("plus: shape");
  BlockMatrix out = *this;
  for (uint32_t c = 0; c < cols(); ++c) {
    SparseVec v = column(c);
    axpy(v, scale, o.column(c));
    out.set_column(c, std::move(v));
  }
  return out;
}

Rational BlockMatrix::max_col_l1() const {
  Rational best(0);
  for (const auto& col : col_) {
    Rational s(0);
    for (const auto& [r, v] : col.t) s += abs(v);
    if (s > best) best = s;
  }
  return best;
}

Eliminator::Eliminator(uint32_t rows, bool track_history)
    : nrows_(rows),
      track_(track_history),
      cols_(rows),
      has_pivot_(rows, false),
      slot_of_row_(rows, 0),
      scratch_(rows, Rational(0)),
      present_(rows, false) {
  if (track_) hist_.resize(rows);
}

// Scatter-reduce against installed pivots. Entries are consumed in ascending
// row order; a pivot application at row r only touches rows > r, so each row
// is finalized exactly once.
SparseVec Eliminator::reduce_impl(
    const SparseVec& x, std::vector<std::pair<uint32_t, Rational>>* coeffs,
    SparseVec* hist_accum) const {
  heap_.clear();
  for (const auto& [i, c] : x.t) {
    scratch_[i] = c;
    present_[i] = true;
    heap_.push_back(i);
  }
  std::make_heap(heap_.begin(), heap_.end(), std::greater<uint32_t>());
  SparseVec res;
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<uint32_t>());
    uint32_t r = heap_.back();
    heap_.pop_back();
    present_[r] = false;
    Rational c;
    swap(c, scratch_[r]);
    if (is_zero(c)) continue;
    if (has_pivot_[r]) {
      const SparseVec& p = cols_[r];
      for (size_t idx = 1; idx < p.t.size(); ++idx) {
        const auto& [row, val] = p.t[idx];
        scratch_[row] -= c * val;
        if (!present_[row]) {
          present_[row] = true;
          heap_.push_back(row);
          std::push_heap(heap_.begin(), heap_.end(), std::greater<uint32_t>());
        }
      }
      if (coeffs) coeffs->emplace_back(slot_of_row_[r], c);
      if (hist_accum) axpy(*hist_accum, -c, hist_[r]);
    } else {
      res.t.emplace_back(r, std::move(c));
    }
  }
  return res;
}

std::optional<uint32_t> Eliminator::add_column(const SparseVec& col) {
  SparseVec hist;
  if (track_) hist = SparseVec::unit(added_);
  SparseVec res = reduce_impl(col, nullptr, track_ ? &hist : nullptr);
  ++added_;
  if (res.empty()) {
    if (track_) kernel_.push_back(std::move(hist));
    return std::nullopt;
  }
  uint32_t r = res.t.front().first;
  const Rational lead = res.t.front().second;
  if (lead != 1) {
    for (auto& [i, c] : res.t) c /= lead;
    if (track_)
      for (auto& [i, c] : hist.t) c /= lead;
  }
  has_pivot_[r] = true;
  slot_of_row_[r] = static_cast<uint32_t>(order_.size());
  order_.push_back(r);
  cols_[r] = std::move(res);
  if (track_) hist_[r] = std::move(hist);
  return r;
}

SparseVec Eliminator::reduce(
    const SparseVec& x,
    std::vector<std::pair<uint32_t, Rational>>* pivot_coeffs) const {
  return reduce_impl(x, pivot_coeffs, nullptr);
}

std::optional<SparseVec> Eliminator::solve(const SparseVec& x) const {
  if (!track_) throw std::logic_error("solve requires history tracking");
  std::vector<std::pair<uint32_t, Rational>> coeffs;
  SparseVec res = reduce_impl(x, &coeffs, nullptr);
  if (!res.empty()) return std::nullopt;
  SparseVec combo;
  for (const auto& [slot, c] : coeffs) axpy(combo, c, hist_[order_[slot]]);
  return combo;
}

uint32_t rank(const BlockMatrix& a) {
  Eliminator e(a.rows());
  for (uint32_t c = 0; c < a.cols(); ++c) e.add_column(a.column(c));
  return e.rank();
}

BlockMatrix kernel_basis(const BlockMatrix& a) {
  Eliminator e(a.rows(), true);
  for (uint32_t c = 0; c < a.cols(); ++c) e.add_column(a.column(c));
  const auto& combos = e.kernel_combos();
  BlockMatrix out(a.cols(), static_cast<uint32_t>(combos.size()));
  for (uint32_t j = 0; j < combos.size(); ++j) out.set_column(j, combos[j]);
  out.row_labels = a.col_labels;
  return out;
}

BlockMatrix image_basis(const BlockMatrix& a) {
  Eliminator e(a.rows());
  for (uint32_t c = 0; c < a.cols(); ++c) e.add_column(a.column(c));
  BlockMatrix out(a.rows(), e.rank());
  for (uint32_t j = 0; j < e.rank(); ++j) out.set_column(j, e.pivot_column(j));
  out.row_labels = a.row_labels;
  return out;
}

std::optional<SparseVec> solve(const BlockMatrix& a, const SparseVec& b) {
  Eliminator e(a.rows(), true);
  for (uint32_t c = 0; c < a.cols(); ++c) e.add_column(a.column(c));
  return e.solve(b);
}

BlockMatrix invert(const BlockMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert: not square");
  Eliminator e(a.rows(), true);
  for (uint32_t c = 0; c < a.cols(); ++c) e.add_column(a.column(c));
  if (e.rank() != a.rows()) throw std::invalid_argument("invert: singular");
  BlockMatrix out(a.rows(), a.rows());
  for (uint32_t i = 0; i < a.rows(); ++i) {
    auto x = e.solve(SparseVec::unit(i));
    out.set_column(i, std::move(*x));
  }
  return out;
}

bool subspace_contained(const BlockMatrix& sub, const BlockMatrix& sup) {
  if (sub.rows() != sup.rows())
    throw std::invalid_argument("subspace_contained: ambient mismatch");
  Eliminator e(sup.rows());
  for (uint32_t c = 0; c < sup.cols(); ++c) e.add_column(sup.column(c));
  for (uint32_t c = 0; c < sub.cols(); ++c)
    if (!e.in_span(sub.column(c))) return false;
  return true;
}

bool subspace_equal(const BlockMatrix& u, const BlockMatrix& v) {
  return subspace_contained(u, v) && subspace_contained(v, u);
}

}  // namespace hodgeham
