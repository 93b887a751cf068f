#pragma once

// Exact linear algebra: reduced row echelon form, kernels, ranks, greedy
// complements, and an incremental echelon basis used by the degreewise engines.

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace gradedreg {

template <class F>
struct RrefResult {
  DenseMatrix<F> reduced;
  std::vector<std::size_t> pivots;
};

namespace detail {

template <class F>
RrefResult<F> rref_dense(const F& field, DenseMatrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t r = rank;
    while (r < m.rows() && field.is_zero(m(r, c))) ++r;
    if (r == m.rows()) continue;
    if (r != rank)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(rank, k));
    auto inv = field.inv(m(rank, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(rank, k) = field.mul(m(rank, k), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || field.is_zero(m(i, c))) continue;
      auto f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = field.sub(m(i, k), field.mul(f, m(rank, k)));
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
const typename F::Elem* entry_at(const SparseVec<F>& row, index_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, index_t k) { return e.first < k; });
  return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

template <class F>
RrefResult<F> rref_sparse(const F& field, const DenseMatrix<F>& m) {
  std::vector<SparseVec<F>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!field.is_zero(m(r, c))) rows[r].emplace_back(index_t(c), m(r, c));
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::size_t r = rank;
    while (r < rows.size() && !entry_at<F>(rows[r], index_t(c))) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    scale(field, rows[rank], field.inv(*entry_at<F>(rows[rank], index_t(c))));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank) continue;
      if (const auto* f = entry_at<F>(rows[i], index_t(c))) axpy(field, rows[i], field.neg(*f), rows[rank]);
    }
    pivots.push_back(c);
    ++rank;
  }
  DenseMatrix<F> out(field, m.rows(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, a] : rows[r]) out(r, c) = a;
  return {std::move(out), std::move(pivots)};
}

}  // namespace detail

/// Entries / (rows * cols) below which rref switches to sparse rows. Results do not depend on it.
inline constexpr double sparse_density_threshold = 0.25;

/// Reduced row echelon form: leftmost-nonzero pivots, rows processed top-down.
template <class F>
RrefResult<F> rref(const F& field, const DenseMatrix<F>& m) {
  std::size_t nnz = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) nnz += !field.is_zero(m(r, c));
  double cells = double(m.rows()) * double(m.cols());
  if (cells > 0 && double(nnz) < sparse_density_threshold * cells) return detail::rref_sparse(field, m);
  return detail::rref_dense(field, m);
}

/// Columns form a basis of the right null space, one per free column of rref(m) in ascending order.
template <class F>
DenseMatrix<F> kernel_basis(const F& field, const DenseMatrix<F>& m) {
  auto [red, pivots] = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatrix<F> basis(field, m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = field.neg(red(r, free_cols[k]));
  }
  return basis;
}

template <class F>
std::size_t rank(const F& field, const DenseMatrix<F>& m) {
  return rref(field, m).pivots.size();
}

/// Incremental echelon basis of a subspace of sparse vectors.
///
/// Each stored row has pivot = its largest index with coefficient one. Rows may
/// carry a tag recording which combination of inserted vectors produced them.
template <class F>
class EchelonBasis {
 public:
  using Elem = typename F::Elem;

  explicit EchelonBasis(F field) : field_(std::move(field)) {}

  std::size_t rank() const noexcept { return rows_.size(); }

  /// Eliminates every pivot coordinate from v; tag (if non-null) receives -sum(coef * row tag).
  void reduce(SparseVec<F>& v, SparseVec<F>* tag = nullptr) const {
    index_t limit = v.empty() ? 0 : v.back().first + 1;
    while (!v.empty()) {
      auto it = std::lower_bound(v.begin(), v.end(), limit, [](const auto& e, index_t k) { return e.first < k; });
      int row = -1;
      Elem coef{};
      while (it != v.begin()) {
        --it;
        if (it->first < pivot_of_.size() && pivot_of_[it->first] >= 0) {
          row = pivot_of_[it->first];
          coef = it->second;
          limit = it->first;
          break;
        }
      }
      if (row < 0) break;
      auto minus = field_.neg(coef);
      axpy(field_, v, minus, rows_[row].vec);
      if (tag) axpy(field_, *tag, minus, rows_[row].tag);
    }
  }

  /// Adds v (with its tag) if independent of the current span. Returns whether it was added.
  bool insert(SparseVec<F> v, SparseVec<F> tag = {}) {
    reduce(v, &tag);
    if (v.empty()) return false;
    auto inv = field_.inv(v.back().second);
    scale(field_, v, inv);
    scale(field_, tag, inv);
    index_t p = v.back().first;
    if (pivot_of_.size() <= p) pivot_of_.resize(p + 1, -1);
    pivot_of_[p] = int(rows_.size());
    rows_.push_back({std::move(v), std::move(tag)});
    return true;
  }

  bool contains(SparseVec<F> v) const {
    reduce(v);
    return v.empty();
  }

 private:
  struct Row {
    SparseVec<F> vec;
    SparseVec<F> tag;
  };
  F field_;
  std::vector<Row> rows_;
  std::vector<int> pivot_of_;
};

/// Kernel of the map whose c-th column is columns[c]; vectors are in column coordinates.
/// Produces exactly the rref free-column basis, in ascending column order.
template <class F>
std::vector<SparseVec<F>> kernel_of_columns(const F& field, const std::vector<SparseVec<F>>& columns) {
  EchelonBasis<F> eb(field);
  std::vector<SparseVec<F>> kernel;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    SparseVec<F> v = columns[c];
    SparseVec<F> tag = unit_vector(field, index_t(c));
    eb.reduce(v, &tag);
    if (v.empty())
      kernel.push_back(std::move(tag));
    else
      eb.insert(std::move(v), std::move(tag));
  }
  return kernel;
}

template <class F>
std::size_t rank_of_columns(const F& field, const std::vector<SparseVec<F>>& columns) {
  EchelonBasis<F> eb(field);
  for (const auto& c : columns) eb.insert(c);
  return eb.rank();
}

/// Indices of ambient vectors whose classes form a basis of (span + ambient) / span,
/// chosen greedily left to right.
template <class F>
std::vector<std::size_t> span_complement(const F& field, const std::vector<SparseVec<F>>& span,
                                         const std::vector<SparseVec<F>>& ambient) {
  EchelonBasis<F> eb(field);
  for (const auto& v : span) eb.insert(v);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < ambient.size(); ++i)
    if (eb.insert(ambient[i])) picked.push_back(i);
  return picked;
}

template <class F>
std::vector<std::size_t> column_span_complement(const F& field, const DenseMatrix<F>& span,
                                                const DenseMatrix<F>& ambient) {
  std::vector<SparseVec<F>> s, a;
  for (std::size_t c = 0; c < span.cols(); ++c) s.push_back(span.column(field, c));
  for (std::size_t c = 0; c < ambient.cols(); ++c) a.push_back(ambient.column(field, c));
  return span_complement(field, s, a);
}

/// Expresses vectors in terms of a fixed list of linearly independent vectors.
template <class F>
class CoordinateSystem {
 public:
  CoordinateSystem(const F& field, const std::vector<SparseVec<F>>& basis) : field_(field), eb_(field) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      [[maybe_unused]] bool added = eb_.insert(basis[k], unit_vector(field, index_t(k)));
      assert(added && "CoordinateSystem basis must be independent");
    }
    size_ = basis.size();
  }

  std::size_t size() const noexcept { return size_; }

  /// Coefficients of v in the basis, or nullopt when v is outside the span.
  std::optional<SparseVec<F>> express(SparseVec<F> v) const {
    SparseVec<F> tag;
    eb_.reduce(v, &tag);
    if (!v.empty()) return std::nullopt;
    scale(field_, tag, field_.neg(field_.one()));
    return tag;
  }

 private:
  F field_;
  EchelonBasis<F> eb_;
  std::size_t size_ = 0;
};

}  // namespace gradedreg
