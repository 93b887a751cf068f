#pragma once

// Dense and column-sparse matrices over an exact field.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gradedreg {

using index_t = std::uint32_t;

/// Sparse vector: entries sorted by strictly increasing index, no stored zeros.
template <class F>
using SparseVec = std::vector<std::pair<index_t, typename F::Elem>>;

template <class F>
SparseVec<F> unit_vector(const F& field, index_t i) {
  return {{i, field.one()}};
}

/// dst += a * src
template <class F>
void axpy(const F& field, SparseVec<F>& dst, const typename F::Elem& a, const SparseVec<F>& src) {
  if (field.is_zero(a) || src.empty()) return;
  SparseVec<F> out;
  out.reserve(dst.size() + src.size());
  auto i = dst.begin(), j = src.begin();
  while (i != dst.end() || j != src.end()) {
    if (j == src.end() || (i != dst.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == dst.end() || j->first < i->first) {
      out.emplace_back(j->first, field.mul(a, j->second));
      ++j;
    } else {
      auto v = field.add(i->second, field.mul(a, j->second));
      if (!field.is_zero(v)) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

template <class F>
void scale(const F& field, SparseVec<F>& v, const typename F::Elem& a) {
  if (field.is_zero(a)) {
    v.clear();
    return;
  }
  for (auto& e : v) e.second = field.mul(e.second, a);
}

/// Shifts every index of v by offset and appends the result to out (indices must stay sorted).
template <class F>
void append_shifted(SparseVec<F>& out, const SparseVec<F>& v, index_t offset) {
  for (const auto& [i, a] : v) out.emplace_back(i + offset, a);
}

/// Column-major sparse matrix; columns[c] is the image of the c-th basis vector.
template <class F>
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec<F>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  static SparseMatrix identity(const F& field, std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns[i] = unit_vector(field, index_t(i));
    return m;
  }

  bool is_zero() const {
    return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.columns == b.columns;
  }
};

template <class F>
SparseVec<F> apply(const F& field, const SparseMatrix<F>& m, const SparseVec<F>& v) {
  SparseVec<F> out;
  for (const auto& [i, a] : v) axpy(field, out, a, m.columns[i]);
  return out;
}

/// a * b
template <class F>
SparseMatrix<F> compose(const F& field, const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  assert(a.cols == b.rows);
  SparseMatrix<F> out(a.rows, b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) out.columns[c] = apply(field, a, b.columns[c]);
  return out;
}

template <class F>
SparseMatrix<F> add(const F& field, const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  assert(a.rows == b.rows && a.cols == b.cols);
  SparseMatrix<F> out = a;
  for (std::size_t c = 0; c < b.cols; ++c) axpy(field, out.columns[c], field.one(), b.columns[c]);
  return out;
}

template <class F>
SparseMatrix<F> scaled(const F& field, SparseMatrix<F> m, const typename F::Elem& a) {
  for (auto& c : m.columns) scale(field, c, a);
  return m;
}

/// Row-major dense matrix.
template <class F>
class DenseMatrix {
 public:
  using Elem = typename F::Elem;

  DenseMatrix() = default;
  DenseMatrix(const F& field, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static DenseMatrix from_rows(const F& field, const std::vector<std::vector<Elem>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    DenseMatrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      assert(rows[i].size() == c);
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static DenseMatrix identity(const F& field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  SparseVec<F> column(const F& field, std::size_t c) const {
    SparseVec<F> v;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!field.is_zero((*this)(r, c))) v.emplace_back(index_t(r), (*this)(r, c));
    return v;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <class F>
SparseMatrix<F> to_sparse(const F& field, const DenseMatrix<F>& m) {
  SparseMatrix<F> s(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) s.columns[c] = m.column(field, c);
  return s;
}

template <class F>
DenseMatrix<F> to_dense(const F& field, const SparseMatrix<F>& m) {
  DenseMatrix<F> d(field, m.rows, m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, a] : m.columns[c]) d(r, c) = a;
  return d;
}

template <class F>
DenseMatrix<F> multiply(const F& field, const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  assert(a.cols() == b.rows());
  DenseMatrix<F> out(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
    }
  return out;
}

}  // namespace gradedreg
