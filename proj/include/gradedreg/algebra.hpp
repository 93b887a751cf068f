#pragma once

// Degreewise presentation of a graded algebra generated in a single degree g.
//
// Every basis element is a standard monomial. Each positive-degree basis element b
// records a generator x and a basis element p one step down with b = x * p exactly,
// which lets any module evaluate the action of b by walking down the tree.

#include <map>
#include <memory>
#include <numeric>

#include "linalg.hpp"
#include "ring.hpp"

namespace gradedreg {

template <class F>
struct AlgebraTable {
  F field;
  std::uint32_t g = 1;
  std::uint32_t cap = 0;
  std::vector<std::string> var_names;
  std::vector<std::vector<Monomial>> basis;                             // basis[j]
  std::vector<std::vector<std::uint64_t>> weights;                      // fine grading of basis[j]
  bool fine = false;                                                    // products respect weights
  std::vector<std::vector<SparseMatrix<F>>> mult;                       // mult[k][j]: A_j -> A_{j+g}
  std::vector<std::vector<std::pair<std::uint32_t, index_t>>> tree;     // tree[j][b] = (k, parent)
  bool polynomial = false;                                              // free polynomial algebra
  std::uint32_t max_relation_degree = 0;

  std::size_t ngens() const { return g <= cap ? basis[g].size() : 0; }
  const Monomial& gen(std::size_t k) const { return basis[g][k]; }
  std::uint64_t gen_weight(std::size_t k) const { return weights[g][k]; }

  std::size_t dim(std::uint32_t j) const {
    require(j);
    return basis[j].size();
  }

  void require(std::uint32_t j) const {
    if (j > cap)
      throw error(errc::window_exceeded, "algebra known up to degree " + std::to_string(cap) + ", degree " +
                                             std::to_string(j) + " requested");
  }

  std::string label(std::uint32_t j, index_t b) const { return basis[j][b].str(var_names); }

  /// Index of a monomial in basis[j], or -1.
  long index_of(std::uint32_t j, const Monomial& m) const {
    const auto& v = basis[j];
    auto it = std::lower_bound(v.begin(), v.end(), m, [](const Monomial& a, const Monomial& b) { return degrevlex_greater(a, b); });
    return (it != v.end() && *it == m) ? long(it - v.begin()) : -1;
  }
};

template <class F>
using AlgebraPtr = std::shared_ptr<const AlgebraTable<F>>;

namespace detail {

/// Fills tree[] and checks that the multiplication respects the fine grading.
template <class F>
void finish_algebra(AlgebraTable<F>& a) {
  a.tree.assign(a.cap + 1, {});
  for (std::uint32_t j = 0; j <= a.cap; ++j) {
    a.tree[j].resize(a.basis[j].size(), {0, 0});
    if (j == 0 || j < a.g) continue;
    for (index_t b = 0; b < a.basis[j].size(); ++b) {
      bool found = false;
      for (std::uint32_t k = 0; k < a.ngens() && !found; ++k) {
        if (!a.gen(k).divides(a.basis[j][b])) continue;
        long p = a.index_of(j - a.g, a.basis[j][b] / a.gen(k));
        if (p < 0) continue;
        a.tree[j][b] = {k, index_t(p)};
        found = true;
      }
      if (!found) throw std::logic_error("algebra basis element without a generator factorization");
    }
  }
  bool fine = true;
  for (std::uint32_t k = 0; k < a.ngens() && fine; ++k)
    for (std::uint32_t j = 0; j + a.g <= a.cap && fine; ++j)
      for (index_t b = 0; b < a.basis[j].size() && fine; ++b)
        for (const auto& [r, c] : a.mult[k][j].columns[b])
          if (a.weights[j + a.g][r] != a.weights[j][b] + a.gen_weight(k)) fine = false;
  a.fine = fine;
}

}  // namespace detail

/// Degreewise table of R = k[x]/I up to degree cap (cap must not exceed the ring's Groebner cap).
template <class F>
AlgebraTable<F> build_algebra_table(const QuotientRing<F>& r, std::uint32_t cap) {
  if (cap > r.cap()) throw error(errc::window_exceeded, "algebra cap above Groebner cap");
  AlgebraTable<F> a;
  a.field = r.field;
  a.g = r.g();
  a.cap = cap;
  a.var_names = r.desc.variables;
  a.polynomial = std::all_of(r.ideal.begin(), r.ideal.end(), [](const auto& p) { return p.is_zero(); });
  a.max_relation_degree = r.max_relation_degree();
  a.basis.resize(cap + 1);
  a.weights.resize(cap + 1);
  for (std::uint32_t j = 0; j <= cap; ++j) {
    a.basis[j] = standard_monomials(r.gb, j);
    for (const auto& m : a.basis[j]) a.weights[j].push_back(monomial_weight(m));
  }
  a.mult.assign(a.ngens(), std::vector<SparseMatrix<F>>(cap + 1));
  for (std::uint32_t k = 0; k < a.ngens(); ++k)
    for (std::uint32_t j = 0; j + a.g <= cap; ++j) {
      SparseMatrix<F> m(a.basis[j + a.g].size(), a.basis[j].size());
      for (index_t b = 0; b < a.basis[j].size(); ++b) {
        auto prod = r.reduce(monomial_poly(r.field, a.gen(k) * a.basis[j][b]));
        SparseVec<F> col;
        for (const auto& [mono, c] : prod.terms) col.emplace_back(index_t(a.index_of(j + a.g, mono)), c);
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        m.columns[b] = std::move(col);
      }
      a.mult[k][j] = std::move(m);
    }
  detail::finish_algebra(a);
  return a;
}

/// Product of basis element b of A_jb with a vector v of A_j, via the generator tree.
template <class F>
SparseVec<F> multiply_basis(const AlgebraTable<F>& a, std::uint32_t jb, index_t b, SparseVec<F> v, std::uint32_t j) {
  while (jb > 0) {
    auto [k, parent] = a.tree[jb][b];
    // b = x_k * parent: multiply by parent first, then x_k.
    v = multiply_basis(a, jb - a.g, parent, std::move(v), j);
    v = apply(a.field, a.mult[k][j + jb - a.g], v);
    return v;
  }
  return v;
}

/// Coordinates of a homogeneous polynomial of degree j in normal form.
template <class F>
SparseVec<F> element_vector(const AlgebraTable<F>& a, std::uint32_t j, const Polynomial<F>& p) {
  a.require(j);
  SparseVec<F> v;
  for (const auto& [m, c] : p.terms) {
    long i = a.index_of(j, m);
    if (i < 0 || m.total() * a.g != j) throw error(errc::invalid_input, "element is not a reduced form of degree " + std::to_string(j));
    v.emplace_back(index_t(i), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

/// Veronese subalgebra A^(d): pieces A_{dj}, generated by a basis of A_{d g'} with g' = g / gcd(d, g).
template <class F>
AlgebraTable<F> veronese_algebra(const AlgebraTable<F>& a, std::uint32_t d) {
  if (d < 1) throw error(errc::invalid_input, "Veronese order must be >= 1");
  if (d == 1) return a;
  AlgebraTable<F> v;
  v.field = a.field;
  v.g = a.g / std::gcd(d, a.g);
  v.cap = a.cap / d;
  if (v.cap < v.g)
    throw error(errc::window_exceeded, "Veronese of order " + std::to_string(d) + " needs algebra degree " +
                                           std::to_string(d * v.g) + ", known up to " + std::to_string(a.cap));
  v.var_names = a.var_names;
  v.polynomial = false;
  v.max_relation_degree = 0;
  for (std::uint32_t j = 0; j <= v.cap; ++j) {
    v.basis.push_back(a.basis[d * j]);
    v.weights.push_back(a.weights[d * j]);
  }
  v.mult.assign(v.ngens(), std::vector<SparseMatrix<F>>(v.cap + 1));
  for (std::uint32_t k = 0; k < v.ngens(); ++k)
    for (std::uint32_t j = 0; j + v.g <= v.cap; ++j) {
      SparseMatrix<F> m(v.basis[j + v.g].size(), v.basis[j].size());
      for (index_t b = 0; b < v.basis[j].size(); ++b)
        m.columns[b] = multiply_basis(a, d * v.g, index_t(k), unit_vector(a.field, b), d * j);
      v.mult[k][j] = std::move(m);
    }
  detail::finish_algebra(v);
  return v;
}

/// Fractional Veronese A^(1/s): the same algebra with every degree multiplied by s.
template <class F>
AlgebraTable<F> fractional_veronese(const AlgebraTable<F>& a, std::uint32_t s) {
  if (s < 1) throw error(errc::invalid_input, "regrading factor must be >= 1");
  if (s == 1) return a;
  AlgebraTable<F> r;
  r.field = a.field;
  r.g = a.g * s;
  r.cap = a.cap * s + (s - 1);
  r.var_names = a.var_names;
  r.polynomial = a.polynomial;
  r.max_relation_degree = a.max_relation_degree * s;
  r.basis.assign(r.cap + 1, {});
  r.weights.assign(r.cap + 1, {});
  for (std::uint32_t j = 0; j <= a.cap; ++j) {
    r.basis[s * j] = a.basis[j];
    r.weights[s * j] = a.weights[j];
  }
  r.mult.assign(a.ngens(), std::vector<SparseMatrix<F>>(r.cap + 1));
  for (std::uint32_t k = 0; k < a.ngens(); ++k)
    for (std::uint32_t j = 0; j + r.g <= r.cap; ++j)
      r.mult[k][j] = (j % s == 0) ? a.mult[k][j / s]
                                  : SparseMatrix<F>(r.basis[j + r.g].size(), r.basis[j].size());
  r.tree.assign(r.cap + 1, {});
  for (std::uint32_t j = 0; j <= a.cap; ++j) r.tree[s * j] = a.tree[j];
  r.fine = a.fine;
  return r;
}

/// Replaces the fine grading (e.g. by weights of images under a homomorphism) and rechecks it.
template <class F>
AlgebraTable<F> reweighted(AlgebraTable<F> a, std::vector<std::vector<std::uint64_t>> weights) {
  a.weights = std::move(weights);
  bool fine = true;
  for (std::uint32_t k = 0; k < a.ngens() && fine; ++k)
    for (std::uint32_t j = 0; j + a.g <= a.cap && fine; ++j)
      for (index_t b = 0; b < a.basis[j].size() && fine; ++b)
        for (const auto& [r, c] : a.mult[k][j].columns[b])
          if (a.weights[j + a.g][r] != a.weights[j][b] + a.gen_weight(k)) fine = false;
  a.fine = fine;
  return a;
}

}  // namespace gradedreg
