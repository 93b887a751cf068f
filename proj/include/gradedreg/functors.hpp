#pragma once

// Functors between module categories: Veronese pieces, fractional Veronese regrading,
// the functor Phi, and restriction of scalars along an algebra map.

#include "module.hpp"

namespace gradedreg {

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline int ceil_div(int a, int b) { return -floor_div(-a, b); }

/// Degree-preserving algebra map B -> A given by images of the generators of B (vectors in A_{B.g}).
template <class F>
struct TableHom {
  AlgebraPtr<F> source;
  AlgebraPtr<F> target;
  std::vector<SparseVec<F>> images;
};

/// Image under h of basis element b of source degree j, via the generator tree.
template <class F>
SparseVec<F> map_basis(const TableHom<F>& h, std::uint32_t j, index_t b) {
  const auto& src = *h.source;
  const auto& tgt = *h.target;
  if (j == 0) return unit_vector(tgt.field, 0);
  auto [k, parent] = src.tree[j][b];
  auto v = map_basis(h, j - src.g, parent);
  SparseVec<F> out;
  for (const auto& [x, c] : h.images[k]) axpy(tgt.field, out, c, multiply_basis(tgt, src.g, x, v, j - src.g));
  return out;
}

template <class F>
SparseVec<F> map_element(const TableHom<F>& h, std::uint32_t j, const SparseVec<F>& a) {
  SparseVec<F> out;
  for (const auto& [b, c] : a) axpy(h.target->field, out, c, map_basis(h, j, b));
  return out;
}

/// P_u = M_{d u + i} as a module over B, where generator k of B acts on M by the element
/// images[k] of degree e in M's algebra (e = d * B.g).
template <class F>
ModuleTable<F> piece_module(const ModuleTable<F>& m, AlgebraPtr<F> b, int d, int i, std::uint32_t e,
                            const std::vector<SparseVec<F>>& images) {
  if (i < 0 || i >= d)
    throw error(errc::bad_piece_index, "piece index " + std::to_string(i) + " outside 0.." + std::to_string(d - 1));
  ModuleTable<F> p;
  p.alg = b;
  p.allocate(ceil_div(m.lo - i, d), floor_div(m.hi - i, d));
  p.labels.assign(p.dims.size(), {});
  for (int u = p.lo; u <= p.hi; ++u) {
    int j = d * u + i;
    p.dims[u - p.lo] = m.dim(j);
    for (index_t c = 0; c < m.dim(j); ++c) {
      p.weights[u - p.lo].push_back(m.weight(j, c));
      p.labels[u - p.lo].push_back(m.label(j, c));
    }
  }
  const int gb = int(b->g);
  for (std::uint32_t k = 0; k < b->ngens(); ++k)
    for (int u = p.lo; u + gb <= p.hi; ++u) p.act[k][u - p.lo] = m.element_matrix(e, images[k], d * u + i);
  p.settle_weights();
  return p;
}

/// V_i(d, M) = (M_{du+i})_u as a module over the Veronese algebra A^(d).
template <class F>
ModuleTable<F> veronese_piece(const ModuleTable<F>& m, AlgebraPtr<F> veronese, int d, int i) {
  std::uint32_t e = std::uint32_t(d) * veronese->g;
  std::vector<SparseVec<F>> units;
  for (index_t k = 0; k < veronese->ngens(); ++k) units.push_back(unit_vector(m.field(), k));
  return piece_module(m, veronese, d, i, e, units);
}

/// M^(1/s) over A^(1/s): M placed in degrees divisible by s, same matrices.
template <class F>
ModuleTable<F> fractional_veronese(const ModuleTable<F>& m, AlgebraPtr<F> regraded, int s) {
  if (s < 1) throw error(errc::invalid_input, "regrading factor must be >= 1");
  ModuleTable<F> r;
  r.alg = regraded;
  r.allocate(s * m.lo, s * m.hi + s - 1);
  r.labels.assign(r.dims.size(), {});
  for (int j = m.lo; j <= m.hi; ++j) {
    r.dims[s * j - r.lo] = m.dim(j);
    r.weights[s * j - r.lo] = m.weights[j - m.lo];
    if (std::size_t(j - m.lo) < m.labels.size()) r.labels[s * j - r.lo] = m.labels[j - m.lo];
  }
  const int g = r.g();
  for (std::uint32_t k = 0; k < regraded->ngens(); ++k)
    for (int j = r.lo; j + g <= r.hi; ++j)
      r.act[k][j - r.lo] = (j % s == 0) ? m.act[k][j / s - m.lo] : SparseMatrix<F>(r.dim(j + g), r.dim(j));
  r.fine = m.fine && regraded->fine;
  if (!r.fine)
    for (auto& w : r.weights) std::fill(w.begin(), w.end(), 0);
  return r;
}

/// The i-th summand of Phi(N): degree j piece N_{dj+i}, as a module over A (N lives over A^(1/d)).
template <class F>
ModuleTable<F> phi_piece(const ModuleTable<F>& n, AlgebraPtr<F> a, int d, int i) {
  std::vector<SparseVec<F>> units;
  for (index_t k = 0; k < a->ngens(); ++k) units.push_back(unit_vector(n.field(), k));
  return piece_module(n, a, d, i, n.alg->g, units);
}

/// Phi(N)_j = N_{dj} + ... + N_{dj+d-1}, summands ordered by i.
template <class F>
ModuleTable<F> phi_functor(const ModuleTable<F>& n, AlgebraPtr<F> a, int d) {
  std::vector<ModuleTable<F>> parts;
  for (int i = 0; i < d; ++i) parts.push_back(phi_piece(n, a, d, i));
  return direct_sum(parts, a);
}

/// Restriction of scalars along h: source -> M.alg.
template <class F>
ModuleTable<F> restrict_scalars(const ModuleTable<F>& m, const TableHom<F>& h) {
  ModuleTable<F> r;
  r.alg = h.source;
  r.allocate(m.lo, m.hi);
  r.dims = m.dims;
  r.weights = m.weights;
  r.labels = m.labels;
  const int g = r.g();
  for (std::uint32_t k = 0; k < h.source->ngens(); ++k)
    for (int j = r.lo; j + g <= r.hi; ++j) r.act[k][j - r.lo] = m.element_matrix(std::uint32_t(g), h.images[k], j);
  r.settle_weights();
  return r;
}

}  // namespace gradedreg
