#pragma once

// Graded modules presented degreewise over an AlgebraTable.
//
// A ModuleTable knows M_j for lo <= j <= hi; M_j = 0 below lo and is unknown above hi.
// act[k][j - lo] is the action of the k-th algebra generator, M_j -> M_{j+g}.

#include "algebra.hpp"

namespace gradedreg {

template <class F>
struct ModuleTable {
  AlgebraPtr<F> alg;
  int lo = 0;
  int hi = -1;
  std::vector<std::size_t> dims;                      // dims[j - lo]
  std::vector<std::vector<std::uint64_t>> weights;    // weights[j - lo][b]
  bool fine = false;
  std::vector<std::vector<SparseMatrix<F>>> act;      // act[k][j - lo], defined for j + g <= hi
  std::vector<std::vector<std::string>> labels;       // optional, labels[j - lo][b]

  const F& field() const { return alg->field; }
  int g() const { return int(alg->g); }

  std::size_t dim(int j) const {
    if (j > hi) throw error(errc::window_exceeded, "module known up to degree " + std::to_string(hi) + ", degree " +
                                                       std::to_string(j) + " requested");
    return j < lo ? 0 : dims[j - lo];
  }

  std::uint64_t weight(int j, index_t b) const { return weights[j - lo][b]; }

  std::string label(int j, index_t b) const {
    if (j >= lo && j - lo < int(labels.size()) && b < labels[j - lo].size()) return labels[j - lo][b];
    return "e" + std::to_string(j) + "_" + std::to_string(b);
  }

  bool is_zero_in_window() const {
    return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
  }

  /// x_k * v for v in M_j.
  SparseVec<F> act_gen(std::uint32_t k, int j, const SparseVec<F>& v) const {
    if (v.empty() || j < lo) return {};
    dim(j + g());
    return apply(field(), act[k][j - lo], v);
  }

  /// b * v for algebra basis element b of A_jb and v in M_j.
  SparseVec<F> act_basis(std::uint32_t jb, index_t b, SparseVec<F> v, int j) const {
    if (jb == 0) return v;
    auto [k, parent] = alg->tree[jb][b];
    v = act_basis(jb - alg->g, parent, std::move(v), j);
    return act_gen(k, j + int(jb) - g(), v);
  }

  /// a * v for an algebra element a of A_ja given in the basis of A_ja.
  SparseVec<F> act_element(std::uint32_t ja, const SparseVec<F>& a, const SparseVec<F>& v, int j) const {
    SparseVec<F> out;
    for (const auto& [b, c] : a) axpy(field(), out, c, act_basis(ja, b, v, j));
    return out;
  }

  SparseMatrix<F> element_matrix(std::uint32_t ja, const SparseVec<F>& a, int j) const {
    SparseMatrix<F> m(dim(j + int(ja)), dim(j));
    for (index_t b = 0; b < m.cols; ++b) m.columns[b] = act_element(ja, a, unit_vector(field(), b), j);
    return m;
  }

  /// Checks that actions respect the weights; sets fine accordingly (zeroing weights on failure).
  void settle_weights() {
    fine = alg->fine;
    for (std::uint32_t k = 0; k < act.size() && fine; ++k)
      for (int j = lo; j + g() <= hi && fine; ++j)
        for (index_t b = 0; b < dims[j - lo] && fine; ++b)
          for (const auto& [r, c] : act[k][j - lo].columns[b])
            if (weight(j + g(), r) != weight(j, b) + alg->gen_weight(k)) {
              fine = false;
              break;
            }
    if (!fine)
      for (auto& w : weights) std::fill(w.begin(), w.end(), 0);
  }

  /// Allocates empty storage for the window [lo, hi].
  void allocate(int new_lo, int new_hi) {
    lo = new_lo;
    hi = new_hi;
    std::size_t n = hi >= lo ? std::size_t(hi - lo + 1) : 0;
    dims.assign(n, 0);
    weights.assign(n, {});
    act.assign(alg->ngens(), std::vector<SparseMatrix<F>>(n));
  }
};

/// A(-t_1) + ... + A(-t_r), known up to degree hi. Generator weights default to zero.
template <class F>
ModuleTable<F> free_module(AlgebraPtr<F> alg, const std::vector<int>& twists, int hi,
                           const std::vector<std::uint64_t>& gen_weights = {}) {
  ModuleTable<F> m;
  m.alg = alg;
  int lo = twists.empty() ? hi + 1 : *std::min_element(twists.begin(), twists.end());
  if (!twists.empty() && hi - lo > int(alg->cap))
    throw error(errc::window_exceeded, "free module up to degree " + std::to_string(hi) + " needs algebra degree " +
                                           std::to_string(hi - lo) + ", known up to " + std::to_string(alg->cap));
  m.allocate(std::min(lo, hi + 1), hi);
  m.labels.assign(m.dims.size(), {});
  const int g = int(alg->g);
  for (int j = m.lo; j <= hi; ++j) {
    for (std::size_t s = 0; s < twists.size(); ++s) {
      int d = j - twists[s];
      if (d < 0) continue;
      for (index_t b = 0; b < alg->basis[d].size(); ++b) {
        m.weights[j - m.lo].push_back(alg->weights[d][b] + (gen_weights.empty() ? 0 : gen_weights[s]));
        m.labels[j - m.lo].push_back(alg->label(d, b) + "*e" + std::to_string(s));
      }
      m.dims[j - m.lo] += alg->basis[d].size();
    }
  }
  for (std::uint32_t k = 0; k < alg->ngens(); ++k)
    for (int j = m.lo; j + g <= hi; ++j) {
      SparseMatrix<F> a(m.dim(j + g), m.dim(j));
      index_t src = 0, dst = 0;
      for (std::size_t s = 0; s < twists.size(); ++s) {
        int d = j - twists[s];
        std::size_t nsrc = d >= 0 ? alg->basis[d].size() : 0;
        std::size_t ndst = d + g >= 0 ? alg->basis[d + g].size() : 0;
        for (index_t b = 0; b < nsrc; ++b) {
          SparseVec<F> col;
          append_shifted<F>(col, alg->mult[k][d].columns[b], dst);
          a.columns[src + b] = std::move(col);
        }
        src += index_t(nsrc);
        dst += index_t(ndst);
      }
      m.act[k][j - m.lo] = std::move(a);
    }
  m.settle_weights();
  return m;
}

/// Offset of generator s's block inside F_j for a free module with the given twists.
template <class F>
index_t free_offset(const AlgebraTable<F>& alg, const std::vector<int>& twists, std::size_t s, int j) {
  index_t off = 0;
  for (std::size_t t = 0; t < s; ++t)
    if (j - twists[t] >= 0) off += index_t(alg.basis[j - twists[t]].size());
  return off;
}

/// The residue field k = A / A_+, concentrated in degree 0.
template <class F>
ModuleTable<F> residue_field(AlgebraPtr<F> alg, int hi) {
  ModuleTable<F> m;
  m.alg = alg;
  m.allocate(0, hi);
  if (hi >= 0) {
    m.dims[0] = 1;
    m.weights[0] = {0};
  }
  for (std::uint32_t k = 0; k < alg->ngens(); ++k)
    for (int j = 0; j + m.g() <= hi; ++j) m.act[k][j] = SparseMatrix<F>(m.dim(j + m.g()), m.dim(j));
  m.labels.assign(m.dims.size(), {});
  if (hi >= 0) m.labels[0] = {"1"};
  m.settle_weights();
  return m;
}

template <class F>
ModuleTable<F> zero_module(AlgebraPtr<F> alg, int hi) {
  return free_module(alg, {}, hi);
}

/// M(-t): M(-t)_j = M_{j-t}. The window moves with the module, so this never fails.
template <class F>
ModuleTable<F> twist(ModuleTable<F> m, int t) {
  m.lo += t;
  m.hi += t;
  return m;
}

/// Restricts the known window to degrees <= hi.
template <class F>
ModuleTable<F> truncate_window(ModuleTable<F> m, int hi) {
  if (hi >= m.hi) return m;
  int n = std::max(0, hi - m.lo + 1);
  m.dims.resize(n);
  m.weights.resize(n);
  if (m.labels.size() > std::size_t(n)) m.labels.resize(n);
  for (auto& a : m.act) a.resize(n);
  for (auto& a : m.act)
    for (int j = m.lo; j <= hi; ++j)
      if (j + m.g() > hi) a[j - m.lo] = SparseMatrix<F>();
  m.hi = hi;
  return m;
}

/// Direct sum; basis of each degree ordered by (summand, inner index).
template <class F>
ModuleTable<F> direct_sum(const std::vector<ModuleTable<F>>& parts, AlgebraPtr<F> alg = nullptr) {
  ModuleTable<F> m;
  m.alg = alg ? alg : parts.at(0).alg;
  int lo = INT32_MAX, hi = INT32_MAX;
  for (const auto& p : parts) {
    lo = std::min(lo, p.lo);
    hi = std::min(hi, p.hi);
  }
  if (parts.empty()) lo = 0, hi = -1;
  m.allocate(std::min(lo, hi + 1), hi);
  m.labels.assign(m.dims.size(), {});
  const int g = m.g();
  for (int j = m.lo; j <= hi; ++j)
    for (std::size_t s = 0; s < parts.size(); ++s) {
      const auto& p = parts[s];
      m.dims[j - m.lo] += p.dim(j);
      for (index_t b = 0; b < p.dim(j); ++b) {
        m.weights[j - m.lo].push_back(p.weight(j, b));
        m.labels[j - m.lo].push_back(std::to_string(s) + ":" + p.label(j, b));
      }
    }
  for (std::uint32_t k = 0; k < m.alg->ngens(); ++k)
    for (int j = m.lo; j + g <= hi; ++j) {
      SparseMatrix<F> a(m.dim(j + g), m.dim(j));
      index_t src = 0, dst = 0;
      for (const auto& p : parts) {
        for (index_t b = 0; b < p.dim(j); ++b) {
          SparseVec<F> col;
          append_shifted<F>(col, p.act_gen(k, j, unit_vector(m.field(), b)), dst);
          a.columns[src + b] = std::move(col);
        }
        src += index_t(p.dim(j));
        dst += index_t(p.dim(j + g));
      }
      m.act[k][j - m.lo] = std::move(a);
    }
  m.settle_weights();
  return m;
}

/// Degreewise subspaces of a module, given by spanning vectors per degree.
template <class F>
struct DegreewiseSpan {
  int lo = 0;
  std::vector<std::vector<SparseVec<F>>> vecs;  // vecs[j - lo]
};

/// Submodule of m generated by the given homogeneous elements (degree, vector); spanning sets per degree.
template <class F>
DegreewiseSpan<F> generated_submodule(const ModuleTable<F>& m, const std::vector<std::pair<int, SparseVec<F>>>& gens) {
  DegreewiseSpan<F> s;
  s.lo = m.lo;
  s.vecs.assign(m.dims.size(), {});
  const int g = m.g();
  for (int j = m.lo; j <= m.hi; ++j) {
    EchelonBasis<F> eb(m.field());
    auto& out = s.vecs[j - m.lo];
    auto push = [&](SparseVec<F> v) {
      if (eb.insert(v)) out.push_back(std::move(v));
    };
    if (j - g >= m.lo)
      for (const auto& v : s.vecs[j - g - m.lo])
        for (std::uint32_t k = 0; k < m.alg->ngens(); ++k) push(m.act_gen(k, j - g, v));
    for (const auto& [d, v] : gens)
      if (d == j) push(v);
  }
  return s;
}

/// Subquotient Z / B where Z and B are submodules given degreewise with B inside Z.
/// Basis of the result: the classes of Z-basis vectors not eliminated by B (greedy rule).
template <class F>
ModuleTable<F> subquotient(const ModuleTable<F>& m, const DegreewiseSpan<F>& z, const DegreewiseSpan<F>& b) {
  const F& field = m.field();
  ModuleTable<F> q;
  q.alg = m.alg;
  q.allocate(m.lo, m.hi);
  const int g = m.g();
  std::vector<std::unique_ptr<CoordinateSystem<F>>> zc(q.dims.size());
  std::vector<std::unique_ptr<EchelonBasis<F>>> bz(q.dims.size());  // B in Z coordinates
  std::vector<std::vector<index_t>> kept(q.dims.size());            // Z coordinates that survive
  std::vector<std::vector<int>> position(q.dims.size());
  for (int j = m.lo; j <= m.hi; ++j) {
    std::size_t t = j - m.lo;
    const auto& zv = z.vecs[t];
    zc[t] = std::make_unique<CoordinateSystem<F>>(field, zv);
    bz[t] = std::make_unique<EchelonBasis<F>>(field);
    if (std::size_t(j - b.lo) < b.vecs.size())
      for (const auto& v : b.vecs[j - b.lo]) {
        auto c = zc[t]->express(v);
        if (!c) throw std::logic_error("subquotient: boundary outside cycles");
        bz[t]->insert(*c);
      }
    position[t].assign(zv.size(), -1);
    for (index_t c = 0; c < zv.size(); ++c) {
      if (!bz[t]->insert(unit_vector(field, c))) continue;
      position[t][c] = int(kept[t].size());
      kept[t].push_back(c);
    }
    // Rebuild B-only echelon basis (the unit vectors were inserted for the greedy test).
    bz[t] = std::make_unique<EchelonBasis<F>>(field);
    if (std::size_t(j - b.lo) < b.vecs.size())
      for (const auto& v : b.vecs[j - b.lo]) bz[t]->insert(*zc[t]->express(v));
    q.dims[t] = kept[t].size();
    for (auto c : kept[t]) {
      const auto& v = zv[c];
      q.weights[t].push_back(v.empty() ? 0 : m.weight(j, v.back().first));
    }
  }
  for (std::uint32_t k = 0; k < m.alg->ngens(); ++k)
    for (int j = m.lo; j + g <= m.hi; ++j) {
      std::size_t t = j - m.lo, u = j + g - m.lo;
      SparseMatrix<F> a(q.dims[u], q.dims[t]);
      for (index_t c = 0; c < q.dims[t]; ++c) {
        auto image = m.act_gen(k, j, z.vecs[t][kept[t][c]]);
        auto coords = zc[u]->express(image);
        if (!coords) throw std::logic_error("subquotient: Z not closed under the action");
        bz[u]->reduce(*coords);
        SparseVec<F> col;
        for (const auto& [i, x] : *coords) {
          assert(position[u][i] >= 0);
          col.emplace_back(index_t(position[u][i]), x);
        }
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        a.columns[c] = std::move(col);
      }
      q.act[k][t] = std::move(a);
    }
  q.settle_weights();
  return q;
}

/// m / (submodule generated by gens).
template <class F>
ModuleTable<F> quotient_module(const ModuleTable<F>& m, const std::vector<std::pair<int, SparseVec<F>>>& gens) {
  DegreewiseSpan<F> all;
  all.lo = m.lo;
  for (int j = m.lo; j <= m.hi; ++j) {
    std::vector<SparseVec<F>> units;
    for (index_t b = 0; b < m.dim(j); ++b) units.push_back(unit_vector(m.field(), b));
    all.vecs.push_back(std::move(units));
  }
  auto sub = generated_submodule(m, gens);
  auto q = subquotient(m, all, sub);
  q.labels.assign(q.dims.size(), {});
  for (int j = q.lo; j <= q.hi; ++j) {
    // Surviving basis vectors are unit vectors of m; keep their labels.
    EchelonBasis<F> eb(m.field());
    for (const auto& v : sub.vecs[j - m.lo]) eb.insert(v);
    for (index_t b = 0; b < m.dim(j); ++b)
      if (eb.insert(unit_vector(m.field(), b))) q.labels[j - q.lo].push_back(m.label(j, b));
  }
  return q;
}

/// Submodule generated by gens, as a module in its own right.
template <class F>
ModuleTable<F> submodule(const ModuleTable<F>& m, const std::vector<std::pair<int, SparseVec<F>>>& gens) {
  return subquotient(m, generated_submodule(m, gens), DegreewiseSpan<F>{m.lo, {}});
}

/// Cokernel of a map of free modules: generators in degrees `twists`, relations as
/// (degree, vector in F_degree) pairs.
template <class F>
ModuleTable<F> cokernel(AlgebraPtr<F> alg, const std::vector<int>& twists,
                        const std::vector<std::pair<int, SparseVec<F>>>& relations, int hi) {
  auto f = free_module(alg, twists, hi);
  return quotient_module(f, relations);
}

/// A / (rels), generated in degree 0; relations are polynomial strings in the ring's variables.
template <class F>
ModuleTable<F> cyclic_module(AlgebraPtr<F> alg, const QuotientRing<F>& r, const std::vector<std::string>& rels, int hi) {
  std::vector<std::pair<int, SparseVec<F>>> vecs;
  for (std::size_t k = 0; k < rels.size(); ++k) {
    auto p = r.parse(rels[k]);
    if (!p.is_homogeneous())
      throw error(errc::non_homogeneous_input, "relation " + std::to_string(k) + " (\"" + rels[k] + "\") is not homogeneous");
    p = r.reduce(p);
    if (p.is_zero()) continue;
    std::uint32_t j = r.degree_of(p);
    if (int(j) <= hi) vecs.emplace_back(int(j), element_vector(*alg, j, p));
  }
  return cokernel(alg, {0}, vecs, hi);
}

/// Equality of dimensions and action matrices on the common window.
template <class F>
bool same_table(const ModuleTable<F>& a, const ModuleTable<F>& b) {
  int hi = std::min(a.hi, b.hi);
  for (int j = std::min(a.lo, b.lo); j <= hi; ++j)
    if (a.dim(j) != b.dim(j)) return false;
  for (std::uint32_t k = 0; k < a.alg->ngens(); ++k)
    for (int j = std::max(a.lo, b.lo); j + a.g() <= hi; ++j)
      if (!(a.act[k][j - a.lo] == b.act[k][j - b.lo])) return false;
  return true;
}

}  // namespace gradedreg
