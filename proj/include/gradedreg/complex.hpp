#pragma once

// Bounded-below complexes of graded modules, chain maps, mapping cones, Koszul complexes
// and degreewise homology.

#include <map>
#include <optional>

#include "functors.hpp"

namespace gradedreg {

/// Groups basis indices by weight; a single group when weights are not in use.
inline std::map<std::uint64_t, std::vector<index_t>> weight_blocks(const std::vector<std::uint64_t>& w, bool use) {
  std::map<std::uint64_t, std::vector<index_t>> out;
  for (index_t i = 0; i < w.size(); ++i) out[use ? w[i] : 0].push_back(i);
  return out;
}

/// Representatives of ker(out) / im(in) inside a space of dimension n. Columns of `out` are images
/// of basis vectors; columns of `in` land in the space. Weight blocks are used when `use` is set.
template <class F>
std::vector<SparseVec<F>> homology_representatives(const F& field, std::size_t n, const std::vector<SparseVec<F>>& out,
                                                   const std::vector<SparseVec<F>>& in,
                                                   const std::vector<std::uint64_t>& w_mid,
                                                   const std::vector<std::uint64_t>& w_in, bool use) {
  std::vector<SparseVec<F>> reps;
  auto mid_blocks = weight_blocks(w_mid, use);
  std::map<std::uint64_t, std::vector<index_t>> in_blocks;
  if (use)
    in_blocks = weight_blocks(w_in, true);
  else
    for (index_t c = 0; c < in.size(); ++c) in_blocks[0].push_back(c);
  (void)n;
  for (const auto& [w, idx] : mid_blocks) {
    std::vector<SparseVec<F>> cols;
    cols.reserve(idx.size());
    for (auto c : idx) cols.push_back(c < out.size() ? out[c] : SparseVec<F>{});
    auto ker = kernel_of_columns(field, cols);
    for (auto& v : ker)
      for (auto& e : v) e.first = idx[e.first];
    std::vector<SparseVec<F>> bnd;
    if (auto it = in_blocks.find(w); it != in_blocks.end())
      for (auto c : it->second) bnd.push_back(in[c]);
    for (auto k : span_complement(field, bnd, ker)) reps.push_back(ker[k]);
  }
  return reps;
}

template <class F>
struct ComplexTable {
  int imin = 0;
  int hi = -1;
  bool complete_above = true;
  std::vector<ModuleTable<F>> mods;                  // mods[i - imin]
  std::vector<std::vector<SparseMatrix<F>>> diff;    // diff[i - imin][j - mods[i].lo]: C_{i,j} -> C_{i-1,j}
  AlgebraPtr<F> alg;

  int imax() const { return imin + int(mods.size()) - 1; }
  const F& field() const { return alg->field; }

  bool has(int i) const { return i >= imin && i <= imax(); }

  /// dim C_{i,j}; zero outside the index range when the complex is known to stop there.
  std::size_t dim(int i, int j) const {
    if (i < imin) return 0;
    if (i > imax()) {
      if (complete_above) return 0;
      throw error(errc::unsound_window, "index " + std::to_string(i) + " lies above the computed part of the complex");
    }
    if (j > hi) throw error(errc::unsound_window, "degree " + std::to_string(j) + " above window " + std::to_string(hi));
    return mods[i - imin].dim(j);
  }

  const SparseMatrix<F>& d(int i, int j) const {
    static const SparseMatrix<F> empty;
    if (!has(i) || j < mods[i - imin].lo) return empty;
    return diff[i - imin][j - mods[i - imin].lo];
  }

  SparseVec<F> apply_d(int i, int j, const SparseVec<F>& v) const {
    if (v.empty() || !has(i) || i == imin) return {};
    return apply(field(), d(i, j), v);
  }

  std::vector<std::uint64_t> weights(int i, int j) const {
    if (!has(i) || j < mods[i - imin].lo) return {};
    return mods[i - imin].weights[j - mods[i - imin].lo];
  }

  bool fine() const {
    return std::all_of(mods.begin(), mods.end(), [](const auto& m) { return m.fine; });
  }
};

/// Verifies that differentials respect the weights of every module; otherwise drops the weights.
template <class F>
void settle_complex_weights(ComplexTable<F>& c) {
  bool ok = c.fine();
  for (int i = c.imin + 1; i <= c.imax() && ok; ++i) {
    const auto& m = c.mods[i - c.imin];
    for (int j = m.lo; j <= c.hi && ok; ++j) {
      const auto& d = c.d(i, j);
      for (index_t b = 0; b < d.cols && ok; ++b)
        for (const auto& [r, x] : d.columns[b])
          if (c.mods[i - 1 - c.imin].weight(j, r) != m.weight(j, b)) {
            ok = false;
            break;
          }
    }
  }
  if (ok) return;
  for (auto& m : c.mods) {
    m.fine = false;
    for (auto& w : m.weights) std::fill(w.begin(), w.end(), 0);
  }
}

/// A module as a complex concentrated in index 0.
template <class F>
ComplexTable<F> complex_of(const ModuleTable<F>& m) {
  ComplexTable<F> c;
  c.alg = m.alg;
  c.imin = 0;
  c.hi = m.hi;
  c.mods = {m};
  c.diff.assign(1, std::vector<SparseMatrix<F>>(m.dims.size()));
  for (int j = m.lo; j <= m.hi; ++j) c.diff[0][j - m.lo] = SparseMatrix<F>(0, m.dim(j));
  return c;
}

template <class F>
struct HomologyResult {
  std::size_t dim = 0;
  std::vector<SparseVec<F>> representatives;
};

/// H_i(C)_j with representatives of a basis.
template <class F>
HomologyResult<F> homology(const ComplexTable<F>& c, int i, int j) {
  if (j > c.hi) throw error(errc::unsound_window, "degree " + std::to_string(j) + " above window " + std::to_string(c.hi));
  if (i + 1 > c.imax() && !c.complete_above)
    throw error(errc::unsound_window, "H_" + std::to_string(i) + " needs index " + std::to_string(i + 1) +
                                          ", which lies beyond the computed part");
  HomologyResult<F> r;
  std::size_t n = c.dim(i, j);
  if (n == 0) return r;
  std::vector<SparseVec<F>> out = c.d(i, j).columns;
  if (i == c.imin) out.assign(n, {});
  std::vector<SparseVec<F>> in;
  if (c.has(i + 1)) in = c.d(i + 1, j).columns;
  bool use = c.fine();
  r.representatives = homology_representatives(c.field(), n, out, in, c.weights(i, j), c.weights(i + 1, j), use);
  r.dim = r.representatives.size();
  return r;
}

/// Least index with nonzero homology in the window, if any.
template <class F>
std::optional<int> inf_index(const ComplexTable<F>& c) {
  for (int i = c.imin; i <= c.imax(); ++i) {
    if (i + 1 > c.imax() && !c.complete_above) break;
    for (int j = c.mods[i - c.imin].lo; j <= c.hi; ++j)
      if (homology(c, i, j).dim) return i;
  }
  return std::nullopt;
}

/// H_i(C) as a graded module (subquotient of C_i).
template <class F>
ModuleTable<F> homology_module(const ComplexTable<F>& c, int i) {
  if (!c.has(i)) return zero_module(c.alg, c.hi);
  if (i + 1 > c.imax() && !c.complete_above)
    throw error(errc::unsound_window, "H_" + std::to_string(i) + " needs index " + std::to_string(i + 1));
  const auto& m = c.mods[i - c.imin];
  DegreewiseSpan<F> z, b;
  z.lo = b.lo = m.lo;
  for (int j = m.lo; j <= c.hi; ++j) {
    std::vector<SparseVec<F>> out = c.d(i, j).columns;
    if (i == c.imin) out.assign(m.dim(j), {});
    z.vecs.push_back(kernel_of_columns(c.field(), out));
    std::vector<SparseVec<F>> in;
    if (c.has(i + 1))
      for (const auto& v : c.d(i + 1, j).columns)
        if (!v.empty()) in.push_back(v);
    b.vecs.push_back(std::move(in));
  }
  return subquotient(truncate_window(m, c.hi), z, b);
}

/// Degree-shifting chain map X -> Y: maps[i - X.imin][j - X_i.lo] : X_{i,j} -> Y_{i,j+shift}.
template <class F>
struct ChainMap {
  const ComplexTable<F>* source = nullptr;
  const ComplexTable<F>* target = nullptr;
  int shift = 0;
  std::vector<std::vector<SparseMatrix<F>>> maps;
  std::uint64_t weight_shift = 0;  // added to the weights of the source inside the cone

  SparseVec<F> apply_at(int i, int j, const SparseVec<F>& v) const {
    if (v.empty() || !source->has(i) || !target->has(i)) return {};
    const auto& m = source->mods[i - source->imin];
    if (j < m.lo) return {};
    return apply(source->field(), maps[i - source->imin][j - m.lo], v);
  }
};

/// Multiplication by an algebra element a of degree w, as a chain map C -> C with shift w.
template <class F>
ChainMap<F> multiplication_map(const ComplexTable<F>& c, std::uint32_t w, const SparseVec<F>& a) {
  ChainMap<F> f{&c, &c, int(w), {}, 0};
  if (!a.empty()) f.weight_shift = c.alg->weights[w][a.front().first];
  for (int i = c.imin; i <= c.imax(); ++i) {
    const auto& m = c.mods[i - c.imin];
    std::vector<SparseMatrix<F>> per;
    for (int j = m.lo; j <= c.hi; ++j)
      per.push_back(j + int(w) <= c.hi ? m.element_matrix(w, a, j) : SparseMatrix<F>());
    f.maps.push_back(std::move(per));
  }
  return f;
}

/// Cone_i = X(-s)_{i-1} + Y_i with d(x, y) = (-dx, f(x) + dy).
template <class F>
ComplexTable<F> mapping_cone(const ChainMap<F>& f) {
  const auto& X = *f.source;
  const auto& Y = *f.target;
  const int s = f.shift;
  const F& field = Y.field();
  ComplexTable<F> c;
  c.alg = Y.alg;
  c.hi = std::min(X.hi + s, Y.hi);
  c.imin = std::min(X.imin + 1, Y.imin);
  int top;
  if (X.complete_above && Y.complete_above) {
    top = std::max(X.imax() + 1, Y.imax());
    c.complete_above = true;
  } else {
    top = INT32_MAX;
    if (!X.complete_above) top = std::min(top, X.imax() + 1);
    if (!Y.complete_above) top = std::min(top, Y.imax());
    c.complete_above = false;
  }
  auto xmod = [&](int i) {
    if (!X.has(i)) return zero_module(c.alg, c.hi);
    auto m = truncate_window(twist(X.mods[i - X.imin], s), c.hi);
    for (auto& w : m.weights)
      for (auto& x : w) x += f.weight_shift;
    return m;
  };
  auto ymod = [&](int i) { return Y.has(i) ? truncate_window(Y.mods[i - Y.imin], c.hi) : zero_module(c.alg, c.hi); };
  for (int i = c.imin; i <= top; ++i) c.mods.push_back(direct_sum<F>({xmod(i - 1), ymod(i)}, c.alg));
  for (int i = c.imin; i <= top; ++i) {
    const auto& m = c.mods[i - c.imin];
    std::vector<SparseMatrix<F>> per;
    for (int j = m.lo; j <= c.hi; ++j) {
      std::size_t nx = X.has(i - 1) ? X.dim(i - 1, j - s) : 0;
      std::size_t ny = Y.has(i) ? Y.dim(i, j) : 0;
      std::size_t tx = (i > c.imin && X.has(i - 2)) ? X.dim(i - 2, j - s) : 0;
      std::size_t rows = i > c.imin ? c.mods[i - 1 - c.imin].dim(j) : 0;
      SparseMatrix<F> dm(rows, nx + ny);
      if (i > c.imin) {
        for (index_t b = 0; b < nx; ++b) {
          SparseVec<F> col;
          auto dx = X.apply_d(i - 1, j - s, unit_vector(field, b));
          scale(field, dx, field.neg(field.one()));
          append_shifted<F>(col, dx, 0);
          append_shifted<F>(col, f.apply_at(i - 1, j - s, unit_vector(field, b)), index_t(tx));
          dm.columns[b] = std::move(col);
        }
        for (index_t b = 0; b < ny; ++b) {
          SparseVec<F> col;
          append_shifted<F>(col, Y.apply_d(i, j, unit_vector(field, b)), index_t(tx));
          dm.columns[nx + b] = std::move(col);
        }
      }
      per.push_back(std::move(dm));
    }
    c.diff.push_back(std::move(per));
  }
  settle_complex_weights(c);
  return c;
}

/// (C[n])_i = C_{i+n}, differentials multiplied by (-1)^n.
template <class F>
ComplexTable<F> shift(ComplexTable<F> c, int n) {
  c.imin -= n;
  if (n % 2)
    for (auto& per : c.diff)
      for (auto& m : per) m = scaled(c.field(), std::move(m), c.field().neg(c.field().one()));
  return c;
}

/// Koszul complex K[e_1..e_n; C] as iterated cones of multiplication maps, in input order.
/// Elements are (degree, vector in the algebra's basis of that degree); all degrees must agree.
template <class F>
ComplexTable<F> koszul_complex(const std::vector<std::pair<std::uint32_t, SparseVec<F>>>& elements, ComplexTable<F> base) {
  for (const auto& e : elements)
    if (e.first != elements.front().first)
      throw error(errc::mixed_degrees, "Koszul elements have degrees " + std::to_string(elements.front().first) +
                                           " and " + std::to_string(e.first));
  for (const auto& [w, a] : elements) {
    auto f = multiplication_map(base, w, a);
    base = mapping_cone(f);
  }
  return base;
}

}  // namespace gradedreg
