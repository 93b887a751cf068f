#pragma once

// Derived tensor products: a resolution tensored degreewise with a complex, and Tor tables.

#include "functors.hpp"
#include "resolve.hpp"

namespace gradedreg {

/// G (x)_A N for a free resolution G and a complex N over the same algebra.
/// Index t collects G_p (x) N_q with p + q = t; d(e (x) y) = d(e) (x) y + (-1)^p e (x) dy.
/// With `along`, N lives over another algebra B and A acts on it through along: A -> B;
/// the result is then a complex over B.
template <class F>
ComplexTable<F> tensor_with(const ResolutionWindow<F>& G, const ComplexTable<F>& N, const TableHom<F>* along = nullptr) {
  const F& field = N.field();
  auto empty = G.first_empty();
  int gtop = empty ? *empty - 1 : G.i_max;
  int gmin_deg = G.j_max + 1, nlo = N.hi + 1;
  for (int p = G.imin; p <= gtop; ++p)
    for (const auto& e : G.at(p)) gmin_deg = std::min(gmin_deg, e.degree);
  for (const auto& m : N.mods) nlo = std::min(nlo, m.lo);
  if (gmin_deg > G.j_max) gmin_deg = 0;

  ComplexTable<F> T;
  T.alg = N.alg;
  T.hi = std::min(N.hi + gmin_deg, G.j_max + nlo);
  T.imin = G.imin + N.imin;
  int top = gtop + N.imax();
  T.complete_above = empty.has_value() && N.complete_above;
  if (!empty) top = std::min(top, G.i_max + N.imin);
  if (!N.complete_above) top = std::min(top, N.imax() + G.imin);

  struct Block {
    int p, q;
    std::size_t e;
    int deg;
  };
  auto blocks_of = [&](int t) {
    std::vector<Block> out;
    for (int p = G.imin; p <= gtop; ++p) {
      int q = t - p;
      if (q < N.imin || q > N.imax()) continue;
      for (std::size_t e = 0; e < G.at(p).size(); ++e) out.push_back({p, q, e, G.at(p)[e].degree});
    }
    return out;
  };
  auto block_dim = [&](const Block& b, int j) { return N.mods[b.q - N.imin].dim(j - b.deg); };

  for (int t = T.imin; t <= top; ++t) {
    std::vector<ModuleTable<F>> parts;
    for (const auto& b : blocks_of(t)) {
      auto part = truncate_window(twist(N.mods[b.q - N.imin], b.deg), T.hi);
      for (auto& w : part.weights)
        for (auto& x : w) x += G.at(b.p)[b.e].weight;
      parts.push_back(std::move(part));
    }
    T.mods.push_back(parts.empty() ? zero_module(T.alg, T.hi) : direct_sum(parts, T.alg));
  }
  for (int t = T.imin; t <= top; ++t) {
    const auto& m = T.mods[t - T.imin];
    auto src = blocks_of(t);
    auto dst = blocks_of(t - 1);
    std::vector<SparseMatrix<F>> per;
    for (int j = m.lo; j <= T.hi; ++j) {
      std::size_t rows = t > T.imin ? T.mods[t - 1 - T.imin].dim(j) : 0;
      SparseMatrix<F> dm(rows, m.dim(j));
      if (t > T.imin) {
        // Offsets of target blocks at degree j.
        std::map<std::tuple<int, int, std::size_t>, index_t> off;
        index_t run = 0;
        for (const auto& b : dst) {
          off[{b.p, b.q, b.e}] = run;
          run += index_t(block_dim(b, j));
        }
        index_t col = 0;
        for (const auto& b : src) {
          const auto& Nq = N.mods[b.q - N.imin];
          int jy = j - b.deg;
          const auto& gen = G.at(b.p)[b.e];
          // Split d(e) into algebra coefficients per generator of G_{p-1}.
          std::vector<std::pair<std::size_t, SparseVec<F>>> coeffs;
          if (b.p > G.imin) {
            const auto& lower = G.at(b.p - 1);
            index_t start = 0;
            auto it = gen.d.begin();
            for (std::size_t s = 0; s < lower.size(); ++s) {
              int da = gen.degree - lower[s].degree;
              if (da < 0) continue;
              index_t len = index_t(G.alg->basis[da].size());
              SparseVec<F> a;
              while (it != gen.d.end() && it->first < start + len) {
                a.emplace_back(it->first - start, it->second);
                ++it;
              }
              if (!a.empty()) coeffs.emplace_back(s, std::move(a));
              start += len;
            }
          }
          for (index_t y = 0; y < Nq.dim(jy); ++y, ++col) {
            SparseVec<F> out;
            auto ey = unit_vector(field, y);
            for (const auto& [s, a] : coeffs) {
              int da = gen.degree - G.at(b.p - 1)[s].degree;
              auto v = Nq.act_element(std::uint32_t(da), along ? map_element(*along, std::uint32_t(da), a) : a, ey, jy);
              SparseVec<F> shifted;
              append_shifted<F>(shifted, v, off.at({b.p - 1, b.q, s}));
              axpy(field, out, field.one(), shifted);
            }
            if (b.q > N.imin) {
              auto dy = N.apply_d(b.q, jy, ey);
              if (b.p % 2) scale(field, dy, field.neg(field.one()));
              SparseVec<F> shifted;
              append_shifted<F>(shifted, dy, off.at({b.p, b.q - 1, b.e}));
              axpy(field, out, field.one(), shifted);
            }
            dm.columns[col] = std::move(out);
          }
        }
      }
      per.push_back(std::move(dm));
    }
    T.diff.push_back(std::move(per));
  }
  settle_complex_weights(T);
  return T;
}

/// M (x)^L N: resolve the first argument minimally and tensor with the second.
template <class F>
ComplexTable<F> derived_tensor(const ComplexTable<F>& m, const ComplexTable<F>& n, int i_max, int j_max) {
  return tensor_with(minimal_free_resolution(m, i_max, j_max), n);
}

/// dim Tor_i(k, C)_j for i <= i_max, j <= j_max, through a resolution of k tensored with C.
template <class F>
BettiTable tor_table(const ComplexTable<F>& c, int i_max, int j_max) {
  int clo = j_max + 1;
  for (const auto& m : c.mods) clo = std::min(clo, m.lo);
  if (clo > j_max) return BettiTable{c.imin, i_max, j_max, {}};
  auto k = residue_field(c.alg, j_max - clo);
  auto G = minimal_free_resolution(complex_of(k), i_max + 1 - c.imin, j_max - clo);
  auto T = tensor_with(G, c);
  BettiTable b{c.imin, i_max, j_max, {}};
  for (int t = T.imin; t <= std::min(i_max, T.imax()); ++t)
    for (int j = clo; j <= std::min(j_max, T.hi); ++j) b.add(t, j, homology(T, t, j).dim);
  return b;
}

}  // namespace gradedreg
