#pragma once

// Minimal graded free (semi-free) resolutions computed degree by degree.
//
// The resolution F -> C of a bounded-below complex C is built by killing homology of the
// mapping cone of F -> C: for each internal degree j (ascending) and each index n (ascending),
// classes of H_n(Cone)_j are killed by new generators of F_n in degree j. A module is the
// complex concentrated in index 0. New generators are chosen as a complement of the
// boundaries, which makes the resolution minimal.

#include <chrono>
#include <map>

#include "betti.hpp"
#include "complex.hpp"

namespace gradedreg {

template <class F>
struct ResolutionWindow {
  struct Generator {
    int degree = 0;
    std::uint64_t weight = 0;
    SparseVec<F> d;    // d(e) in F_{i-1, degree}
    SparseVec<F> phi;  // image in C_{i, degree}
  };

  AlgebraPtr<F> alg;
  int imin = 0;
  int i_max = 0;
  int j_max = 0;
  int j_min = 0;
  bool weighted = false;  // generator weights are meaningful
  std::vector<std::vector<Generator>> gens;  // gens[i - imin], in creation order (degree ascending)

  const std::vector<Generator>& at(int i) const {
    static const std::vector<Generator> none;
    return (i >= imin && i <= i_max) ? gens[i - imin] : none;
  }

  std::vector<int> degrees(int i) const {
    std::vector<int> out;
    for (const auto& g : at(i)) out.push_back(g.degree);
    return out;
  }

  /// First index above imin with no generator in the window, if any.
  std::optional<int> first_empty() const {
    for (int i = imin + 1; i <= i_max; ++i)
      if (at(i).empty()) return i;
    return std::nullopt;
  }
};

namespace detail {

/// Offsets of the generator blocks of a free module in one degree.
template <class F>
std::vector<index_t> block_offsets(const AlgebraTable<F>& a, const std::vector<int>& gdeg, int j, index_t* total) {
  std::vector<index_t> off(gdeg.size(), 0);
  index_t run = 0;
  for (std::size_t s = 0; s < gdeg.size(); ++s) {
    off[s] = run;
    int d = j - gdeg[s];
    if (d >= 0 && d <= int(a.cap)) run += index_t(a.basis[d].size());
  }
  if (total) *total = run;
  return off;
}

template <class F>
class ResolutionEngine {
 public:
  ResolutionEngine(const ComplexTable<F>& c, int i_max, int j_max)
      : c_(c), a_(*c.alg), field_(c.alg->field), i_max_(i_max), j_max_(j_max) {
    use_w_ = a_.fine && c.fine();
    j_min_ = j_max + 1;
    for (int i = c.imin; i <= c.imax(); ++i) j_min_ = std::min(j_min_, c.mods[i - c.imin].lo);
    if (j_max > c.hi)
      throw error(errc::window_exceeded, "complex known up to degree " + std::to_string(c.hi) + ", j_max = " + std::to_string(j_max));
    if (j_min_ <= j_max && j_max - j_min_ > int(a_.cap))
      throw error(errc::window_exceeded, "algebra known up to degree " + std::to_string(a_.cap) + ", resolution needs " +
                                             std::to_string(j_max - j_min_));
    if (!c.complete_above && i_max + 1 > c.imax())
      throw error(errc::unsound_window, "complex computed up to index " + std::to_string(c.imax()) +
                                            ", resolution to index " + std::to_string(i_max) + " needs one more");
    idx_.resize(std::max(0, i_max - c.imin + 1));
  }

  ResolutionWindow<F> run() {
    ResolutionWindow<F> r;
    r.alg = c_.alg;
    r.imin = c_.imin;
    r.i_max = i_max_;
    r.j_max = j_max_;
    r.j_min = j_min_;
    r.weighted = use_w_;
    r.gens.resize(idx_.size());
    for (int j = j_min_; j <= j_max_; ++j) {
      for (int n = c_.imin; n <= i_max_; ++n) {
        build_layer(n, j);
        kill(n, j, r);
      }
      for (auto& ix : idx_) ix.layers.erase(ix.layers.begin(), ix.layers.lower_bound(j - int(a_.g) + 1));
    }
    return r;
  }

 private:
  struct Layer {
    std::vector<SparseVec<F>> cols;      // images of the basis of F_{n,j} in Cone_n = F_{n-1,j} + C_{n,j}
    std::vector<std::uint64_t> weights;
  };
  struct Index {
    std::vector<int> gdeg;
    std::vector<std::uint64_t> gw;
    std::vector<SparseVec<F>> gcol;  // generator columns in Cone_n coordinates at their own degree
    std::map<int, Layer> layers;
  };

  Index& ix(int n) { return idx_[n - c_.imin]; }
  bool in_range(int n) const { return n >= c_.imin && n <= i_max_; }

  index_t fdim(int n, int j) {
    if (!in_range(n)) return 0;
    index_t total = 0;
    block_offsets(a_, ix(n).gdeg, j, &total);
    return total;
  }

  std::size_t cdim(int n, int j) const {
    if (n < c_.imin || n > c_.imax()) return 0;
    return c_.mods[n - c_.imin].dim(j);
  }

  std::vector<std::uint64_t> cone_weights(int n, int j) {
    std::vector<std::uint64_t> w;
    if (in_range(n - 1)) {
      const auto& I = ix(n - 1);
      for (std::size_t s = 0; s < I.gdeg.size(); ++s) {
        int d = j - I.gdeg[s];
        if (d < 0) continue;
        for (auto aw : a_.weights[d]) w.push_back(I.gw[s] + aw);
      }
    }
    if (cdim(n, j)) {
      auto cw = c_.weights(n, j);
      w.insert(w.end(), cw.begin(), cw.end());
    }
    return w;
  }

  /// x_k on Cone_n from degree j to j + g.
  SparseVec<F> act_cone(int n, std::uint32_t k, int j, const SparseVec<F>& v) {
    const int g = int(a_.g);
    index_t fsrc = 0, fdst = 0;
    std::vector<index_t> osrc, odst;
    std::vector<int> empty;
    const auto& gdeg = in_range(n - 1) ? ix(n - 1).gdeg : empty;
    osrc = block_offsets(a_, gdeg, j, &fsrc);
    odst = block_offsets(a_, gdeg, j + g, &fdst);
    SparseVec<F> out;
    auto it = v.begin();
    std::size_t s = 0;
    while (it != v.end() && it->first < fsrc) {
      while (s + 1 < gdeg.size() && osrc[s + 1] <= it->first) ++s;
      SparseVec<F> block;
      index_t end = s + 1 < gdeg.size() ? osrc[s + 1] : fsrc;
      while (it != v.end() && it->first < end) {
        block.emplace_back(it->first - osrc[s], it->second);
        ++it;
      }
      append_shifted<F>(out, apply(field_, a_.mult[k][j - gdeg[s]], block), odst[s]);
      ++s;
    }
    if (it != v.end()) {
      SparseVec<F> cpart;
      for (; it != v.end(); ++it) cpart.emplace_back(it->first - fsrc, it->second);
      append_shifted<F>(out, c_.mods[n - c_.imin].act_gen(k, j, cpart), fdst);
    }
    return out;
  }

  /// Columns for the basis of F_{n,j} coming from generators of degree < j.
  void build_layer(int n, int j) {
    Index& I = ix(n);
    Layer L;
    const int g = int(a_.g);
    auto prev = I.layers.find(j - g);
    std::vector<index_t> oprev;
    if (prev != I.layers.end()) oprev = block_offsets(a_, I.gdeg, j - g, nullptr);
    for (std::size_t s = 0; s < I.gdeg.size(); ++s) {
      int d = j - I.gdeg[s];
      if (d < 0) continue;
      if (d == 0) {
        L.cols.push_back(I.gcol[s]);
        L.weights.push_back(I.gw[s]);
        continue;
      }
      for (index_t b = 0; b < a_.basis[d].size(); ++b) {
        auto [k, parent] = a_.tree[d][b];
        const auto& src = prev->second.cols[oprev[s] + parent];
        L.cols.push_back(act_cone(n, k, j - g, src));
        L.weights.push_back(I.gw[s] + a_.weights[d][b]);
      }
    }
    I.layers[j] = std::move(L);
  }

  void kill(int n, int j, ResolutionWindow<F>& r) {
    const index_t fn1 = fdim(n - 1, j);
    const std::size_t cn = cdim(n, j);
    const std::size_t dim = fn1 + cn;
    if (dim == 0) return;
    // Differential out of Cone_{n,j}.
    std::vector<SparseVec<F>> out;
    out.reserve(dim);
    if (in_range(n - 1)) {
      const auto& L = ix(n - 1).layers.at(j);
      out.insert(out.end(), L.cols.begin(), L.cols.end());
    }
    const index_t fn2 = fdim(n - 2, j);
    for (index_t b = 0; b < cn; ++b) {
      SparseVec<F> col;
      if (n > c_.imin) append_shifted<F>(col, c_.apply_d(n, j, unit_vector(field_, b)), fn2);
      out.push_back(std::move(col));
    }
    // Boundaries from Cone_{n+1,j}.
    std::vector<SparseVec<F>> in = ix(n).layers.at(j).cols;
    std::vector<std::uint64_t> win = ix(n).layers.at(j).weights;
    if (n + 1 <= c_.imax()) {
      for (index_t b = 0; b < cdim(n + 1, j); ++b) {
        SparseVec<F> col;
        append_shifted<F>(col, c_.apply_d(n + 1, j, unit_vector(field_, b)), fn1);
        in.push_back(std::move(col));
      }
      auto cw = c_.weights(n + 1, j);
      win.insert(win.end(), cw.begin(), cw.end());
    }
    auto wmid = cone_weights(n, j);
    auto reps = homology_representatives(field_, dim, out, in, wmid, win, use_w_);
    Index& I = ix(n);
    auto& layer = I.layers.at(j);
    for (auto& rep : reps) {
      typename ResolutionWindow<F>::Generator gen;
      gen.degree = j;
      gen.weight = use_w_ ? wmid[rep.back().first] : 0;
      for (const auto& [i, x] : rep) {
        if (i < fn1)
          gen.d.emplace_back(i, field_.neg(x));
        else
          gen.phi.emplace_back(i - fn1, x);
      }
      I.gdeg.push_back(j);
      I.gw.push_back(gen.weight);
      I.gcol.push_back(rep);
      layer.cols.push_back(rep);
      layer.weights.push_back(gen.weight);
      r.gens[n - c_.imin].push_back(std::move(gen));
    }
  }

  const ComplexTable<F>& c_;
  const AlgebraTable<F>& a_;
  F field_;
  int i_max_, j_max_;
  int j_min_ = 0;
  bool use_w_ = false;
  std::vector<Index> idx_;
};

}  // namespace detail

/// Minimal (semi-)free resolution of a complex, exact for indices <= i_max and degrees <= j_max.
template <class F>
ResolutionWindow<F> minimal_free_resolution(const ComplexTable<F>& c, int i_max, int j_max) {
  return detail::ResolutionEngine<F>(c, i_max, j_max).run();
}

template <class F>
ResolutionWindow<F> minimal_free_resolution(const ModuleTable<F>& m, int i_max, int j_max) {
  return minimal_free_resolution(complex_of(m), i_max, j_max);
}

template <class F>
BettiTable betti_table(const ResolutionWindow<F>& r) {
  BettiTable b{r.imin, r.i_max, r.j_max, {}};
  for (int i = r.imin; i <= r.i_max; ++i)
    for (const auto& g : r.at(i)) b.add(i, g.degree);
  return b;
}

/// Termination certification, see the README for the exact rules.
template <class F>
bool termination_certified(const ResolutionWindow<F>& r, const BettiTable& b) {
  const auto& a = *r.alg;
  auto empty = r.first_empty();
  if (!empty) return b.empty();
  int i = *empty;
  auto t_prev = b.top_degree(i - 1);
  int top = t_prev ? *t_prev : r.j_min;
  if (a.polynomial) {
    // Projective dimension is at most the number of generators; require headroom above t_{i-1}.
    return i <= int(a.ngens()) + 1 + r.imin && top + int(a.g) <= r.j_max;
  }
  return top + int(a.max_relation_degree) <= r.j_max;
}

/// Part of d(e_s) (generator s of F_i) on generators of F_{i-1} exactly g degrees lower.
template <class F>
SparseVec<F> linear_component(const ResolutionWindow<F>& r, int i, std::size_t s) {
  const auto& gen = r.at(i)[s];
  SparseVec<F> out;
  index_t start = 0;
  auto it = gen.d.begin();
  for (const auto& lower : r.at(i - 1)) {
    int da = gen.degree - lower.degree;
    if (da < 0) continue;
    index_t len = index_t(r.alg->basis[da].size());
    for (; it != gen.d.end() && it->first < start + len; ++it)
      if (da == int(r.alg->g)) out.push_back(*it);
    start += len;
  }
  return out;
}

template <class F>
RegularityVerdict regularity_of(const ResolutionWindow<F>& r) {
  auto b = betti_table(r);
  return regularity(b, int(r.alg->g), termination_certified(r, b));
}

/// The resolution as a complex of free modules (known up to degree j_max).
/// complete_above is set only when some index is empty. With linear_only, differential
/// entries of degree other than g are dropped (the linear part).
template <class F>
ComplexTable<F> resolution_complex(const ResolutionWindow<F>& r, bool linear_only = false) {
  ComplexTable<F> c;
  c.alg = r.alg;
  c.imin = r.imin;
  c.hi = r.j_max;
  auto empty = r.first_empty();
  int top = empty ? *empty - 1 : r.i_max;
  c.complete_above = empty.has_value();
  for (int i = r.imin; i <= top; ++i) {
    std::vector<std::uint64_t> gw;
    for (const auto& g : r.at(i)) gw.push_back(g.weight);
    auto m = free_module(r.alg, r.degrees(i), r.j_max, gw);
    if (!r.weighted) {
      m.fine = false;
      for (auto& w : m.weights) std::fill(w.begin(), w.end(), 0);
    }
    c.mods.push_back(std::move(m));
  }
  for (int i = r.imin; i <= top; ++i) {
    const auto& m = c.mods[i - c.imin];
    auto gdeg = r.degrees(i);
    std::vector<SparseMatrix<F>> per;
    for (int j = m.lo; j <= r.j_max; ++j) {
      std::size_t rows = i > r.imin ? c.mods[i - 1 - c.imin].dim(j) : 0;
      SparseMatrix<F> dm(rows, m.dim(j));
      if (i > r.imin) {
        index_t pos = 0;
        for (std::size_t s = 0; s < gdeg.size(); ++s) {
          int d = j - gdeg[s];
          if (d < 0) continue;
          auto de = linear_only ? linear_component(r, i, s) : r.at(i)[s].d;
          for (index_t b = 0; b < r.alg->basis[d].size(); ++b)
            dm.columns[pos++] = c.mods[i - 1 - c.imin].act_basis(std::uint32_t(d), b, de, gdeg[s]);
        }
      }
      per.push_back(std::move(dm));
    }
    c.diff.push_back(std::move(per));
  }
  settle_complex_weights(c);
  return c;
}

}  // namespace gradedreg
