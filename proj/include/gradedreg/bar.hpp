#pragma once

// Independent Tor oracle: the normalized bar complex computing Tor^A(k, M).
//
// B_n = Abar^{(x)n} (x) M with
//   d[a_1|...|a_n]m = sum_{i=1}^{n-1} (-1)^i [..|a_i a_{i+1}|..]m + (-1)^n [a_1|...|a_{n-1}] a_n m.
// Only the algebra multiplication and the module action are used.

#include <map>

#include "betti.hpp"
#include "complex.hpp"

namespace gradedreg {

namespace detail {

template <class F>
class BarComplex {
 public:
  BarComplex(const ModuleTable<F>& m, int j_max) : m_(m), a_(*m.alg), field_(m.alg->field), j_max_(j_max) {
    if (j_max > m.hi) throw error(errc::window_exceeded, "module known up to degree " + std::to_string(m.hi));
    if (j_max - m.lo > int(a_.cap)) throw error(errc::window_exceeded, "algebra window too small for bar complex");
    use_w_ = a_.fine && m.fine;
  }

  /// Basis element: degrees and basis indices of a_1..a_n, then the module degree and index.
  struct Cell {
    std::vector<int> deg;
    std::vector<index_t> idx;
    int mdeg;
    index_t m;
    std::uint64_t w;
    bool operator<(const Cell& o) const { return std::tie(deg, idx, mdeg, m) < std::tie(o.deg, o.idx, o.mdeg, o.m); }
  };

  const std::vector<Cell>& cells(int n, int j) {
    auto key = std::pair{n, j};
    auto it = cells_.find(key);
    if (it != cells_.end()) return it->second;
    std::vector<Cell> out;
    Cell cur{std::vector<int>(n), std::vector<index_t>(n), 0, 0, 0};
    auto rec = [&](auto&& self, int pos, int left, std::uint64_t w) -> void {
      if (pos == n) {
        if (left < m_.lo || m_.dim(left) == 0) return;
        for (index_t b = 0; b < m_.dim(left); ++b) {
          cur.mdeg = left;
          cur.m = b;
          cur.w = w + m_.weight(left, b);
          out.push_back(cur);
        }
        return;
      }
      for (int d = int(a_.g); d <= left - m_.lo; d += int(a_.g)) {
        for (index_t b = 0; b < a_.basis[d].size(); ++b) {
          cur.deg[pos] = d;
          cur.idx[pos] = b;
          self(self, pos + 1, left - d, w + a_.weights[d][b]);
        }
      }
    };
    rec(rec, 0, j, 0);
    std::sort(out.begin(), out.end());
    return cells_[key] = std::move(out);
  }

  index_t position(int n, int j, const Cell& c) {
    const auto& v = cells(n, j);
    auto it = std::lower_bound(v.begin(), v.end(), c);
    return index_t(it - v.begin());
  }

  SparseVec<F> boundary(int n, int j, const Cell& c) {
    std::map<index_t, typename F::Elem> acc;
    auto add = [&](index_t pos, const typename F::Elem& x) {
      auto [it, fresh] = acc.try_emplace(pos, field_.zero());
      it->second = field_.add(it->second, x);
    };
    auto sign = [&](int i) { return i % 2 ? field_.neg(field_.one()) : field_.one(); };
    for (int i = 1; i < n; ++i) {
      // a_i a_{i+1}
      auto prod = multiply_basis(a_, std::uint32_t(c.deg[i - 1]), c.idx[i - 1], unit_vector(field_, c.idx[i]),
                                 std::uint32_t(c.deg[i]));
      Cell t;
      t.deg = c.deg;
      t.idx = c.idx;
      t.deg.erase(t.deg.begin() + i);
      t.idx.erase(t.idx.begin() + i);
      t.deg[i - 1] = c.deg[i - 1] + c.deg[i];
      t.mdeg = c.mdeg;
      t.m = c.m;
      for (const auto& [b, x] : prod) {
        t.idx[i - 1] = b;
        add(position(n - 1, j, t), field_.mul(sign(i), x));
      }
    }
    if (n >= 1) {
      auto am = m_.act_basis(std::uint32_t(c.deg[n - 1]), c.idx[n - 1], unit_vector(field_, c.m), c.mdeg);
      Cell t;
      t.deg.assign(c.deg.begin(), c.deg.end() - 1);
      t.idx.assign(c.idx.begin(), c.idx.end() - 1);
      t.mdeg = c.mdeg + c.deg[n - 1];
      for (const auto& [b, x] : am) {
        t.m = b;
        add(position(n - 1, j, t), field_.mul(sign(n), x));
      }
    }
    SparseVec<F> out;
    for (auto& [pos, x] : acc)
      if (!field_.is_zero(x)) out.emplace_back(pos, x);
    return out;
  }

  std::size_t tor_dim(int n, int j) {
    const auto& here = cells(n, j);
    if (here.empty()) return 0;
    std::vector<SparseVec<F>> out, in;
    std::vector<std::uint64_t> wmid, win;
    for (const auto& c : here) {
      out.push_back(n > 0 ? boundary(n, j, c) : SparseVec<F>{});
      wmid.push_back(c.w);
    }
    const auto above = cells(n + 1, j);
    for (const auto& c : above) {
      in.push_back(boundary(n + 1, j, c));
      win.push_back(c.w);
    }
    return homology_representatives(field_, here.size(), out, in, wmid, win, use_w_).size();
  }

 private:
  const ModuleTable<F>& m_;
  const AlgebraTable<F>& a_;
  F field_;
  int j_max_;
  bool use_w_ = false;
  std::map<std::pair<int, int>, std::vector<Cell>> cells_;
};

}  // namespace detail

/// dim Tor_{i,j}(k, M) for i <= i_max, j <= j_max from the normalized bar complex.
template <class F>
BettiTable bar_tor_oracle(const ModuleTable<F>& m, int i_max, int j_max) {
  detail::BarComplex<F> bar(m, j_max);
  BettiTable b{0, i_max, j_max, {}};
  for (int i = 0; i <= i_max; ++i)
    for (int j = m.lo; j <= j_max; ++j) b.add(i, j, bar.tor_dim(i, j));
  return b;
}

}  // namespace gradedreg
