#pragma once

// Windowed Betti tables, regularity verdicts and Poincare windows.

#include <map>
#include <optional>
#include <ostream>
#include <utility>

#include "regvalue.hpp"

namespace gradedreg {

struct BettiTable {
  int imin = 0;
  int i_max = 0;
  int j_max = 0;
  std::map<std::pair<int, int>, std::size_t> entries;  // nonzero entries only

  std::size_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  void add(int i, int j, std::size_t n = 1) {
    if (n) entries[{i, j}] += n;
  }

  bool empty() const { return entries.empty(); }

  /// t_i: largest j with a nonzero entry at index i.
  std::optional<int> top_degree(int i) const {
    std::optional<int> t;
    for (const auto& [ij, n] : entries)
      if (ij.first == i) t = t ? std::max(*t, ij.second) : ij.second;
    return t;
  }

  std::size_t total(int i) const {
    std::size_t s = 0;
    for (const auto& [ij, n] : entries)
      if (ij.first == i) s += n;
    return s;
  }

  /// Restriction to i <= i_cap, j <= j_cap.
  BettiTable clipped(int i_cap, int j_cap) const {
    BettiTable b{imin, std::min(i_max, i_cap), std::min(j_max, j_cap), {}};
    for (const auto& [ij, n] : entries)
      if (ij.first <= i_cap && ij.second <= j_cap) b.entries[ij] = n;
    return b;
  }

  /// Entry equality (window metadata is not compared).
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

inline std::ostream& operator<<(std::ostream& os, const BettiTable& b) {
  os << "{";
  bool first = true;
  for (const auto& [ij, n] : b.entries) {
    os << (first ? "" : ", ") << "(" << ij.first << "," << ij.second << "):" << n;
    first = false;
  }
  return os << "}";
}

struct RegularityVerdict {
  RegValue value;                       // minus infinity for an empty table
  bool boundary_attained = false;       // maximum realized at i = i_max or j = j_max
  bool boundary_i = false;
  bool boundary_j = false;
  bool termination_certified = false;
  std::optional<std::pair<int, int>> witness;  // (i, j) realizing the maximum, least i first

  friend bool operator==(const RegularityVerdict&, const RegularityVerdict&) = default;
};

/// max over nonzero entries of (j - i*gd) / gd.
inline RegularityVerdict regularity(const BettiTable& b, int gd, bool certified = false) {
  RegularityVerdict v;
  for (const auto& [ij, n] : b.entries) {
    auto [i, j] = ij;
    RegValue r(std::int64_t(j) - std::int64_t(i) * gd, gd);
    if (!v.witness || v.value < r) {
      v.value = r;
      v.witness = ij;
    }
  }
  for (const auto& [ij, n] : b.entries) {
    auto [i, j] = ij;
    if (RegValue(std::int64_t(j) - std::int64_t(i) * gd, gd) != v.value) continue;
    v.boundary_i = v.boundary_i || i == b.i_max;
    v.boundary_j = v.boundary_j || j == b.j_max;
  }
  v.boundary_attained = v.boundary_i || v.boundary_j;
  v.termination_certified = certified;
  return v;
}

/// Truncated series sum beta_{i,j} t^i y^j, as a coefficient map.
struct PoincareWindow {
  int i_max = 0;
  int j_max = 0;
  std::map<std::pair<int, int>, long long> coeffs;

  static PoincareWindow of(const BettiTable& b) {
    PoincareWindow p{b.i_max, b.j_max, {}};
    for (const auto& [ij, n] : b.entries) p.coeffs[ij] = static_cast<long long>(n);
    return p;
  }

  /// Multiplication by (1 + t y^w)^e, truncated to the window.
  PoincareWindow times_binomial(int w, int e) const {
    PoincareWindow p = *this;
    for (int r = 0; r < e; ++r) {
      PoincareWindow q{i_max, j_max, p.coeffs};
      for (const auto& [ij, c] : p.coeffs) {
        auto key = std::pair{ij.first + 1, ij.second + w};
        if (key.first <= i_max && key.second <= j_max) q.coeffs[key] += c;
      }
      p = std::move(q);
    }
    for (auto it = p.coeffs.begin(); it != p.coeffs.end();) it = it->second == 0 ? p.coeffs.erase(it) : std::next(it);
    return p;
  }

  friend bool operator==(const PoincareWindow& a, const PoincareWindow& b) { return a.coeffs == b.coeffs; }
};

}  // namespace gradedreg
