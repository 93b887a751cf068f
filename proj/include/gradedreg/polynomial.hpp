#pragma once

// Monomials in degrevlex order and sparse polynomials over an exact field.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace gradedreg {

struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  std::size_t nvars() const noexcept { return exps.size(); }

  /// Sum of exponents; the graded degree is this times the variable degree.
  std::uint32_t total() const noexcept {
    std::uint32_t s = 0;
    for (auto e : exps) s += e;
    return s;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] + b.exps[i];
    return m;
  }

  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = a.exps[i] - b.exps[i];
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a.nvars());
    for (std::size_t i = 0; i < a.exps.size(); ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
    return m;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
      if (a.exps[i] && b.exps[i]) return false;
    return true;
  }

  Monomial pow(std::uint32_t q) const {
    Monomial m = *this;
    for (auto& e : m.exps) e *= q;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str(const std::vector<std::string>& names) const {
    std::string s;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (!exps[i]) continue;
      if (!s.empty()) s += '*';
      s += names[i];
      if (exps[i] > 1) s += '^' + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
  }
};

/// Degree reverse lexicographic order with x_1 > x_2 > ... ; true when a > b.
inline bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  auto da = a.total(), db = b.total();
  if (da != db) return da > db;
  for (std::size_t i = a.exps.size(); i-- > 0;)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  return false;
}

/// Per-variable weights for the fine grading; distinct monomials rarely collide.
inline std::uint64_t variable_weight(std::size_t i) {
  std::uint64_t z = std::uint64_t(i + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t monomial_weight(const Monomial& m) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < m.exps.size(); ++i) w += std::uint64_t(m.exps[i]) * variable_weight(i);
  return w;
}

/// Terms sorted strictly descending in degrevlex, no zero coefficients.
template <class F>
struct Polynomial {
  using Elem = typename F::Elem;
  std::vector<std::pair<Monomial, Elem>> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const Monomial& lead() const { return terms.front().first; }
  const Elem& lead_coeff() const { return terms.front().second; }

  bool is_homogeneous() const {
    return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return t.first.total() == lead().total(); });
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms == b.terms; }
};

template <class F>
Polynomial<F> monomial_poly(const F& field, Monomial m) {
  Polynomial<F> p;
  p.terms.emplace_back(std::move(m), field.one());
  return p;
}

/// a + c * mono * b
template <class F>
Polynomial<F> add_multiple(const F& field, const Polynomial<F>& a, const typename F::Elem& c, const Monomial& mono,
                           const Polynomial<F>& b) {
  Polynomial<F> out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  auto i = a.terms.begin();
  auto j = b.terms.begin();
  while (i != a.terms.end() || j != b.terms.end()) {
    if (j == b.terms.end()) {
      out.terms.push_back(*i++);
      continue;
    }
    Monomial mj = j->first * mono;
    if (i == a.terms.end() || degrevlex_greater(mj, i->first)) {
      auto v = field.mul(c, j->second);
      if (!field.is_zero(v)) out.terms.emplace_back(std::move(mj), std::move(v));
      ++j;
    } else if (degrevlex_greater(i->first, mj)) {
      out.terms.push_back(*i++);
    } else {
      auto v = field.add(i->second, field.mul(c, j->second));
      if (!field.is_zero(v)) out.terms.emplace_back(std::move(mj), std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
Polynomial<F> add(const F& field, const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) return a;
  return add_multiple(field, a, field.one(), Monomial(b.lead().nvars()), b);
}

template <class F>
Polynomial<F> multiply(const F& field, const Polynomial<F>& a, const Polynomial<F>& b) {
  Polynomial<F> out;
  for (const auto& [m, c] : a.terms) out = add_multiple(field, out, c, m, b);
  return out;
}

template <class F>
Polynomial<F> scale(const F& field, Polynomial<F> p, const typename F::Elem& c) {
  if (field.is_zero(c)) return {};
  for (auto& t : p.terms) t.second = field.mul(t.second, c);
  return p;
}

template <class F>
Polynomial<F> power(const F& field, const Polynomial<F>& p, std::uint32_t q, std::size_t nvars) {
  Polynomial<F> out = monomial_poly(field, Monomial(nvars));
  for (std::uint32_t k = 0; k < q; ++k) out = multiply(field, out, p);
  return out;
}

template <class F>
std::string to_string(const F& field, const Polynomial<F>& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms) {
    if (!s.empty()) s += " + ";
    bool unit_mono = m.total() == 0;
    if (unit_mono)
      s += field.to_string(c);
    else if (field.is_one(c))
      s += m.str(names);
    else
      s += field.to_string(c) + "*" + m.str(names);
  }
  return s;
}

}  // namespace gradedreg
