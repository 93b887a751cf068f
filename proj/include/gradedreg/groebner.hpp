#pragma once

// Truncated homogeneous Buchberger algorithm in degrevlex, normal forms and standard monomials.

#include <map>
#include <set>

#include "polynomial.hpp"

namespace gradedreg {

/// Reduced Groebner basis, exact in all degrees <= cap. Degrees are graded: total exponent times g.
template <class F>
struct GroebnerBasis {
  F field;
  std::size_t nvars = 0;
  std::uint32_t g = 1;
  std::uint32_t cap = 0;
  std::vector<Polynomial<F>> basis;
};

namespace detail {

template <class F>
Polynomial<F> reduce_full(const F& field, Polynomial<F> p, const std::vector<Polynomial<F>>& basis) {
  Polynomial<F> rest;
  while (!p.is_zero()) {
    const auto& [lm, lc] = p.terms.front();
    const Polynomial<F>* red = nullptr;
    for (const auto& b : basis)
      if (b.lead().divides(lm)) {
        red = &b;
        break;
      }
    if (!red) {
      rest.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
      continue;
    }
    auto c = field.neg(field.mul(lc, field.inv(red->lead_coeff())));
    p = add_multiple(field, p, c, lm / red->lead(), *red);
  }
  return rest;
}

template <class F>
Polynomial<F> make_monic(const F& field, Polynomial<F> p) {
  if (p.is_zero()) return p;
  auto inv = field.inv(p.lead_coeff());
  return scale(field, std::move(p), inv);
}

}  // namespace detail

template <class F>
GroebnerBasis<F> buchberger(const F& field, const std::vector<Polynomial<F>>& gens, std::size_t nvars, std::uint32_t g,
                            std::uint32_t cap) {
  GroebnerBasis<F> gb{field, nvars, g, cap, {}};
  // Work queue keyed by graded degree: input generators and S-pairs (normal selection).
  std::multimap<std::uint32_t, std::pair<int, int>> queue;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    if (!gens[k].is_homogeneous())
      throw error(errc::non_homogeneous_input, "ideal generator " + std::to_string(k) + " is not homogeneous");
    std::uint32_t deg = gens[k].lead().total() * g;
    if (deg <= cap) queue.emplace(deg, std::pair{-1, int(k)});
  }
  auto& G = gb.basis;
  while (!queue.empty()) {
    auto [i, j] = queue.begin()->second;
    queue.erase(queue.begin());
    Polynomial<F> h;
    if (i < 0) {
      h = gens[j];
    } else {
      auto l = Monomial::lcm(G[i].lead(), G[j].lead());
      h = add_multiple(field, Polynomial<F>{}, field.one(), l / G[i].lead(), G[i]);
      h = add_multiple(field, h, field.neg(field.one()), l / G[j].lead(), G[j]);
    }
    h = detail::make_monic(field, detail::reduce_full(field, std::move(h), G));
    if (h.is_zero()) continue;
    int n = int(G.size());
    for (int k = 0; k < n; ++k) {
      if (Monomial::coprime(G[k].lead(), h.lead())) continue;
      std::uint32_t deg = Monomial::lcm(G[k].lead(), h.lead()).total() * g;
      if (deg <= cap) queue.emplace(deg, std::pair{k, n});
    }
    G.push_back(std::move(h));
  }
  // Minimalize and interreduce.
  std::vector<Polynomial<F>> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < G.size() && !redundant; ++l)
      if (l != k && G[l].lead().divides(G[k].lead()) && (G[l].lead() != G[k].lead() || l < k)) redundant = true;
    if (!redundant) minimal.push_back(G[k]);
  }
  for (auto& p : minimal) {
    std::vector<Polynomial<F>> others;
    for (const auto& q : minimal)
      if (&q != &p) others.push_back(q);
    Polynomial<F> tail;
    tail.terms.assign(p.terms.begin() + 1, p.terms.end());
    auto reduced_tail = detail::reduce_full(field, tail, others);
    Polynomial<F> lead;
    lead.terms.push_back(p.terms.front());
    p = add(field, lead, reduced_tail);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    if (a.lead().total() != b.lead().total()) return a.lead().total() < b.lead().total();
    return degrevlex_greater(a.lead(), b.lead());
  });
  G = std::move(minimal);
  return gb;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  for (const auto& [m, c] : f.terms)
    if (m.total() * gb.g > gb.cap)
      throw error(errc::degree_cap_exceeded,
                  "normal form requested in degree " + std::to_string(m.total() * gb.g) + " above cap " + std::to_string(gb.cap));
  return detail::reduce_full(gb.field, f, gb.basis);
}

template <class F>
bool is_standard(const Monomial& m, const GroebnerBasis<F>& gb) {
  for (const auto& b : gb.basis)
    if (b.lead().divides(m)) return false;
  return true;
}

/// All monomials with the given exponent sum, in descending degrevlex order.
inline std::vector<Monomial> monomials_of_total(std::size_t nvars, std::uint32_t total) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var + 1 == nvars) {
      cur.exps[var] = left;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur.exps[var] = e;
      self(self, var + 1, left - e);
    }
    cur.exps[var] = 0;
  };
  if (nvars == 0) {
    if (total == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, total);
  std::sort(out.begin(), out.end(), degrevlex_greater);
  return out;
}

/// Standard monomials of graded degree j, sorted descending.
template <class F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& gb, std::uint32_t j) {
  if (j > gb.cap)
    throw error(errc::degree_cap_exceeded, "degree " + std::to_string(j) + " above cap " + std::to_string(gb.cap));
  if (j % gb.g) return {};
  auto all = monomials_of_total(gb.nvars, j / gb.g);
  std::vector<Monomial> out;
  for (auto& m : all)
    if (is_standard(m, gb)) out.push_back(std::move(m));
  return out;
}

}  // namespace gradedreg
