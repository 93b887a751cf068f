#pragma once

// Homomorphisms of order d between quotient rings and the table data derived from them.
//
// A homomorphism is determined by the images of the source variables. Coefficients are
// fixed, which covers Frobenius over a prime field since a^p = a there.

#include <memory>

#include "functors.hpp"

namespace gradedreg {

template <class F>
using RingPtr = std::shared_ptr<const QuotientRing<F>>;

template <class F>
struct OrderedHom {
  RingPtr<F> source;
  RingPtr<F> target;
  std::vector<Polynomial<F>> images;  // reduced in target, one per source variable
  std::uint32_t d = 1;
  std::uint32_t c = 1;  // d * g = h * c

  std::uint32_t dg() const { return d * source->g(); }
  bool is_endomorphism() const { return source == target || source->desc == target->desc; }
};

/// Image of a source polynomial, reduced in the target.
template <class F>
Polynomial<F> evaluate(const OrderedHom<F>& h, const Polynomial<F>& p) {
  const auto& t = *h.target;
  const F& field = t.field;
  std::map<std::pair<std::size_t, std::uint32_t>, Polynomial<F>> powers;
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial<F>& {
    auto key = std::pair{i, e};
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial<F> q = monomial_poly(field, Monomial(t.nvars()));
    for (std::uint32_t k = 0; k < e; ++k) q = t.reduce(multiply(field, q, h.images[i]));
    return powers.emplace(key, std::move(q)).first->second;
  };
  Polynomial<F> out;
  for (const auto& [m, coef] : p.terms) {
    Polynomial<F> term = monomial_poly(field, Monomial(t.nvars()));
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m.exps[i]) term = t.reduce(multiply(field, term, power_of(i, m.exps[i])));
    out = add(field, out, scale(field, term, coef));
  }
  return out;
}

/// Verifies uniform degree scaling and that relations map to zero; fills d and c.
template <class F>
std::uint32_t check_order(OrderedHom<F>& h) {
  const auto& s = *h.source;
  const auto& t = *h.target;
  if (h.images.size() != s.nvars())
    throw error(errc::invalid_input, "homomorphism needs " + std::to_string(s.nvars()) + " images, got " +
                                         std::to_string(h.images.size()));
  std::optional<std::uint32_t> deg;
  for (std::size_t i = 0; i < h.images.size(); ++i) {
    auto& im = h.images[i];
    im = t.reduce(im);
    if (im.is_zero()) continue;
    if (!im.is_homogeneous())
      throw error(errc::order_mismatch, "image of " + s.desc.variables[i] + " is not homogeneous");
    std::uint32_t e = t.degree_of(im);
    if (deg && *deg != e)
      throw error(errc::order_mismatch, "image degrees " + std::to_string(*deg) + " and " + std::to_string(e) +
                                            " do not scale uniformly");
    deg = e;
  }
  if (deg) {
    if (*deg % s.g() != 0 || *deg == 0)
      throw error(errc::order_mismatch, "image degree " + std::to_string(*deg) + " is not a positive multiple of " +
                                            std::to_string(s.g()));
    h.d = *deg / s.g();
  }
  if (h.dg() % t.g() != 0)
    throw error(errc::order_mismatch, "d*g = " + std::to_string(h.dg()) + " is not divisible by the target degree " +
                                          std::to_string(t.g()));
  h.c = h.dg() / t.g();
  for (std::size_t k = 0; k < s.ideal.size(); ++k)
    if (!evaluate(h, s.ideal[k]).is_zero())
      throw error(errc::not_well_defined, "relation " + s.str(s.ideal[k]) + " does not map to zero");
  return h.d;
}

/// Builds and checks a homomorphism from image strings in the target's variables.
template <class F>
OrderedHom<F> make_hom(RingPtr<F> source, RingPtr<F> target, const std::vector<std::string>& images) {
  OrderedHom<F> h{source, target, {}, 1, 1};
  for (const auto& s : images) h.images.push_back(target->parse(s));
  check_order(h);
  return h;
}

template <class F>
OrderedHom<F> identity_hom(RingPtr<F> r) {
  OrderedHom<F> h{r, r, {}, 1, 1};
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    Monomial m(r->nvars());
    m.exps[i] = 1;
    h.images.push_back(monomial_poly(r->field, m));
  }
  check_order(h);
  return h;
}

/// x_i -> x_i^q with q = p^e.
template <class F>
OrderedHom<F> frobenius_hom(RingPtr<F> r, std::uint32_t e) {
  std::uint32_t p = r->field.characteristic();
  if (p == 0) throw error(errc::char_zero, "Frobenius needs a field of positive characteristic");
  if (e < 1) throw error(errc::invalid_input, "Frobenius exponent must be >= 1");
  std::uint32_t q = 1;
  for (std::uint32_t k = 0; k < e; ++k) q *= p;
  OrderedHom<F> h{r, r, {}, q, 1};
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    Monomial m(r->nvars());
    m.exps[i] = q;
    h.images.push_back(monomial_poly(r->field, m));
  }
  check_order(h);
  return h;
}

/// second after first: source(first) -> target(second).
template <class F>
OrderedHom<F> compose(const OrderedHom<F>& second, const OrderedHom<F>& first) {
  if (!(first.target->desc == second.source->desc))
    throw error(errc::invalid_input, "homomorphisms are not composable");
  OrderedHom<F> h{first.source, second.target, {}, 1, 1};
  for (const auto& im : first.images) h.images.push_back(evaluate(second, im));
  check_order(h);
  return h;
}

/// Degreewise tables for a homomorphism R -> S, with S known up to target_cap.
/// base is R^(1/d) carrying the weights of the images, so restriction keeps the fine grading
/// whenever the images are monomials.
template <class F>
struct HomTables {
  AlgebraPtr<F> source;  // R, reweighted
  AlgebraPtr<F> base;    // R^(1/d)
  AlgebraPtr<F> target;  // S
  TableHom<F> map;       // base -> target
  std::uint32_t d = 1;
  std::uint32_t dg = 1;
};

template <class F>
HomTables<F> hom_tables(const OrderedHom<F>& h, std::uint32_t target_cap, AlgebraPtr<F> target = nullptr) {
  HomTables<F> t;
  t.d = h.d;
  t.dg = h.dg();
  if (!target) target = std::make_shared<const AlgebraTable<F>>(build_algebra_table(*h.target, target_cap));
  t.target = target;
  std::uint32_t rcap = target_cap / h.d;
  auto r = build_algebra_table(*h.source, std::min(rcap, h.source->cap()));
  if (r.cap < h.source->g())
    throw error(errc::window_exceeded, "target window " + std::to_string(target_cap) + " too small for order " +
                                           std::to_string(h.d));

  // weight of x_i is the weight of its image when that image is a single monomial
  bool monomial = true;
  std::vector<std::uint64_t> vw;
  for (const auto& im : h.images) {
    monomial = monomial && im.terms.size() == 1;
    vw.push_back(im.terms.size() == 1 ? monomial_weight(im.lead()) : 0);
  }
  std::vector<std::vector<std::uint64_t>> weights(r.cap + 1);
  for (std::uint32_t j = 0; j <= r.cap; ++j)
    for (const auto& m : r.basis[j]) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < m.nvars(); ++i) w += std::uint64_t(m.exps[i]) * vw[i];
      weights[j].push_back(w);
    }
  auto rw = reweighted(std::move(r), std::move(weights));
  rw.fine = rw.fine && monomial && target->fine;
  t.source = std::make_shared<const AlgebraTable<F>>(rw);
  t.base = std::make_shared<const AlgebraTable<F>>(fractional_veronese(rw, h.d));

  t.map.source = t.base;
  t.map.target = target;
  const auto& s = *h.source;
  for (std::size_t k = 0; k < t.source->ngens(); ++k) {
    const Monomial& x = t.source->gen(k);
    auto img = evaluate(h, monomial_poly(s.field, x));
    SparseVec<F> v;
    for (const auto& [m, c] : img.terms) {
      long idx = target->index_of(t.dg, m);
      if (idx < 0) throw std::logic_error("image is not in normal form");
      v.emplace_back(index_t(idx), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    t.map.images.push_back(std::move(v));
  }
  return t;
}

/// The pushforward ^phi M with the Veronese grading: degree j holds M_{dj} + ... + M_{dj+d-1}.
template <class F>
ModuleTable<F> pushforward(const HomTables<F>& t, const ModuleTable<F>& m) {
  return phi_functor(restrict_scalars(m, t.map), t.source, int(t.d));
}

/// The i-th summand (M_{du+i})_u of the pushforward.
template <class F>
ModuleTable<F> pushforward_piece(const HomTables<F>& t, const ModuleTable<F>& m, int i) {
  return phi_piece(restrict_scalars(m, t.map), t.source, int(t.d), i);
}

/// Elements of S_{dg} whose classes form a basis of S_{dg} / (mS)_{dg}, chosen greedily in
/// standard-monomial order. Since n^c is generated by S_{dg}, they generate n^c modulo mS.
template <class F>
struct KoszulSequence {
  std::uint32_t degree = 0;
  std::vector<SparseVec<F>> elements;
  bool minimal = true;

  std::size_t kappa() const { return elements.size(); }

  std::vector<std::pair<std::uint32_t, SparseVec<F>>> with_degrees() const {
    std::vector<std::pair<std::uint32_t, SparseVec<F>>> out;
    for (const auto& e : elements) out.emplace_back(degree, e);
    return out;
  }
};

template <class F>
KoszulSequence<F> koszul_sequence(const HomTables<F>& t) {
  const auto& s = *t.target;
  s.require(t.dg);
  std::vector<SparseVec<F>> ambient;
  for (index_t b = 0; b < s.basis[t.dg].size(); ++b) ambient.push_back(unit_vector(s.field, b));
  KoszulSequence<F> k{t.dg, {}, true};
  for (auto i : span_complement(s.field, t.map.images, ambient)) k.elements.push_back(ambient[i]);
  return k;
}

}  // namespace gradedreg
