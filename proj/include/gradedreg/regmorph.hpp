#pragma once

// Betti numbers and regularity over a homomorphism of order d.
//
// beta^phi_{i,j}(M) = dim H_i(k (x)^L_{R^(1/d)} K[x; M])_j, computed by restricting the Koszul
// complex K[x; M] to R^(1/d) and resolving it. Any sequence x generating S_{dg} modulo (mS)_{dg}
// may be passed; the default is the greedy minimal one.

#include "hom.hpp"
#include "tensor.hpp"

namespace gradedreg {

/// Each term restricted along h; the differentials are unchanged.
template <class F>
ComplexTable<F> restrict_complex(const ComplexTable<F>& c, const TableHom<F>& h) {
  ComplexTable<F> r = c;
  r.alg = h.source;
  for (auto& m : r.mods) m = restrict_scalars(m, h);
  settle_complex_weights(r);
  return r;
}

/// M^(1/s) with weights multiplied by factor (kept only if still consistent).
template <class F>
ModuleTable<F> regrade(const ModuleTable<F>& m, AlgebraPtr<F> regraded, int s, std::uint64_t factor = 1) {
  auto r = fractional_veronese(m, regraded, s);
  if (m.fine) {
    for (int j = m.lo; j <= m.hi; ++j) {
      auto& w = r.weights[s * j - r.lo];
      w = m.weights[j - m.lo];
      for (auto& x : w) x *= factor;
    }
    r.settle_weights();
  }
  return r;
}

template <class F>
ComplexTable<F> regrade_complex(const ComplexTable<F>& c, AlgebraPtr<F> regraded, int s, std::uint64_t factor = 1) {
  ComplexTable<F> r;
  r.alg = regraded;
  r.imin = c.imin;
  r.hi = s * c.hi + s - 1;
  r.complete_above = c.complete_above;
  for (const auto& m : c.mods) r.mods.push_back(regrade(m, regraded, s, factor));
  for (int i = c.imin; i <= c.imax(); ++i) {
    const auto& m = r.mods[i - r.imin];
    std::vector<SparseMatrix<F>> per;
    for (int j = m.lo; j <= r.hi; ++j) {
      std::size_t rows = i > r.imin ? r.mods[i - 1 - r.imin].dim(j) : 0;
      if (j % s == 0 && j / s <= c.hi)
        per.push_back(c.d(i, j / s));
      else
        per.push_back(SparseMatrix<F>(rows, m.dim(j)));
    }
    r.diff.push_back(std::move(per));
  }
  settle_complex_weights(r);
  return r;
}

struct BettiOverHom {
  BettiTable table;
  RegularityVerdict verdict;
  std::size_t kappa = 0;  // length of the sequence used
  std::uint32_t dg = 1;
};

namespace detail {

template <class F>
BettiOverHom resolve_over_base(const ComplexTable<F>& restricted, std::uint32_t dg, std::size_t kappa, int i_max, int j_max) {
  auto r = minimal_free_resolution(restricted, i_max, j_max);
  BettiOverHom out;
  out.table = betti_table(r);
  out.kappa = kappa;
  out.dg = dg;
  // A complex may have empty terms below its top index; stopping there certifies nothing.
  auto empty = r.first_empty();
  bool cert = termination_certified(r, out.table) && (!empty || *empty > restricted.imax());
  out.verdict = regularity(out.table, int(dg), cert);
  return out;
}

}  // namespace detail

template <class F>
BettiOverHom betti_over_hom(const HomTables<F>& t, const KoszulSequence<F>& seq, const ComplexTable<F>& m, int i_max,
                            int j_max) {
  auto k = koszul_complex(seq.with_degrees(), m);
  return detail::resolve_over_base(restrict_complex(k, t.map), t.dg, seq.kappa(), i_max, j_max);
}

template <class F>
BettiOverHom betti_over_hom(const HomTables<F>& t, const ComplexTable<F>& m, int i_max, int j_max) {
  return betti_over_hom(t, koszul_sequence(t), m, i_max, j_max);
}

template <class F>
BettiOverHom betti_over_hom(const HomTables<F>& t, const ModuleTable<F>& m, int i_max, int j_max) {
  return betti_over_hom(t, complex_of(m), i_max, j_max);
}

template <class F>
RegularityVerdict reg_over_hom(const HomTables<F>& t, const ModuleTable<F>& m, int i_max, int j_max) {
  return betti_over_hom(t, m, i_max, j_max).verdict;
}

template <class F>
RegularityVerdict reg_over_hom(const HomTables<F>& t, const ComplexTable<F>& m, int i_max, int j_max) {
  return betti_over_hom(t, m, i_max, j_max).verdict;
}

/// dim (S/mS)_j for 0 <= j <= upto.
template <class F>
std::vector<std::size_t> fiber_dims(const HomTables<F>& t, std::uint32_t upto) {
  const auto& s = *t.target;
  upto = std::min(upto, s.cap);
  std::vector<std::size_t> out;
  for (std::uint32_t j = 0; j <= upto; ++j) {
    EchelonBasis<F> eb(s.field);
    if (j >= t.dg)
      for (const auto& img : t.map.images)
        for (index_t b = 0; b < s.basis[j - t.dg].size(); ++b) {
          SparseVec<F> v;
          for (const auto& [x, c] : img)
            axpy(s.field, v, c, multiply_basis(s, t.dg, x, unit_vector(s.field, b), j - t.dg));
          eb.insert(std::move(v));
        }
    out.push_back(s.basis[j].size() - eb.rank());
  }
  return out;
}

/// S/mS vanishes in h consecutive degrees inside the target window (hence in all higher ones).
template <class F>
bool fiber_is_artinian(const HomTables<F>& t) {
  auto dims = fiber_dims(t, t.target->cap);
  std::size_t h = t.target->g, run = 0;
  for (std::size_t j = 1; j < dims.size(); ++j) {
    run = dims[j] == 0 ? run + 1 : 0;
    if (run >= h) return true;
  }
  return false;
}

/// Resolves M over R^(1/d) directly, skipping the Koszul complex; valid when S/mS is artinian.
template <class F>
BettiOverHom artinian_betti(const HomTables<F>& t, const ComplexTable<F>& m, int i_max, int j_max) {
  if (!fiber_is_artinian(t))
    throw error(errc::not_artinian, "S/mS does not vanish in " + std::to_string(t.target->g) +
                                        " consecutive degrees up to " + std::to_string(t.target->cap));
  return detail::resolve_over_base(restrict_complex(m, t.map), t.dg, 0, i_max, j_max);
}

template <class F>
RegularityVerdict artinian_shortcut(const HomTables<F>& t, const ModuleTable<F>& m, int i_max, int j_max) {
  return artinian_betti(t, complex_of(m), i_max, j_max).verdict;
}

/// Largest R-degree of the pushforward fully determined by M up to degree j_max.
inline int pushforward_window(int j_max, int d) { return floor_div(j_max - d + 1, d); }

/// reg of the pushforward with the Veronese grading, as an R-module. For a finite morphism this is
/// the regularity over the induced homogeneous map R -> S^(d).
template <class F>
RegularityVerdict pushforward_regularity(const HomTables<F>& t, const ModuleTable<F>& m, int i_max, int j_max) {
  if (!fiber_is_artinian(t)) throw error(errc::not_artinian, "pushforward regularity needs a finite morphism");
  auto p = pushforward(t, m);
  int jr = std::min(pushforward_window(j_max, int(t.d)), p.hi);
  return regularity_of(minimal_free_resolution(p, i_max, jr));
}

/// Tables for phi^(1/s): R^(1/s) -> S^(1/s), same images placed in degree dgs.
template <class F>
HomTables<F> regraded_tables(const HomTables<F>& t, std::uint32_t s) {
  HomTables<F> r;
  r.d = t.d;
  r.dg = t.dg * s;
  r.source = std::make_shared<const AlgebraTable<F>>(fractional_veronese(*t.source, s));
  r.base = std::make_shared<const AlgebraTable<F>>(fractional_veronese(*t.source, s * t.d));
  r.target = std::make_shared<const AlgebraTable<F>>(fractional_veronese(*t.target, s));
  r.map = TableHom<F>{r.base, r.target, t.map.images};
  return r;
}

/// R[t'] -> S[t] extending h by t' -> t^c; the new variables get fresh names.
inline std::string fresh_variable(const std::vector<std::string>& taken, const std::string& base) {
  std::string name = base;
  for (int k = 1; std::find(taken.begin(), taken.end(), name) != taken.end(); ++k) name = base + std::to_string(k);
  return name;
}

template <class F>
RingPtr<F> adjoin_variables(const QuotientRing<F>& r, const std::vector<std::string>& names, std::uint32_t cap) {
  RingDesc d = r.desc;
  for (const auto& n : names) d.variables.push_back(n);
  return std::make_shared<const QuotientRing<F>>(make_quotient_ring(r.field, d, cap));
}

template <class F>
OrderedHom<F> polynomial_extension(const OrderedHom<F>& h) {
  auto tname = fresh_variable(h.target->desc.variables, "t");
  auto sname = fresh_variable(h.source->desc.variables, "t");
  auto source = adjoin_variables(*h.source, {sname}, h.source->cap());
  auto target = adjoin_variables(*h.target, {tname}, h.target->cap());
  std::vector<std::string> images;
  for (const auto& im : h.images) images.push_back(h.target->str(im));
  images.push_back(tname + "^" + std::to_string(h.c));
  return make_hom(source, target, images);
}

/// R[t_1..t_m] -> S with t_i -> y_i^c, where y_i are standard monomials of degree h completing
/// (mS)_h to S_h (greedy in standard-monomial order). S/(mS + (y^c)) is then artinian.
template <class F>
OrderedHom<F> artinian_factorization(const OrderedHom<F>& h, const HomTables<F>& t) {
  const auto& s = *t.target;
  std::uint32_t hd = s.g;
  std::vector<SparseVec<F>> span, ambient;
  if (t.dg == hd) span = t.map.images;
  for (index_t b = 0; b < s.basis[hd].size(); ++b) ambient.push_back(unit_vector(s.field, b));
  std::vector<std::string> names, images;
  for (const auto& im : h.images) images.push_back(h.target->str(im));
  std::vector<std::string> taken = h.source->desc.variables;
  for (auto k : span_complement(s.field, span, ambient)) {
    auto name = fresh_variable(taken, "t");
    taken.push_back(name);
    names.push_back(name);
    Monomial y = s.basis[hd][k];
    images.push_back(to_string(s.field, monomial_poly(s.field, y.pow(h.c)), h.target->desc.variables));
  }
  auto source = adjoin_variables(*h.source, names, h.source->cap());
  return make_hom(source, h.target, images);
}

template <class F>
struct CompositionTower {
  std::vector<ComplexTable<F>> levels;  // M^1 .. M^s, complexes over S
  std::vector<OrderedHom<F>> homs;      // psi^1 .. psi^s
  std::vector<BettiOverHom> verdicts;   // over psi^i
};

/// M^1 = M, M^{i+1} = (M^i)^(1/d) (x)^L_{R^(1/d)} M, with M^{i+1} an S-complex through M.
/// Level i is resolved to index i_max + steps - i so every later level stays sound up to i_max.
template <class F>
CompositionTower<F> composition_tower(const OrderedHom<F>& psi, const HomTables<F>& t, const ModuleTable<F>& m, int steps,
                                      int i_max, int j_max) {
  if (!psi.is_endomorphism()) throw error(errc::invalid_input, "composition tower needs an endomorphism");
  if (steps < 1) throw error(errc::invalid_input, "tower needs at least one step");
  CompositionTower<F> tw;
  tw.levels.push_back(complex_of(m));
  tw.homs.push_back(psi);
  const auto n = complex_of(m);
  for (int i = 1; i < steps; ++i) {
    auto frac = regrade_complex(tw.levels.back(), t.base, int(t.d), t.d);
    auto g = minimal_free_resolution(frac, i_max + steps - i, j_max);
    tw.levels.push_back(tensor_with(g, n, &t.map));
    tw.homs.push_back(compose(psi, tw.homs.back()));
  }
  for (int i = 0; i < steps; ++i) {
    auto ti = i == 0 ? t : hom_tables(tw.homs[i], t.target->cap, t.target);
    tw.verdicts.push_back(betti_over_hom(ti, tw.levels[i], i_max, j_max));
  }
  return tw;
}

}  // namespace gradedreg
