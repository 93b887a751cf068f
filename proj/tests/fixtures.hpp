#pragma once

// Shared helpers for building small rings and modules in tests.

#include <memory>

#include "gradedreg/gradedreg.hpp"

namespace fx {

using namespace gradedreg;

inline const PrimeField gf2{2};

inline AlgebraPtr<PrimeField> algebra(std::vector<std::string> vars, std::vector<std::string> ideal, std::uint32_t cap = 14,
                                      std::uint32_t p = 2) {
  RingDesc d;
  d.field = {p};
  d.variables = std::move(vars);
  d.ideal = std::move(ideal);
  PrimeField f(p);
  return std::make_shared<const AlgebraTable<PrimeField>>(build_algebra_table(make_quotient_ring(f, d, cap), cap));
}

inline RingPtr<PrimeField> ring(std::vector<std::string> vars, std::vector<std::string> ideal, std::uint32_t cap = 24,
                                std::uint32_t p = 2) {
  RingDesc d;
  d.field = {p};
  d.variables = std::move(vars);
  d.ideal = std::move(ideal);
  return std::make_shared<const QuotientRing<PrimeField>>(make_quotient_ring(PrimeField(p), d, cap));
}

inline AlgebraPtr<PrimeField> table_of(const RingPtr<PrimeField>& r, std::uint32_t cap) {
  return std::make_shared<const AlgebraTable<PrimeField>>(build_algebra_table(*r, cap));
}

inline SparseVec<PrimeField> element(const AlgebraTable<PrimeField>& a, std::uint32_t j, const std::string& text) {
  auto p = parse_polynomial(a.field, text, a.var_names);
  SparseVec<PrimeField> v;
  for (const auto& [m, c] : p.terms) {
    long i = a.index_of(j, m);
    if (i < 0) throw std::logic_error("element not standard: " + text);
    v.emplace_back(index_t(i), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

/// Cyclic module A / (elements of degree w), generated in degree 0.
inline ModuleTable<PrimeField> cyclic(AlgebraPtr<PrimeField> a, std::uint32_t w, const std::vector<std::string>& rels, int hi) {
  std::vector<std::pair<int, SparseVec<PrimeField>>> r;
  for (const auto& s : rels) r.emplace_back(int(w), element(*a, w, s));
  return cokernel(a, {0}, r, hi);
}

inline std::vector<std::size_t> dims(const ModuleTable<PrimeField>& m, int from, int to) {
  std::vector<std::size_t> out;
  for (int j = from; j <= to; ++j) out.push_back(m.dim(j));
  return out;
}

inline BettiTable betti(const ModuleTable<PrimeField>& m, int i_max, int j_max) {
  return betti_table(minimal_free_resolution(m, i_max, j_max));
}

inline BettiTable table(std::initializer_list<std::tuple<int, int, std::size_t>> entries) {
  BettiTable b;
  for (auto [i, j, n] : entries) b.add(i, j, n);
  return b;
}

}  // namespace fx
