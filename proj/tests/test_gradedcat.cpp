#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fx;

namespace {

constexpr int kJ = 12;

BettiTable diagonal(int i_max, std::size_t n) {
  BettiTable b;
  for (int i = 0; i <= i_max; ++i) b.add(i, i, n);
  return b;
}

std::vector<ModuleTable<PrimeField>> nodal_fixtures(AlgebraPtr<PrimeField> a) {
  return {free_module(a, {0}, kJ), residue_field(a, kJ), cyclic(a, 1, {"x+y"}, kJ), cyclic(a, 1, {"x"}, kJ),
          cyclic(a, 2, {"x^2"}, kJ), direct_sum<PrimeField>({cyclic(a, 1, {"y"}, kJ), free_module(a, {1}, kJ)}, a)};
}

}  // namespace

TEST(Twist, ShiftsHilbertFunctionAndRegularity) {
  auto a = algebra({"x", "y"}, {"x*y"});
  auto r = free_module(a, {0}, kJ);
  EXPECT_TRUE(same_table(twist(r, 0), r));
  EXPECT_EQ(dims(twist(r, 1), 0, 4), (std::vector<std::size_t>{0, 1, 2, 2, 2}));
  auto v = regularity_of(minimal_free_resolution(twist(r, 3), 6, kJ));
  EXPECT_EQ(v.value, RegValue(3));
}

TEST(Shift, RegularityAndInfimum) {
  auto a = algebra({"x"}, {"x^2"});
  auto k = complex_of(residue_field(a, kJ));
  auto reg = [&](const ComplexTable<PrimeField>& c) { return regularity_of(minimal_free_resolution(c, 6, kJ)).value; };
  for (int m : {0, 1, 2}) {
    auto s = shift(k, m);
    EXPECT_EQ(*inf_index(s), *inf_index(k) - m);
    EXPECT_EQ(reg(s), reg(k) + RegValue(m));
  }
}

TEST(VeroneseAlgebra, Examples) {
  auto a = algebra({"x", "y"}, {"x*y"});
  EXPECT_EQ(veronese_algebra(*a, 1).basis, a->basis);
  auto v = veronese_algebra(*a, 2);
  EXPECT_EQ(v.g, 1u);
  for (std::uint32_t j = 0; j <= 5; ++j) EXPECT_EQ(v.dim(j), j == 0 ? 1u : 2u);
  EXPECT_EQ(v.label(1, 0), "x^2");
  EXPECT_EQ(v.label(1, 1), "y^2");
  auto line = algebra({"x"}, {});
  auto v3 = veronese_algebra(*line, 3);
  for (std::uint32_t j = 0; j <= v3.cap; ++j) EXPECT_EQ(v3.dim(j), 1u);
  EXPECT_EQ(v3.ngens(), 1u);
}

TEST(VeronesePiece, NodalRing) {
  auto a = algebra({"x", "y"}, {"x*y"});
  auto v = std::make_shared<const AlgebraTable<PrimeField>>(veronese_algebra(*a, 2));
  auto r = free_module(a, {0}, kJ);
  EXPECT_EQ(dims(veronese_piece(r, v, 2, 0), 0, 4), (std::vector<std::size_t>{1, 2, 2, 2, 2}));
  EXPECT_EQ(dims(veronese_piece(r, v, 2, 1), 0, 4), (std::vector<std::size_t>{2, 2, 2, 2, 2}));
  EXPECT_TRUE(veronese_piece(residue_field(a, kJ), v, 2, 1).is_zero_in_window());
  try {
    veronese_piece(r, v, 2, 2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::bad_piece_index);
  }
}

TEST(FractionalVeronese, DimensionsAndComposition) {
  auto a = algebra({"x", "y"}, {"x*y"});
  auto r = free_module(a, {0}, 6);
  auto a2 = std::make_shared<const AlgebraTable<PrimeField>>(fractional_veronese(*a, 2));
  EXPECT_EQ(dims(fractional_veronese(r, a2, 2), 0, 6), (std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 2}));
  EXPECT_TRUE(same_table(fractional_veronese(r, a, 1), r));
  auto a6 = std::make_shared<const AlgebraTable<PrimeField>>(fractional_veronese(*a, 6));
  auto a23 = std::make_shared<const AlgebraTable<PrimeField>>(fractional_veronese(*a2, 3));
  auto twice = fractional_veronese(fractional_veronese(r, a2, 2), a23, 3);
  auto once = fractional_veronese(r, a6, 6);
  EXPECT_EQ(dims(twice, 0, 36), dims(once, 0, 36));
}

TEST(Phi, LeftInverseOfFractionalVeronese) {
  auto a = algebra({"x", "y"}, {"x*y"});
  for (int d : {2, 3}) {
    auto ad = std::make_shared<const AlgebraTable<PrimeField>>(fractional_veronese(*a, std::uint32_t(d)));
    for (const auto& m : nodal_fixtures(a)) {
      auto back = phi_functor(fractional_veronese(m, ad, d), a, d);
      EXPECT_TRUE(same_table(back, m));
    }
    auto back = phi_functor(fractional_veronese(free_module(a, {0}, kJ), ad, d), a, d);
    for (std::uint32_t k = 0; k < a->ngens(); ++k)
      for (std::uint32_t j = 0; j + 1 <= 6; ++j) EXPECT_EQ(back.act[k][j], a->mult[k][j]);
    EXPECT_TRUE(phi_functor(zero_module(ad, kJ), a, d).is_zero_in_window());
  }
}

TEST(Pushforward, FrobeniusOnNodalRing) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto t = hom_tables(frobenius_hom(r, 1), kJ);
  auto s = free_module(t.target, {0}, kJ);
  auto p = pushforward(t, s);
  EXPECT_EQ(dims(p, 0, 4), (std::vector<std::size_t>{3, 4, 4, 4, 4}));
  auto v0 = pushforward_piece(t, s, 0);
  auto v1 = pushforward_piece(t, s, 1);
  EXPECT_EQ(betti(v0, 8, 5), table({{0, 0, 1}}));
  // R/(y) + R/(x) over k[x,y]/(xy) has the periodic resolution with two generators in each (i, i)
  EXPECT_EQ(betti(v1, 5, 5), diagonal(5, 2));
  EXPECT_EQ(betti(p, 5, 5), betti(direct_sum<PrimeField>({v0, v1}, t.source), 5, 5));
  EXPECT_EQ(dims(pushforward(t, residue_field(t.target, kJ)), 0, 4), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

TEST(Pushforward, FrobeniusOnCubicTruncation) {
  auto r = ring({"x"}, {"x^3"});
  auto t = hom_tables(frobenius_hom(r, 1), kJ);
  auto s = free_module(t.target, {0}, kJ);
  EXPECT_EQ(dims(pushforward_piece(t, s, 0), 0, 4), (std::vector<std::size_t>{1, 1, 0, 0, 0}));
  EXPECT_EQ(dims(pushforward_piece(t, s, 1), 0, 4), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

TEST(Pushforward, DimensionLaw) {
  for (auto [vars, ideal] : std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>{
           {{"x", "y"}, {"x*y"}}, {{"x"}, {"x^3"}}, {{"x", "y", "z"}, {"x*y", "y*z"}}}) {
    auto r = ring(vars, ideal);
    for (std::uint32_t e : {1u, 2u}) {
      auto t = hom_tables(frobenius_hom(r, e), kJ);
      int d = int(t.d);
      for (const auto& m : {free_module(t.target, {0}, kJ), residue_field(t.target, kJ), free_module(t.target, {1}, kJ)}) {
        auto p = pushforward(t, m);
        for (int j = 0; j <= p.hi; ++j) {
          std::size_t want = 0;
          for (int i = 0; i < d; ++i) want += m.dim(d * j + i);
          EXPECT_EQ(p.dim(j), want);
        }
      }
    }
  }
}

TEST(KoszulComplex, OnSquareZeroLine) {
  auto a = algebra({"x"}, {"x^2"});
  auto s = complex_of(free_module(a, {0}, kJ));
  EXPECT_EQ(koszul_complex<PrimeField>({}, s).mods.size(), 1u);
  auto k = koszul_complex<PrimeField>({{1, element(*a, 1, "x")}}, s);
  for (int j = 0; j <= 5; ++j) {
    EXPECT_EQ(homology(k, 0, j).dim, j == 0 ? 1u : 0u);
    EXPECT_EQ(homology(k, 1, j).dim, j == 2 ? 1u : 0u);
  }
  auto cone = mapping_cone(multiplication_map(s, 1, element(*a, 1, "x")));
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 5; ++j) EXPECT_EQ(homology(cone, i, j).dim, homology(k, i, j).dim);
}

TEST(KoszulComplex, RegularSequence) {
  auto a = algebra({"x", "y"}, {});
  auto s = complex_of(free_module(a, {0}, kJ));
  auto k = koszul_complex<PrimeField>({{1, element(*a, 1, "x")}, {1, element(*a, 1, "y")}}, s);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 6; ++j) EXPECT_EQ(homology(k, i, j).dim, (i == 0 && j == 0) ? 1u : 0u);
}

TEST(MappingCone, IdentityAndZero) {
  auto a = algebra({"x", "y"}, {"x*y"});
  auto m = complex_of(cyclic(a, 1, {"x+y"}, kJ));
  auto id = multiplication_map(m, 0, unit_vector(a->field, 0));
  auto c = mapping_cone(id);
  for (int i = c.imin; i <= c.imax(); ++i)
    for (int j = 0; j <= 6; ++j) EXPECT_EQ(homology(c, i, j).dim, 0u);
  auto zero = multiplication_map(m, 1, SparseVec<PrimeField>{});
  auto z = mapping_cone(zero);
  for (int j = 0; j <= 6; ++j) {
    EXPECT_EQ(homology(z, 0, j).dim, m.dim(0, j));
    EXPECT_EQ(homology(z, 1, j).dim, j >= 1 ? m.dim(0, j - 1) : 0u);
  }
}

TEST(Homology, UnsoundWindow) {
  auto a = algebra({"x", "y"}, {"x*y"});
  auto r = minimal_free_resolution(residue_field(a, 8), 3, 8);
  auto c = resolution_complex(r);
  EXPECT_FALSE(c.complete_above);
  try {
    homology(c, 3, 5);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unsound_window);
  }
}

TEST(Property, ConeInequality) {
  for (auto [vars, ideal] : std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>{
           {{"x", "y"}, {"x*y"}}, {{"x"}, {"x^3"}}, {{"x", "y"}, {}}}) {
    auto a = algebra(vars, ideal);
    std::vector<ComplexTable<PrimeField>> xs;
    xs.push_back(complex_of(free_module(a, {0}, kJ)));
    xs.push_back(complex_of(residue_field(a, kJ)));
    xs.push_back(koszul_complex<PrimeField>({{1, element(*a, 1, vars[0])}}, complex_of(free_module(a, {0}, kJ))));
    for (const auto& x : xs)
      for (std::uint32_t s : {1u, 2u}) {
        auto theta = multiplication_map(x, s, element(*a, s, vars[0] + "^" + std::to_string(s)));
        auto c = mapping_cone(theta);
        auto hx = [&](int i, int j) -> std::size_t { return x.has(i) && j >= 0 ? homology(x, i, j).dim : 0; };
        for (int i = c.imin; i <= c.imax(); ++i)
          for (int j = 0; j <= c.hi; ++j) EXPECT_LE(homology(c, i, j).dim, hx(i, j) + hx(i - 1, j - int(s)));
      }
  }
}

TEST(Property, FunctorsAreExact) {
  auto a = algebra({"x", "y"}, {"x*y"});
  auto k = koszul_complex<PrimeField>({{1, element(*a, 1, "x")}}, complex_of(free_module(a, {0}, kJ)));
  for (int t : {1, 2}) {
    ComplexTable<PrimeField> tw = k;
    for (auto& m : tw.mods) m = twist(m, t);
    tw.hi += t;
    for (int i = 0; i <= 1; ++i)
      for (int j = 0; j + t <= kJ; ++j) EXPECT_EQ(homology(tw, i, j + t).dim, homology(k, i, j).dim);
  }
  auto a2 = std::make_shared<const AlgebraTable<PrimeField>>(fractional_veronese(*a, 2));
  auto k2 = regrade_complex(k, a2, 2);
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= kJ; ++j) {
      EXPECT_EQ(homology(k2, i, 2 * j).dim, homology(k, i, j).dim);
      EXPECT_EQ(homology(k2, i, 2 * j + 1).dim, 0u);
    }
  auto sh = shift(k, 1);
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= kJ; ++j) EXPECT_EQ(homology(sh, i - 1, j).dim, homology(k, i, j).dim);
}
