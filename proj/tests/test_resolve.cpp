#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fx;

TEST(Resolve, ResidueFieldOfPolynomialRing) {
  auto a = algebra({"x", "y"}, {});
  auto r = minimal_free_resolution(residue_field(a, 12), 8, 12);
  EXPECT_EQ(betti_table(r), table({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  auto v = regularity_of(r);
  EXPECT_EQ(v.value, RegValue(0));
  EXPECT_TRUE(v.termination_certified);
}

TEST(Resolve, ResidueFieldOfCubicTruncation) {
  auto a = algebra({"x"}, {"x^3"});
  auto b = betti(residue_field(a, 12), 8, 12);
  EXPECT_EQ(b, table({{0, 0, 1}, {1, 1, 1}, {2, 3, 1}, {3, 4, 1}, {4, 6, 1}, {5, 7, 1}, {6, 9, 1}, {7, 10, 1}, {8, 12, 1}}));
  auto v = regularity(b, 1);
  EXPECT_EQ(v.value, RegValue(4));
  EXPECT_TRUE(v.boundary_attained);
}

TEST(Resolve, ResidueFieldOfNodalRing) {
  auto a = algebra({"x", "y"}, {"x*y"});
  auto b = betti(residue_field(a, 12), 8, 12);
  BettiTable want;
  want.add(0, 0);
  for (int i = 1; i <= 8; ++i) want.add(i, i, 2);
  EXPECT_EQ(b, want);
}

TEST(BarOracle, MatchesEngineOnSmallFixtures) {
  auto p = algebra({"x", "y"}, {});
  auto c = algebra({"x"}, {"x^3"});
  auto n = algebra({"x", "y"}, {"x*y"});
  for (auto a : {p, c, n}) {
    auto k = residue_field(a, 12);
    EXPECT_EQ(bar_tor_oracle(k, 4, 8), betti(k, 4, 8));
  }
  auto m = cyclic(n, 1, {"x"}, 12);
  EXPECT_EQ(bar_tor_oracle(m, 4, 8), betti(m, 4, 8));
}

TEST(Tensor, TorThroughResolutionOfK) {
  auto n = algebra({"x", "y"}, {"x*y"});
  auto m = cyclic(n, 1, {"x"}, 12);
  EXPECT_EQ(tor_table(complex_of(m), 6, 10), betti(m, 6, 10));
  auto p = algebra({"x", "y"}, {});
  auto k = residue_field(p, 12);
  auto t = derived_tensor(complex_of(k), complex_of(k), 4, 10);
  EXPECT_EQ(homology(t, 0, 0).dim, 1u);
  EXPECT_EQ(homology(t, 1, 1).dim, 2u);
  EXPECT_EQ(homology(t, 2, 2).dim, 1u);
}

TEST(Koszul, Verdicts) {
  EXPECT_TRUE(is_koszul(algebra({"x", "y"}, {}), 8, 12).koszul_up_to_window);
  auto cubic = is_koszul(algebra({"x"}, {"x^3"}), 8, 12);
  EXPECT_FALSE(cubic.koszul_up_to_window);
  EXPECT_EQ(cubic.witness, (std::pair{2, 3}));
  EXPECT_TRUE(is_koszul(algebra({"x", "y"}, {"x^2", "x*y", "y^2"}), 8, 12).koszul_up_to_window);
}

TEST(Lind, Examples) {
  auto n = algebra({"x", "y"}, {"x*y"});
  EXPECT_EQ(lind(minimal_free_resolution(residue_field(n, 12), 8, 12)).value, 0);
  EXPECT_EQ(lind(minimal_free_resolution(free_module(n, {0, 2}, 12), 8, 12)).value, 0);
  EXPECT_EQ(lind(minimal_free_resolution(cyclic(n, 2, {"x^2 + y^2"}, 12), 8, 12)).value, 1);
  auto c = algebra({"x"}, {"x^3"});
  EXPECT_GT(*lind(minimal_free_resolution(residue_field(c, 12), 8, 12)).value, 0);
}
