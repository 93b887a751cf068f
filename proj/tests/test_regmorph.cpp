#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fx;

namespace {

constexpr int kI = 8, kJ = 12;

}  // namespace

TEST(Order, FrobeniusOnNodalRing) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto h = frobenius_hom(r, 1);
  EXPECT_EQ(h.d, 2u);
  EXPECT_EQ(h.c, 2u);
  EXPECT_EQ(frobenius_hom(r, 2).d, 4u);
  EXPECT_EQ(identity_hom(r).d, 1u);
}

TEST(Order, Failures) {
  auto poly = ring({"x", "y"}, {});
  try {
    make_hom(poly, poly, {"x^2", "y^3"});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::order_mismatch);
  }
  auto nodal = ring({"x", "y"}, {"x*y"});
  try {
    make_hom(nodal, poly, {"x", "y"});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_well_defined);
  }
  RingDesc q;
  q.field = {0};
  q.variables = {"x"};
  auto rq = std::make_shared<const QuotientRing<RationalField>>(make_quotient_ring(RationalField{}, q, 8));
  try {
    frobenius_hom(rq, 1);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::char_zero);
  }
}

TEST(Order, CompositionMultipliesOrders) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto f = frobenius_hom(r, 1);
  auto f2 = compose(f, f);
  EXPECT_EQ(f2.d, 4u);
  EXPECT_EQ(compose(f2, f).d, 8u);
  auto p3 = ring({"x", "y"}, {}, 24, 3);
  EXPECT_EQ(compose(frobenius_hom(p3, 1), frobenius_hom(p3, 1)).d, 9u);
}

TEST(KoszulSequence, Examples) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto t = hom_tables(frobenius_hom(r, 1), kJ);
  EXPECT_EQ(koszul_sequence(t).kappa(), 0u);

  auto line = ring({"x"}, {});
  auto plane = ring({"x", "y"}, {});
  auto h = make_hom(line, plane, {"x^2"});
  EXPECT_EQ(h.c, 2u);
  auto th = hom_tables(h, kJ);
  auto seq = koszul_sequence(th);
  ASSERT_EQ(seq.kappa(), 2u);
  // S_2 = x^2, x*y, y^2 in standard order; the complement of x^2 is x*y, y^2
  EXPECT_EQ(seq.elements[0], element(*th.target, 2, "x*y"));
  EXPECT_EQ(seq.elements[1], element(*th.target, 2, "y^2"));

  auto id = hom_tables(identity_hom(plane), kJ);
  EXPECT_EQ(koszul_sequence(id).kappa(), 0u);
}

TEST(BettiOverHom, FrobeniusOnNodalRing) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto t = hom_tables(frobenius_hom(r, 1), kJ);
  auto s = free_module(t.target, {0}, kJ);
  auto b = betti_over_hom(t, s, kI, kJ);
  EXPECT_EQ(b.table.at(0, 0), 1u);
  EXPECT_EQ(b.table.at(0, 1), 2u);
  EXPECT_EQ(b.verdict.value, RegValue(1, 2));
  EXPECT_EQ(artinian_shortcut(t, s, kI, kJ).value, RegValue(1, 2));
  EXPECT_EQ(pushforward_regularity(t, s, kI, kJ).value, RegValue(0));
}

TEST(BettiOverHom, IdentityGivesOrdinaryBetti) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto t = hom_tables(identity_hom(r), kJ);
  auto k = residue_field(t.target, kJ);
  EXPECT_EQ(betti_over_hom(t, k, kI, kJ).table, betti(k, kI, kJ));
}

TEST(BettiOverHom, NonFiniteMorphism) {
  auto line = ring({"x"}, {});
  auto plane = ring({"x", "y"}, {});
  auto t = hom_tables(make_hom(line, plane, {"x^2"}), kJ);
  auto s = free_module(t.target, {0}, kJ);
  auto b = betti_over_hom(t, s, kI, kJ);
  EXPECT_EQ(b.table.at(0, 0), 1u);
  EXPECT_FALSE(fiber_is_artinian(t));
  try {
    artinian_shortcut(t, s, kI, kJ);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_artinian);
  }
}

TEST(BettiOverHom, ZeroModule) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto t = hom_tables(frobenius_hom(r, 1), kJ);
  auto v = reg_over_hom(t, zero_module(t.target, kJ), kI, kJ);
  EXPECT_FALSE(v.value.is_finite());
}

TEST(Padding, RedundantElementMultipliesPoincareSeries) {
  auto line = ring({"x"}, {});
  auto plane = ring({"x", "y"}, {});
  auto t = hom_tables(make_hom(line, plane, {"x^2"}), kJ);
  auto s = cyclic_module(t.target, *plane, {}, kJ);
  auto seq = koszul_sequence(t);
  auto padded = seq;
  padded.elements.push_back(t.map.images[0]);
  padded.minimal = false;
  auto b0 = betti_over_hom(t, seq, complex_of(s), kI, kJ);
  auto b1 = betti_over_hom(t, padded, complex_of(s), kI, kJ);
  EXPECT_EQ(PoincareWindow::of(b1.table), PoincareWindow::of(b0.table).times_binomial(2, 1));
  EXPECT_EQ(b0.verdict.value, b1.verdict.value);
}

TEST(Factorization, ArtinianFactorizationKeepsRegularity) {
  auto line = ring({"x"}, {});
  auto plane = ring({"x", "y"}, {});
  auto h = make_hom(line, plane, {"x^2"});
  auto t = hom_tables(h, kJ);
  auto f = artinian_factorization(h, t);
  EXPECT_EQ(f.source->nvars(), 3u);
  auto tf = hom_tables(f, kJ, t.target);
  EXPECT_TRUE(fiber_is_artinian(tf));
  for (auto rels : std::vector<std::vector<std::string>>{{}, {"x*y"}, {"y^2"}}) {
    auto m = cyclic_module(t.target, *plane, rels, kJ);
    auto a = reg_over_hom(t, m, kI, kJ);
    auto b = reg_over_hom(tf, m, kI, kJ);
    EXPECT_EQ(a.value, b.value) << a.value.str() << " vs " << b.value.str();
    EXPECT_EQ(b.value, artinian_shortcut(tf, m, kI, kJ).value);
  }
}

TEST(PolynomialExtension, ShiftsRegularityByOneMinusHOverDg) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto h = frobenius_hom(r, 1);
  auto t = hom_tables(h, kJ);
  auto e = polynomial_extension(h);
  auto te = hom_tables(e, kJ);
  for (auto rels : std::vector<std::vector<std::string>>{{}, {"x+y"}}) {
    auto m = cyclic_module(t.target, *r, rels, kJ);
    auto mt = cyclic_module(te.target, *e.target, rels, kJ);
    auto a = reg_over_hom(t, m, kI, kJ);
    auto b = reg_over_hom(te, mt, kI, kJ);
    EXPECT_EQ(b.value - a.value, RegValue(1, 2)) << a.value.str() << " " << b.value.str();
  }
}

TEST(Regrading, FractionalVeroneseKeepsRegularity) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto t = hom_tables(frobenius_hom(r, 1), kJ);
  auto m = cyclic_module(t.target, *r, {"x+y"}, kJ);
  auto base = reg_over_hom(t, m, kI, kJ);
  for (std::uint32_t s : {2u, 3u}) {
    auto ts = regraded_tables(t, s);
    auto ms = regrade(m, ts.target, int(s));
    auto v = reg_over_hom(ts, ms, kI, kJ * int(s));
    EXPECT_EQ(v.value, base.value) << s;
  }
}

TEST(Tower, FreeBaseCase) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto psi = frobenius_hom(r, 1);
  auto t = hom_tables(psi, kJ);
  auto s = free_module(t.target, {0}, kJ);
  auto tw = composition_tower(psi, t, s, 2, kI, kJ);
  // R^(1/d) (x)^L R = R: only index 0 carries homology, and it has the Hilbert function of R
  const auto& m2 = tw.levels[1];
  for (int j = 0; j <= kJ; ++j) {
    EXPECT_EQ(homology(m2, 0, j).dim, s.dim(j)) << j;
    if (m2.has(1)) EXPECT_EQ(homology(m2, 1, j).dim, 0u);
  }
}

TEST(Tower, FrobeniusOnNodalRing) {
  auto r = ring({"x", "y"}, {"x*y"});
  auto psi = frobenius_hom(r, 1);
  auto t = hom_tables(psi, kJ);
  auto m = cyclic_module(t.target, *r, {"x+y"}, kJ);
  auto tw = composition_tower(psi, t, m, 3, kI, kJ);
  ASSERT_EQ(tw.levels.size(), 3u);
  const auto& first = tw.verdicts[0].verdict.value;
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(tw.homs[i].d, 1u << (i + 1));
    EXPECT_FALSE(tw.verdicts[i].table.empty());
    EXPECT_TRUE(tw.verdicts[i].verdict.value.is_finite());
    if (i > 0) EXPECT_LE(tw.verdicts[i].verdict.value, tw.verdicts[i - 1].verdict.value + first);
  }
}
