#include <gtest/gtest.h>

#include <random>

#include "gradedreg/field.hpp"
#include "gradedreg/linalg.hpp"
#include "gradedreg/regvalue.hpp"

using namespace gradedreg;

namespace {

template <class F>
DenseMatrix<F> random_matrix(const F& field, std::mt19937& rng, std::size_t r, std::size_t c, int sparsity) {
  DenseMatrix<F> m(field, r, c);
  std::uniform_int_distribution<int> pick(0, 99), val(-5, 5);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pick(rng) >= sparsity) m(i, j) = field.from_integer(val(rng));
  return m;
}

// Every vector of GF(2)^n with m v = 0, by enumeration.
std::size_t brute_kernel_dim(const PrimeField& f, const DenseMatrix<PrimeField>& m) {
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << m.cols()); ++mask) {
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) {
      std::uint32_t s = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) s ^= (mask >> c & 1u) & m(r, c);
      zero = s == 0;
    }
    count += zero;
  }
  std::size_t dim = 0;
  while ((std::size_t(1) << dim) < count) ++dim;
  (void)f;
  return dim;
}

}  // namespace

TEST(Field, PrimeArithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.from_integer(-1), 6u);
  EXPECT_EQ(f.parse("1/2"), 4u);
  EXPECT_THROW(PrimeField(6), error);
  EXPECT_THROW(FieldSpec{9}.validate(), error);
}

TEST(Field, RationalsStayNormalized) {
  RationalField q;
  auto a = q.parse("4/6");
  EXPECT_EQ(q.to_string(a), "2/3");
  EXPECT_EQ(q.to_string(q.mul(a, q.parse("-3/2"))), "-1");
}

TEST(Rref, IdentityOverGF2) {
  PrimeField f(2);
  auto [red, piv] = rref(f, DenseMatrix<PrimeField>::identity(f, 2));
  EXPECT_EQ(red, DenseMatrix<PrimeField>::identity(f, 2));
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, RankOneOverGF2) {
  PrimeField f(2);
  auto m = DenseMatrix<PrimeField>::from_rows(f, {{1, 1}, {1, 1}});
  auto [red, piv] = rref(f, m);
  EXPECT_EQ(red, DenseMatrix<PrimeField>::from_rows(f, {{1, 1}, {0, 0}}));
  EXPECT_EQ(piv, (std::vector<std::size_t>{0}));
}

TEST(Rref, HandEliminationOverQ) {
  RationalField q;
  using E = RationalField::Elem;
  auto m = DenseMatrix<RationalField>::from_rows(q, {{E(2), E(4)}, {E(1), E(3)}});
  auto [red, piv] = rref(q, m);
  EXPECT_EQ(red, DenseMatrix<RationalField>::identity(q, 2));
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, SparseAndDensePathsAgree) {
  PrimeField f(5);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(f, rng, 1 + trial % 9, 1 + trial % 7, trial % 2 ? 85 : 10);
    auto a = detail::rref_dense(f, m);
    auto b = detail::rref_sparse(f, m);
    EXPECT_EQ(a.reduced, b.reduced);
    EXPECT_EQ(a.pivots, b.pivots);
  }
}

TEST(Rref, Idempotent) {
  RationalField q;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(q, rng, 1 + trial % 6, 1 + trial % 5, 40);
    auto once = rref(q, m).reduced;
    EXPECT_EQ(rref(q, once).reduced, once);
  }
}

TEST(Kernel, Examples) {
  PrimeField f(2);
  EXPECT_EQ(kernel_basis(f, DenseMatrix<PrimeField>::identity(f, 3)).cols(), 0u);
  auto z = kernel_basis(f, DenseMatrix<PrimeField>(f, 2, 3));
  EXPECT_EQ(z, DenseMatrix<PrimeField>::identity(f, 3));
  auto k = kernel_basis(f, DenseMatrix<PrimeField>::from_rows(f, {{1, 1}}));
  EXPECT_EQ(k, DenseMatrix<PrimeField>::from_rows(f, {{1}, {1}}));
}

TEST(Kernel, RankNullityAndAnnihilation) {
  PrimeField f(3);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(f, rng, 1 + trial % 8, 1 + trial % 9, trial % 3 ? 60 : 20);
    auto k = kernel_basis(f, m);
    EXPECT_EQ(rank(f, m) + k.cols(), m.cols());
    auto prod = multiply(f, m, k);
    EXPECT_EQ(prod, DenseMatrix<PrimeField>(f, m.rows(), k.cols()));
  }
}

TEST(Kernel, MatchesEnumerationOverGF2) {
  PrimeField f(2);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto m = random_matrix(f, rng, 1 + trial % 5, 1 + trial % 8, 50);
    EXPECT_EQ(kernel_basis(f, m).cols(), brute_kernel_dim(f, m));
  }
}

TEST(Kernel, ColumnEngineMatchesRrefBasis) {
  PrimeField f(7);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_matrix(f, rng, 1 + trial % 6, 1 + trial % 10, 50);
    auto k = kernel_basis(f, m);
    std::vector<SparseVec<PrimeField>> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(f, c));
    auto kk = kernel_of_columns(f, cols);
    ASSERT_EQ(kk.size(), k.cols());
    for (std::size_t c = 0; c < kk.size(); ++c) EXPECT_EQ(kk[c], k.column(f, c));
  }
}

TEST(Complement, Examples) {
  PrimeField f(2);
  auto id = DenseMatrix<PrimeField>::identity(f, 2);
  EXPECT_TRUE(column_span_complement(f, id, id).empty());
  EXPECT_EQ(column_span_complement(f, DenseMatrix<PrimeField>(f, 2, 0), id), (std::vector<std::size_t>{0, 1}));
  auto span = DenseMatrix<PrimeField>::from_rows(f, {{1}, {1}});
  EXPECT_EQ(column_span_complement(f, span, id), (std::vector<std::size_t>{0}));
}

TEST(Coordinates, ExpressInBasis) {
  PrimeField f(5);
  std::vector<SparseVec<PrimeField>> basis{{{0, 1}, {1, 2}}, {{1, 1}, {2, 1}}};
  CoordinateSystem<PrimeField> cs(f, basis);
  SparseVec<PrimeField> w;
  axpy(f, w, 3u, basis[0]);
  axpy(f, w, 2u, basis[1]);
  auto coords = cs.express(w);
  ASSERT_TRUE(coords);
  EXPECT_EQ(*coords, (SparseVec<PrimeField>{{0, 3}, {1, 2}}));
  EXPECT_FALSE(cs.express(unit_vector(f, 2)));
}

TEST(RegValue, ArithmeticAndRendering) {
  EXPECT_EQ(RegValue(2, 4).str(), "1/2");
  EXPECT_EQ(RegValue(4).str(), "4");
  EXPECT_EQ(RegValue::minus_infinity().str(), "-inf");
  EXPECT_LT(RegValue::minus_infinity(), RegValue(-100));
  EXPECT_EQ(RegValue(1, 2) + RegValue(1, 2), RegValue(1));
  EXPECT_EQ(RegValue(3, 2).ceil(), 2);
  EXPECT_EQ(RegValue(-3, 2).ceil(), -1);
  EXPECT_EQ(RegValue::parse("-7/3"), RegValue(-7, 3));
}
