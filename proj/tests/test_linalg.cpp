#include <gtest/gtest.h>

#include <random>

#include "multlab/linalg.hpp"

using namespace multlab;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const PrimeField& F, std::size_t r, std::size_t c,
                     int zero_bias) {
  Matrix M(F, r, c);
  std::uniform_int_distribution<Elem> val(1, F.modulus() - 1);
  std::uniform_int_distribution<int> coin(0, 9);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = coin(rng) < zero_bias ? 0 : val(rng);
  return M;
}

}  // namespace

TEST(Field, ArithmeticModP) {
  PrimeField F(7);
  EXPECT_EQ(F.add(5, 4), 2u);
  EXPECT_EQ(F.sub(2, 5), 4u);
  EXPECT_EQ(F.mul(3, 5), 1u);
  EXPECT_EQ(F.inv(3), 5u);
  EXPECT_EQ(F.from_int(-1), 6u);
  EXPECT_EQ(F.symmetric(6), -1);
  for (Elem a = 1; a < 7; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
}

TEST(Field, RejectsComposite) {
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(PrimeField(100), std::exception);
}

TEST(Rank, EmptyMatrix) {
  PrimeField F(101);
  EXPECT_EQ(rank(Matrix(F, 0, 0)), 0u);
}

TEST(Rank, IdentityOverGF7) {
  PrimeField F(7);
  EXPECT_EQ(rank(Matrix::identity(F, 3)), 3u);
}

TEST(Rank, SwapMatrix) {
  PrimeField F(101);
  EXPECT_EQ(rank(Matrix::from_ints(F, {{0, 1}, {1, 0}})), 2u);
}

TEST(Rank, DependsOnCharacteristic) {
  // det = 5
  auto rows = std::vector<std::vector<long long>>{{1, 2}, {-1, 3}};
  EXPECT_EQ(rank(Matrix::from_ints(PrimeField(5), rows)), 1u);
  EXPECT_EQ(rank(Matrix::from_ints(PrimeField(101), rows)), 2u);
}

TEST(Kernel, IdentityHasZeroKernel) {
  PrimeField F(101);
  EXPECT_EQ(kernel(Matrix::identity(F, 4)).dim(), 0u);
}

TEST(Kernel, ZeroMatrixHasFullKernel) {
  PrimeField F(101);
  Subspace K = kernel(Matrix(F, 2, 3));
  EXPECT_EQ(K.dim(), 3u);
  EXPECT_EQ(K, Subspace::full(F, 3));
}

TEST(Kernel, SjodinMatrixOfTwoSquares) {
  PrimeField F(101);
  Subspace K = kernel(Matrix::from_ints(F, {{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(K, Subspace::span(F, 3, {{0, 1, 0}}));
}

TEST(OrthogonalComplement, ZeroAndFull) {
  PrimeField F(101);
  EXPECT_EQ(Subspace(F, 4).orthogonal_complement(), Subspace::full(F, 4));
  EXPECT_EQ(Subspace::full(F, 4).orthogonal_complement().dim(), 0u);
}

TEST(OrthogonalComplement, DiagonalLineOverGF5) {
  PrimeField F(5);
  Subspace U = Subspace::span(F, 2, {{1, 1}});
  EXPECT_EQ(U.orthogonal_complement(), Subspace::span(F, 2, {{1, 4}}));
}

TEST(Subspace, ReduceAndCoordinates) {
  PrimeField F(101);
  Subspace U = Subspace::span(F, 3, {{1, 2, 0}, {0, 1, 1}});
  Vec v{2, 5, 1};  // 2*(1,2,0) + (0,1,1)
  ASSERT_TRUE(U.contains(v));
  EXPECT_TRUE(is_zero(U.reduce(v)));
  Vec c = U.coordinates(v);
  Vec back(3, 0);
  for (std::size_t i = 0; i < c.size(); ++i) axpy(F, back, U.basis().row(i), c[i]);
  EXPECT_EQ(back, v);
  EXPECT_FALSE(U.contains(Vec{0, 0, 1}) && U.contains(Vec{1, 0, 0}));
}

TEST(Subspace, SumAndIntersection) {
  PrimeField F(101);
  Subspace A = Subspace::span(F, 3, {{1, 0, 0}, {0, 1, 0}});
  Subspace B = Subspace::span(F, 3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ((A + B).dim(), 3u);
  EXPECT_EQ(A.intersect(B), Subspace::span(F, 3, {{0, 1, 0}}));
  EXPECT_TRUE(A.contains(A.intersect(B)));
}

TEST(EchelonBuilder, TracksRank) {
  PrimeField F(101);
  EchelonBuilder E(F, 3);
  EXPECT_TRUE(E.insert({1, 2, 3}));
  EXPECT_TRUE(E.insert({0, 1, 1}));
  EXPECT_FALSE(E.insert({1, 3, 4}));
  EXPECT_EQ(E.rank(), 2u);
  EXPECT_TRUE(E.contains(Vec{2, 5, 7}));
}

TEST(LinalgProperty, RankNullity) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 101u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = rng() % 7, c = 1 + rng() % 7;
      Matrix M = random_matrix(rng, F, r, c, static_cast<int>(rng() % 9));
      Subspace K = kernel(M);
      EXPECT_EQ(K.dim() + rank(M), c);
      for (std::size_t i = 0; i < K.dim(); ++i) EXPECT_TRUE(is_zero(M.apply(K.basis().row(i))));
    }
  }
}

TEST(LinalgProperty, ComplementIsInvolution) {
  std::mt19937_64 rng(12);
  PrimeField F(101);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 8;
    Subspace U = Subspace::span(random_matrix(rng, F, rng() % (n + 1), n, 5));
    Subspace Uperp = U.orthogonal_complement();
    EXPECT_EQ(U.dim() + Uperp.dim(), n);
    EXPECT_EQ(Uperp.orthogonal_complement(), U);
  }
}

TEST(LinalgProperty, CanonicalAcrossSpanningSets) {
  std::mt19937_64 rng(13);
  PrimeField F(101);
  std::uniform_int_distribution<Elem> val(0, 100);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 6, k = 1 + rng() % n;
    Matrix G = random_matrix(rng, F, k, n, 3);
    // Random combinations of the generators, plus the generators shuffled.
    std::vector<Vec> other;
    for (std::size_t i = 0; i < k + 2; ++i) {
      Vec v(n, 0);
      for (std::size_t j = 0; j < k; ++j) axpy(F, v, G.row(j), val(rng));
      other.push_back(v);
    }
    for (std::size_t j = k; j-- > 0;) other.emplace_back(G.row(j).begin(), G.row(j).end());
    EXPECT_EQ(Subspace::span(G), Subspace::span(F, n, other));
  }
}

TEST(LinalgProperty, SparseRankMatchesDense) {
  std::mt19937_64 rng(14);
  PrimeField F(101);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = rng() % 12, c = 1 + rng() % 12;
    Matrix M = random_matrix(rng, F, r, c, 6 + static_cast<int>(rng() % 4));
    std::vector<SparseVec> rows(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (M(i, j)) rows[i].entries.push_back({static_cast<std::uint32_t>(j), M(i, j)});
    EXPECT_EQ(sparse_rank(F, rows), rank(M));
  }
}
