#include <gtest/gtest.h>

#include "helpers.hpp"
#include "multlab/errors.hpp"
#include "multlab/generators.hpp"
#include "multlab/graded.hpp"
#include "multlab/resolve.hpp"

using namespace multlab;
using testing_util::make_ring;
using testing_util::quad;

namespace {

using Sizes = std::vector<std::size_t>;

Sizes local_betti(const ResolutionTrunc& F) { return betti_table(F).local; }

}  // namespace

TEST(ResolveResidueField, TwoSquares) {
  auto r = make_ring({"x", "y"}, {"x^2", "y^2"});
  EXPECT_EQ(local_betti(resolve_residue_field(r.R, 8)), (Sizes{1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(ResolveResidueField, CubicHypersurfacePeriodic) {
  auto r = make_ring({"x"}, {"x^3"});
  ResolutionTrunc F = resolve_residue_field(r.R, 8);
  EXPECT_EQ(local_betti(F), Sizes(9, 1));
  // differentials alternate x, x^2
  for (int i = 2; i <= 8; ++i) {
    ASSERT_EQ(F.differentials[i].size(), 1u);
    ASSERT_EQ(F.differentials[i][0].size(), 1u);
    int deg = r.R.degree(F.differentials[i][0][0].ring_index);
    EXPECT_EQ(deg, i % 2 == 1 ? 1 : 2) << "step " << i;
  }
}

TEST(ResolveResidueField, SquareZeroDoubles) {
  auto r = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  Sizes want;
  for (int i = 0; i <= 8; ++i) want.push_back(std::size_t{1} << i);
  EXPECT_EQ(local_betti(resolve_residue_field(r.R, 8)), want);
  EXPECT_EQ(local_betti(resolve_residue_field_dense(r.R, 8)), want);
}

TEST(ResolveResidueField, NonGradedRingUsesDenseEngine) {
  auto r = testing_util::corpus_ring_built("ci_nonhom");
  ResolutionTrunc F = resolve_residue_field(r.R, 6);
  EXPECT_FALSE(F.graded);
  // complete intersection of two relations: 1/(1-t)^2
  EXPECT_EQ(local_betti(F), (Sizes{1, 2, 3, 4, 5, 6, 7}));
  auto chk = verify_resolution(r.R, F);
  EXPECT_TRUE(chk.squares_to_zero && chk.minimal && chk.exact);
}

TEST(ResolveModule, SocleIdealIsResidueField) {
  auto r = make_ring({"x", "y"}, {"x^2", "y^2"});
  Vec g = r.R.normal_form(parse_polynomial("x*y", r.P.vars(), r.R.field()));
  ResolutionTrunc M = resolve_module(r.R, 1, {g}, 6, "m^2");
  EXPECT_EQ(local_betti(M), local_betti(resolve_residue_field(r.R, 6)));
  EXPECT_EQ(local_betti(resolve_maximal_ideal_power(r.R, 2, 6)), local_betti(M));
}

TEST(ResolveModule, FreeModule) {
  auto r = make_ring({"x", "y"}, {"x^2", "y^2"});
  Vec one(r.R.dim(), 0);
  one[0] = 1;
  Sizes want(7, 0);
  want[0] = 1;
  EXPECT_EQ(local_betti(resolve_module(r.R, 1, {one}, 6, "R")), want);
  EXPECT_EQ(local_betti(resolve_maximal_ideal_power(r.R, 0, 6)), want);
}

TEST(ResolveModule, MaximalIdealOfCubic) {
  auto r = make_ring({"x"}, {"x^3"});
  EXPECT_EQ(local_betti(resolve_maximal_ideal_power(r.R, 1, 8)), Sizes(9, 1));
}

TEST(ResolveModule, RankTwoSubmodule) {
  // x e1 + y e2 inside R^2 over k[x,y]/(x^2,y^2)
  auto r = make_ring({"x", "y"}, {"x^2", "y^2"});
  const std::size_t n = r.R.dim();
  Vec g(2 * n, 0);
  g[r.R.generator(0)] = 1;
  g[n + r.R.generator(1)] = 1;
  ResolutionTrunc M = resolve_module(r.R, 1 + 1, {g}, 5);
  ResolutionTrunc D = resolve_module_dense(r.R, 2, {g}, 5);
  EXPECT_EQ(local_betti(M), local_betti(D));
  auto chk = verify_resolution(r.R, M);
  EXPECT_TRUE(chk.squares_to_zero && chk.minimal && chk.exact);
}

TEST(BettiSymmetry, AnticommutatorAlgebra) {
  GradedAlgebra A = quadratic_algebra(quad({"x", "y"}, {"x*y + y*x"}), 8);
  BettiTable T = betti_table(resolve_residue_field_window(A, 4, 8));
  EXPECT_EQ(T.beta(0, 0), 1u);
  EXPECT_EQ(T.beta(1, 1), 2u);
  EXPECT_EQ(T.beta(2, 2), 1u);
  EXPECT_EQ(T.beta(3), 0u);
  EXPECT_TRUE(betti_symmetry_check(T, 2, 2));
}

TEST(BettiSymmetry, ExteriorAlgebraHasNoValidPair) {
  GradedAlgebra A = quadratic_algebra(quad({"x", "y"}, {"x*x", "y*y", "x*y + y*x"}), 4);
  BettiTable T = betti_table(resolve_residue_field(A, 6, 8));
  for (int d = 1; d <= 6; ++d)
    for (int ell = 0; ell <= 12; ++ell) EXPECT_FALSE(betti_symmetry_check(T, d, ell)) << d << "," << ell;
}

TEST(BettiSymmetry, PolynomialRingInOneVariable) {
  PrimeField F(101);
  GradedAlgebra A = quadratic_algebra(QuadraticPresentation(F, 1, Subspace(F, 1)), 8);
  BettiTable T = betti_table(resolve_residue_field(A, 4, 8));
  EXPECT_TRUE(T.graded);
  EXPECT_TRUE(betti_symmetry_check(T, 1, 1));
}

TEST(PolynomialRegularity, Examples) {
  auto ci = make_ring({"x", "y"}, {"x^2", "y^2"});
  EXPECT_EQ(polynomial_regularity(ci.R), 2);
  BettiTable T = polynomial_ring_betti(ci.R);
  EXPECT_EQ(T.beta(0, 0), 1u);
  EXPECT_EQ(T.beta(1, 2), 2u);
  EXPECT_EQ(T.beta(2, 4), 1u);

  auto msq = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  EXPECT_EQ(polynomial_regularity(msq.R), 1);
  BettiTable U = polynomial_ring_betti(msq.R);
  EXPECT_EQ(U.beta(1, 2), 3u);
  EXPECT_EQ(U.beta(2, 3), 2u);

  EXPECT_EQ(polynomial_regularity(make_ring({"x"}, {"x^2"}).R), 1);
}

TEST(ExtIntoAlgebra, FrobeniusVersusNot) {
  auto ci = make_ring({"x", "y"}, {"x^2", "y^2"});
  auto e = ext_into_algebra(associated_graded(ci.R), 3);
  EXPECT_EQ(e, (Sizes{1, 0, 0, 0}));
  auto msq = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto f = ext_into_algebra(associated_graded(msq.R), 2);
  std::size_t total = 0;
  for (auto v : f) total += v;
  EXPECT_GT(total, 1u);
}

TEST(ResolveProperty, CorpusResolutionsMinimalAndExact) {
  for (const auto& ring : corpus()) {
    auto r = testing_util::corpus_ring_built(ring.name);
    ResolutionTrunc F = resolve_residue_field(r.R, 5);
    auto chk = verify_resolution(r.R, F);
    EXPECT_TRUE(chk.squares_to_zero) << ring.name;
    EXPECT_TRUE(chk.minimal) << ring.name;
    EXPECT_TRUE(chk.exact) << ring.name;
    ResolutionTrunc M = resolve_maximal_ideal_power(r.R, 2, 4);
    auto chk2 = verify_resolution(r.R, M);
    EXPECT_TRUE(chk2.squares_to_zero && chk2.minimal && chk2.exact) << ring.name << " m^2";
  }
}

TEST(ResolveProperty, GradedRowSumsEqualDenseLocalBetti) {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    RingSpec s = random_monomial_ring(rng, 3, 3);
    FiniteLocalAlgebra R = s.build();
    ResolutionTrunc G = resolve_residue_field(R, 5);
    ResolutionTrunc D = resolve_residue_field_dense(R, 5);
    ASSERT_TRUE(G.graded) << s.to_text();
    BettiTable T = betti_table(G);
    EXPECT_EQ(T.local, betti_table(D).local) << s.to_text();
    for (int i = 0; i <= 5; ++i) {
      std::size_t sum = 0;
      for (const auto& [key, v] : T.entries)
        if (key.first == i) sum += v;
      EXPECT_EQ(sum, T.local[i]) << s.to_text();
    }
  }
}

TEST(ResolveProperty, ModuleEnginesAgreeOnPowers) {
  Rng rng(42);
  for (int t = 0; t < 12; ++t) {
    RingSpec s = random_monomial_ring(rng, 3, 3);
    FiniteLocalAlgebra R = s.build();
    for (int j = 1; j <= R.top_degree(); ++j) {
      std::vector<Vec> gens;
      for (std::size_t b = 0; b < R.dim(); ++b)
        if (R.degree(b) == j) {
          Vec v(R.dim(), 0);
          v[b] = 1;
          gens.push_back(v);
        }
      ResolutionTrunc M = resolve_module(R, 1, gens, 4);
      ResolutionTrunc D = resolve_module_dense(R, 1, gens, 4);
      EXPECT_EQ(local_betti(M), local_betti(D)) << s.to_text() << " j=" << j;
      EXPECT_EQ(local_betti(M), local_betti(resolve_maximal_ideal_power(R, j, 4)));
      auto chk = verify_resolution(R, M);
      EXPECT_TRUE(chk.squares_to_zero && chk.minimal && chk.exact) << s.to_text() << " j=" << j;
    }
  }
}
