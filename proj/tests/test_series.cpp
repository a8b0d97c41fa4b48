#include <gtest/gtest.h>

#include "helpers.hpp"
#include "multlab/errors.hpp"
#include "multlab/generators.hpp"
#include "multlab/resolve.hpp"
#include "multlab/series.hpp"

using namespace multlab;
using testing_util::coeffs;
using testing_util::corpus_ring_built;
using testing_util::make_ring;

namespace {

using Coeffs = std::vector<long long>;
using Sizes = std::vector<std::size_t>;

}  // namespace

TEST(TruncSeries, Arithmetic) {
  TruncSeries a(IntPoly{1, -1}, 5);
  TruncSeries inv = a.inverse();
  EXPECT_EQ(coeffs(inv), Coeffs(6, 1));
  EXPECT_TRUE((a * inv).is_one());
  EXPECT_EQ(coeffs(a.negate_variable()), (Coeffs{1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(coeffs(a.truncated(2)), (Coeffs{1, -1, 0}));
  EXPECT_THROW(TruncSeries(IntPoly{2, 1}, 3).inverse(), Error);
}

TEST(TruncSeries, OverflowIsReported) {
  TruncSeries big(IntPoly{1, -(std::int64_t{1} << 40)}, 4);
  EXPECT_THROW(big.inverse(), SeriesOverflow);
}

TEST(IntPoly, DivisionByOnePlusT) {
  auto q = poly_div_one_plus_t(IntPoly{1, 0, -1});
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, (IntPoly{1, -1}));
  EXPECT_FALSE(poly_div_one_plus_t(IntPoly{1, 1, 1}));
  EXPECT_EQ(poly_pow(IntPoly{1, 1}, 3), (IntPoly{1, 3, 3, 1}));
  EXPECT_EQ(poly_eval(IntPoly{1, 0, -3, -2}, -1), 0);
}

TEST(KoszulHomology, Examples) {
  EXPECT_EQ(koszul_homology_dims(make_ring({"x", "y"}, {"x^2", "x*y", "y^2"}).R).a, (Sizes{3, 2}));
  EXPECT_EQ(koszul_homology_dims(make_ring({"x"}, {"x^2"}).R).a, (Sizes{1}));
  EXPECT_EQ(koszul_homology_dims(make_ring({"x", "y"}, {"x^2", "y^2"}).R).a, (Sizes{2, 1}));
}

TEST(KoszulHomology, CompleteIntersectionsGiveExteriorAlgebras) {
  // H(K) of a CI with c relations is exterior on c classes: a_j = C(c, j).
  auto r = make_ring({"x", "y", "z"}, {"x^2", "y^2", "z^2"});
  EXPECT_EQ(koszul_homology_dims(r.R).a, (Sizes{3, 3, 1}));
}

TEST(GolodPoincare, SquareZeroMatches) {
  auto r = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  SeriesWitness w = golod_witness(r.R, 8);
  EXPECT_TRUE(w.holds());
  EXPECT_EQ(w.computed[8], 256);
  EXPECT_EQ(golod_poincare(koszul_homology_dims(r.R), 8).denominator, (IntPoly{1, 0, -3, -2}));
}

TEST(GolodPoincare, CompleteIntersectionDiffersAtThree) {
  auto r = make_ring({"x", "y"}, {"x^2", "y^2"});
  SeriesWitness w = golod_witness(r.R, 8);
  EXPECT_FALSE(w.holds());
  EXPECT_EQ(w.first_mismatch, 3);
}

TEST(GolodPoincare, EmptyDataGivesOne) {
  EXPECT_EQ(coeffs(golod_poincare(GolodData{}, 4).series), (Coeffs{1, 0, 0, 0, 0}));
}

TEST(CiPoincare, Examples) {
  EXPECT_EQ(coeffs(ci_poincare(2, 2, 5).series), (Coeffs{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(coeffs(ci_poincare(1, 1, 5).series), Coeffs(6, 1));
  EXPECT_EQ(coeffs(ci_poincare(0, 0, 3).series), (Coeffs{1, 0, 0, 0}));
  EXPECT_EQ(ci_poincare(2, 2, 5).denominator, (IntPoly{1, 0, -2, 0, 1}));
}

TEST(Froberg, Examples) {
  EXPECT_TRUE(froberg_check(make_ring({"x", "y"}, {"x^2", "y^2"}).R, 8));
  auto cubic = make_ring({"x"}, {"x^3"});
  SeriesWitness w = froberg_witness(cubic.R, 8);
  EXPECT_FALSE(w.holds());
  EXPECT_EQ(w.first_mismatch, 2);
}

TEST(Levin, Examples) {
  auto ci = make_ring({"x", "y"}, {"x^2", "y^2"});
  LevinResult a = levin_check(ci.R, 2, 8);
  EXPECT_FALSE(a.zero_module);
  EXPECT_TRUE(a.holds());
  LevinResult b = levin_check(make_ring({"x"}, {"x^3"}).R, 3, 8);
  EXPECT_TRUE(b.zero_module);
  EXPECT_TRUE(b.holds());
  LevinResult c = levin_check(make_ring({"x", "y"}, {"x^2", "x*y", "y^2"}).R, 1, 8);
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.witness.computed[3], 16);
}

TEST(Levin, PowerZeroIsFroberg) {
  for (const char* name : {"ci22", "hyp3", "golod_xy"}) {
    auto r = corpus_ring_built(name);
    EXPECT_EQ(levin_check(r.R, 0, 6).holds(), froberg_check(r.R, 6)) << name;
  }
}

TEST(Levin, FailsBelowThresholdForCubic) {
  auto r = make_ring({"x"}, {"x^3"});
  EXPECT_EQ(sega_bound(r.R), 3);
  EXPECT_FALSE(levin_check(r.R, 1, 8).holds());
}

TEST(SegaBound, Examples) {
  EXPECT_EQ(sega_bound(make_ring({"x", "y"}, {"x^2", "y^2"}).R), 3);
  EXPECT_EQ(sega_bound(make_ring({"x", "y"}, {"x^2", "x*y", "y^2"}).R), 2);
  EXPECT_EQ(sega_bound(make_ring({"x"}, {"x^2"}).R), 2);
}

TEST(FiltrationSeries, PowersShiftTheHilbertFunction) {
  auto r = corpus_ring_built("gor5");
  EXPECT_EQ(coeffs(filtration_hilbert_series(r.R, 0, 3)), (Coeffs{1, 3, 1, 0}));
  EXPECT_EQ(coeffs(filtration_hilbert_series(r.R, 1, 3)), (Coeffs{3, 1, 0, 0}));
  EXPECT_EQ(coeffs(filtration_hilbert_series(r.R, 3, 3)), (Coeffs{0, 0, 0, 0}));
}

TEST(RationalCandidate, RecoversGeometricSeries) {
  auto r = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  auto c = rational_candidate(poincare_series(resolve_residue_field(r.R, 8)));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->numerator, (IntPoly{1}));
  EXPECT_EQ(c->denominator, (IntPoly{1, -2}));
}

TEST(SeriesProperty, InverseOfUnitSeries) {
  Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    int cutoff = static_cast<int>(rng() % 10);
    IntPoly c(cutoff + 1);
    c[0] = (rng() % 2) ? 1 : -1;
    for (int i = 1; i <= cutoff; ++i) c[i] = static_cast<std::int64_t>(rng() % 7) - 3;
    TruncSeries s(c, cutoff);
    EXPECT_TRUE((s * s.inverse()).is_one()) << s.to_string();
    EXPECT_EQ(s.inverse().inverse(), s);
  }
}

TEST(SeriesProperty, ClosedFormsOnCorpus) {
  // CI rings match the CI form, Golod rings the Golod form, and only
  // hypersurfaces match both.
  int ci = 0, golod = 0;
  for (const auto& ring : corpus()) {
    auto r = corpus_ring_built(ring.name);
    const std::size_t c = minimal_generator_count(r.P, r.R);
    const bool is_ci = c == r.R.nvars();
    const bool ci_match = ci_witness(r.R, 8).holds();
    const bool golod_match = golod_witness(r.R, 8).holds();
    if (is_ci) {
      EXPECT_TRUE(ci_match) << ring.name;
      ++ci;
    }
    if (golod_match) ++golod;
    if (ci_match && golod_match) {
      EXPECT_EQ(c, 1u) << ring.name;
    }
  }
  EXPECT_GE(ci, 5);
  EXPECT_GE(golod, 3);
}

TEST(SeriesProperty, NumeratorPolynomialForGolodRings) {
  int rings = 0;
  for (const auto& ring : corpus()) {
    auto r = corpus_ring_built(ring.name);
    if (!golod_witness(r.R, 8).holds()) continue;
    ++rings;
    IntPoly D = koszul_homology_dims(r.R).denominator();
    EXPECT_TRUE(numerator_witness(poincare_series(resolve_residue_field(r.R, 8)), D).polynomial) << ring.name;
    for (int j = 1; j <= 2; ++j) {
      if (j > r.R.top_degree()) continue;
      auto w = numerator_witness(poincare_series(resolve_maximal_ideal_power(r.R, j, 8)), D);
      EXPECT_TRUE(w.polynomial) << ring.name << " m^" << j;
    }
  }
  EXPECT_GE(rings, 3);
}

TEST(SeriesProperty, LevinPastThresholdOnRandomRings) {
  Rng rng(72);
  for (int t = 0; t < 10; ++t) {
    RingSpec s = random_monomial_ring(rng, 3, 3);
    FiniteLocalAlgebra R = s.build();
    for (int m = sega_bound(R); m <= R.top_degree() + 1; ++m)
      EXPECT_TRUE(levin_check(R, m, 5).holds()) << s.to_text() << " m=" << m;
  }
}
