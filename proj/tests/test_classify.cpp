#include <gtest/gtest.h>

#include "helpers.hpp"
#include "multlab/classify.hpp"
#include "multlab/errors.hpp"
#include "multlab/generators.hpp"

using namespace multlab;
using testing_util::corpus_ring_built;
using testing_util::make_ring;

TEST(Classify, TwoSquares) {
  auto r = make_ring({"x", "y"}, {"x^2", "y^2"});
  ClassificationReport c = classify(r.R, 8);
  EXPECT_EQ(c.multiplicity, 4u);
  EXPECT_EQ(c.h_at_one, 4);
  EXPECT_EQ(c.codim, 2u);
  EXPECT_TRUE(c.is_ci);
  EXPECT_TRUE(c.is_gorenstein);
  EXPECT_TRUE(c.min_mult_ci);
  EXPECT_TRUE(c.min_mult_g);
  EXPECT_FALSE(c.min_mult_cm);
  EXPECT_TRUE(c.koszul_witness);
  EXPECT_TRUE(c.froberg);
  EXPECT_FALSE(c.golod_witness);
}

TEST(Classify, SquareZero) {
  auto r = make_ring({"x", "y"}, {"x^2", "x*y", "y^2"});
  ClassificationReport c = classify(r.R, 8);
  EXPECT_EQ(c.multiplicity, 3u);
  EXPECT_TRUE(c.min_mult_cm);
  EXPECT_FALSE(c.is_gorenstein);
  EXPECT_FALSE(c.is_ci);
  EXPECT_TRUE(c.golod_witness);
}

TEST(Classify, GorensteinMinimalMultiplicity) {
  auto r = corpus_ring_built("gor5");
  ClassificationReport c = classify_basic(r.R);
  EXPECT_EQ(c.multiplicity, 5u);
  EXPECT_EQ(c.codim, 3u);
  EXPECT_EQ(c.min_generators, 5u);
  EXPECT_TRUE(c.min_mult_g);
  EXPECT_FALSE(c.is_ci);
  EXPECT_TRUE(c.bounds_hold());
}

TEST(Lemma33, Examples) {
  Lemma33Report a = lemma33_check_d0(make_ring({"x", "y"}, {"x^2", "y^2"}).R, 8);
  EXPECT_EQ(a.source, SeriesSource::CompleteIntersection);
  EXPECT_EQ(a.d, (IntPoly{1, 0, -2, 0, 1}));
  EXPECT_EQ(a.q, 2);
  EXPECT_EQ(a.g, (IntPoly{1, -2, 1}));
  EXPECT_EQ(a.g_at_minus_one, 4);
  EXPECT_TRUE(a.ld_zero && a.conclusion());

  Lemma33Report b = lemma33_check_d0(make_ring({"x", "y"}, {"x^2", "x*y", "y^2"}).R, 8);
  EXPECT_EQ(b.source, SeriesSource::Golod);
  EXPECT_EQ(b.d, (IntPoly{1, 0, -3, -2}));
  EXPECT_EQ(b.q, 2);
  EXPECT_EQ(b.g, (IntPoly{1, -2}));
  EXPECT_EQ(b.g_at_minus_one, 3);
  EXPECT_TRUE(b.conclusion());

  Lemma33Report c = lemma33_check_d0(make_ring({"x"}, {"x^2"}).R, 8);
  EXPECT_EQ(c.d, (IntPoly{1, 0, -1}));
  EXPECT_EQ(c.g_at_minus_one, 2);
  EXPECT_TRUE(c.conclusion());
}

TEST(Lemma33, HypothesisFailureIsVacuous) {
  Lemma33Report r = lemma33_check_d0(make_ring({"x"}, {"x^3"}).R, 8);
  EXPECT_FALSE(r.ld_zero);
  EXPECT_FALSE(r.conclusion());
  EXPECT_TRUE(r.holds());
}

TEST(Lemma33, NoCandidateForGorensteinNonCI) {
  EXPECT_THROW(lemma33_check_d0(corpus_ring_built("gor5").R, 8), NoCandidateD);
}

TEST(SplitOnePlusT, Factors) {
  auto [q, g] = split_one_plus_t(IntPoly{1, 0, -3, -2});
  EXPECT_EQ(q, 2);
  EXPECT_EQ(g, (IntPoly{1, -2}));
  EXPECT_THROW(split_one_plus_t(IntPoly{}), Error);
}

TEST(Theorem3, Examples) {
  Theorem3Report a = theorem3_check(make_ring({"x", "y"}, {"x^2", "y^2"}).R, 8);
  EXPECT_EQ(a.which, Theorem3Case::CompleteIntersection);
  EXPECT_TRUE(a.stmt1 && a.stmt2 && a.stmt3 && a.stmt4);

  Theorem3Report b = theorem3_check(make_ring({"x"}, {"x^3"}).R, 8);
  EXPECT_EQ(b.which, Theorem3Case::CompleteIntersection);
  EXPECT_FALSE(b.stmt1 || b.stmt2 || b.stmt3 || b.stmt4);

  Theorem3Report c = theorem3_check(make_ring({"x", "y"}, {"x^2", "x*y", "y^2"}).R, 8);
  EXPECT_EQ(c.which, Theorem3Case::CMGolod);
  EXPECT_TRUE(c.stmt1 && c.stmt2 && c.stmt3 && c.stmt4);
}

TEST(Theorem3, InapplicableOutsideBothClasses) {
  EXPECT_THROW(theorem3_check(corpus_ring_built("gor5").R, 8), Inapplicable);
}

TEST(MultiplicityRatio, ResidueFieldAndSquareOfMaximalIdeal) {
  int checked = 0;
  for (const auto& ring : corpus()) {
    auto r = corpus_ring_built(ring.name);
    try {
      MultiplicityRatioReport k = multiplicity_ratio_residue(r.R, 8);
      EXPECT_TRUE(k.holds()) << ring.name;
      MultiplicityRatioReport m2 = multiplicity_ratio_power(r.R, 2, 8);
      EXPECT_TRUE(m2.holds()) << ring.name;
      if (k.ld_zero) ++checked;
    } catch (const NoCandidateD&) {
    }
  }
  EXPECT_GE(checked, 5);
}

TEST(MultiplicityRatio, TwoSquaresResidueField) {
  MultiplicityRatioReport r = multiplicity_ratio_residue(make_ring({"x", "y"}, {"x^2", "y^2"}).R, 8);
  EXPECT_TRUE(r.ld_zero);
  EXPECT_TRUE(r.numerator_polynomial);
  // P_k = 1/(1-t)^2 after cancelling (1+t)^2
  EXPECT_EQ(r.u, (IntPoly{1}));
  EXPECT_EQ(r.g_at_minus_one, 4);
  EXPECT_EQ(r.u_at_minus_one * 4, r.g_at_minus_one * 1);
}

namespace {

// Pure powers keep the ring artinian; the binomials are random.
RingSpec random_binomial_ring(Rng& rng) {
  RingSpec s;
  const std::size_t n = 1 + rng() % 4;
  s.vars = default_var_names(n);
  for (std::size_t i = 0; i < n; ++i) s.relations.push_back(s.vars[i] + "^" + std::to_string(2 + rng() % 2));
  const int extra = static_cast<int>(rng() % 3);
  auto monomial = [&](int d) {
    std::string m;
    for (int k = 0; k < d; ++k) m += (k ? "*" : "") + s.vars[rng() % n];
    return m;
  };
  for (int e = 0; e < extra; ++e) {
    int d = 2 + static_cast<int>(rng() % 2);
    s.relations.push_back(monomial(d) + " - " + std::to_string(1 + rng() % 100) + "*" + monomial(d));
  }
  return s;
}

}  // namespace

TEST(ClassifyProperty, MultiplicityBoundsOnRandomRings) {
  Rng rng(81);
  int gor = 0, ci = 0;
  for (int t = 0; t < 40; ++t) {
    RingSpec s = t % 2 ? random_monomial_ring(rng, 4, 4) : random_binomial_ring(rng);
    FiniteLocalAlgebra R = s.build();
    ClassificationReport c = classify_basic(R);
    EXPECT_TRUE(c.abhyankar_bound()) << s.to_text();
    EXPECT_TRUE(c.gorenstein_bound()) << s.to_text();
    EXPECT_TRUE(c.ci_bound()) << s.to_text();
    EXPECT_EQ(c.h_at_one, static_cast<std::int64_t>(c.multiplicity));
    gor += c.is_gorenstein;
    ci += c.is_ci;
  }
  EXPECT_GT(gor, 0);
  EXPECT_GT(ci, 0);
}

TEST(ClassifyProperty, Theorem3ConsistentOnCorpusAndRandomCIs) {
  for (const auto& ring : corpus()) {
    auto r = corpus_ring_built(ring.name);
    try {
      EXPECT_TRUE(theorem3_check(r.R, 6).consistent()) << ring.name;
    } catch (const Inapplicable&) {
    }
  }
  Rng rng(82);
  for (int t = 0; t < 8; ++t) {
    RingSpec s;
    const std::size_t n = 1 + rng() % 3;
    s.vars = default_var_names(n);
    for (std::size_t i = 0; i < n; ++i) s.relations.push_back(s.vars[i] + "^" + std::to_string(2 + rng() % 2));
    EXPECT_TRUE(theorem3_check(s.build(), 6).consistent()) << s.to_text();
  }
}
