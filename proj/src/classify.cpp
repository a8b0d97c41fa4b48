#include "multlab/classify.hpp"

#include "multlab/errors.hpp"
#include "multlab/lindef.hpp"
#include "multlab/resolve.hpp"
#include "multlab/series.hpp"

namespace multlab {

ClassificationReport classify_basic(const FiniteLocalAlgebra& R) {
  ClassificationReport r;
  r.length = R.dim();
  r.multiplicity = R.dim();
  for (auto h : R.filtration_dims()) r.h_at_one += static_cast<std::int64_t>(h);
  r.edim = R.nvars();
  r.codim = r.edim;
  r.min_generators = minimal_generator_count(R.presentation(), R);
  r.socle_dim = socle(R).dim();
  r.top_degree = R.top_degree();
  r.is_ci = r.min_generators == r.edim;
  r.is_gorenstein = r.socle_dim == 1;
  const std::size_t e = r.multiplicity;
  r.min_mult_cm = e == r.codim + 1;
  r.min_mult_g = r.is_gorenstein && e >= 3 && e == r.codim + 2;
  r.min_mult_ci = r.codim < 63 && e == (std::size_t{1} << r.codim);
  return r;
}

ClassificationReport classify(const FiniteLocalAlgebra& R, int cutoff) {
  ClassificationReport r = classify_basic(R);
  r.cutoff = cutoff;
  r.golod_witness = golod_witness(R, cutoff).holds();
  r.koszul_witness = linearity_defect_residue(R, cutoff).verdict == LdVerdict::Zero;
  r.froberg = froberg_check(R, cutoff);
  return r;
}

std::string to_string(SeriesSource s) {
  return s == SeriesSource::CompleteIntersection ? "complete_intersection" : "golod";
}

std::string to_string(Theorem3Case c) {
  return c == Theorem3Case::CompleteIntersection ? "complete_intersection" : "cm_golod";
}

std::pair<int, IntPoly> split_one_plus_t(const IntPoly& d) {
  IntPoly g = d;
  poly_trim(g);
  if (g.empty()) throw Error("cannot factor the zero polynomial");
  int q = 0;
  while (poly_eval(g, -1) == 0) {
    auto next = poly_div_one_plus_t(g);
    if (!next) throw Error("internal error: root at -1 without a factor 1 + t");
    g = std::move(*next);
    ++q;
  }
  return {q, g};
}

namespace {

// D(t) from the first closed form that reproduces P^R_k to the cutoff.
std::pair<SeriesSource, IntPoly> choose_denominator(const FiniteLocalAlgebra& R, int cutoff) {
  TruncSeries P = poincare_series(resolve_residue_field(R, cutoff));
  const std::size_t n = R.nvars();
  const std::size_t c = minimal_generator_count(R.presentation(), R);
  if (c == n) {
    ClosedForm ci = ci_poincare(n, c, cutoff);
    if (ci.series == P) return {SeriesSource::CompleteIntersection, ci.denominator};
  }
  ClosedForm gd = golod_poincare(koszul_homology_dims(R), cutoff);
  if (gd.series == P) return {SeriesSource::Golod, gd.denominator};
  throw NoCandidateD("neither the complete-intersection nor the Golod series matches P^R_k");
}

}  // namespace

Lemma33Report lemma33_check_d0(const FiniteLocalAlgebra& R, int cutoff) {
  auto [source, d] = choose_denominator(R, cutoff);
  auto [q, g] = split_one_plus_t(d);
  Lemma33Report r{source, d, q, g, poly_eval(g, -1), R.nvars(), R.dim(), false};
  r.ld_zero = linearity_defect_residue(R, cutoff).verdict == LdVerdict::Zero;
  return r;
}

Theorem3Report theorem3_check(const FiniteLocalAlgebra& R, int cutoff) {
  ClassificationReport c = classify_basic(R);
  Theorem3Report r{};
  r.cutoff = cutoff;
  if (c.is_ci) {
    r.which = Theorem3Case::CompleteIntersection;
    r.stmt3 = c.min_mult_ci;
  } else if (golod_witness(R, cutoff).holds()) {
    r.which = Theorem3Case::CMGolod;
    r.stmt3 = c.min_mult_cm;
  } else {
    throw Inapplicable("ring is neither a complete intersection nor witnessed Golod");
  }
  KoszulRingCertificate k = koszul_ring_check(R, cutoff);
  r.stmt1 = k.tangent_cone_koszul();
  r.stmt2 = froberg_check(R, cutoff);
  r.stmt4 = k.ld_zero;
  return r;
}

bool MultiplicityRatioReport::holds() const {
  if (!ld_zero || zero_module) return true;
  if (!numerator_polynomial || g_at_minus_one == 0) return false;
  return u_at_minus_one * static_cast<std::int64_t>(ring_length) ==
         g_at_minus_one * static_cast<std::int64_t>(module_length);
}

namespace {

MultiplicityRatioReport ratio_report(const FiniteLocalAlgebra& R, const ResolutionTrunc& F,
                                     std::size_t module_length, int cutoff) {
  MultiplicityRatioReport r{};
  r.module_label = F.module_label;
  r.ring_length = R.dim();
  r.module_length = module_length;
  r.zero_module = module_length == 0;
  r.ld_zero = linearity_defect(R, F).verdict == LdVerdict::Zero;
  IntPoly d = choose_denominator(R, cutoff).second;
  NumeratorWitness w = numerator_witness(poincare_series(F), d);
  r.numerator_polynomial = w.polynomial;
  IntPoly u = w.product, g = d;
  while (!u.empty() && poly_eval(u, -1) == 0 && poly_eval(g, -1) == 0) {
    u = *poly_div_one_plus_t(u);
    g = *poly_div_one_plus_t(g);
  }
  r.u = u;
  r.g = g;
  r.u_at_minus_one = poly_eval(u, -1);
  r.g_at_minus_one = poly_eval(g, -1);
  return r;
}

}  // namespace

MultiplicityRatioReport multiplicity_ratio_residue(const FiniteLocalAlgebra& R, int cutoff) {
  return ratio_report(R, resolve_residue_field(R, cutoff), 1, cutoff);
}

MultiplicityRatioReport multiplicity_ratio_power(const FiniteLocalAlgebra& R, int power, int cutoff) {
  if (power < 1) throw Error("power must be positive");
  std::size_t len = 0;
  const auto& h = R.filtration_dims();
  for (std::size_t i = static_cast<std::size_t>(power); i < h.size(); ++i) len += h[i];
  return ratio_report(R, resolve_maximal_ideal_power(R, power, cutoff), len, cutoff);
}

}  // namespace multlab
