#pragma once

#include <cstddef>
#include <vector>

#include "multlab/localalg.hpp"
#include "multlab/resolve.hpp"
#include "multlab/truncseries.hpp"

namespace multlab {

// Dimensions a_j = dim H_j(K^R) of the Koszul complex on x_1..x_n, j = 1..n.
// For artinian R the depth is 0, so codepth = edim.
struct GolodData {
  std::size_t edim = 0;
  std::vector<std::size_t> a;  // a[j - 1]

  // 1 - sum_j a_j t^{j+1}
  IntPoly denominator() const;
};

GolodData koszul_homology_dims(const FiniteLocalAlgebra& R);

// Closed-form candidate N(t) / D(t) expanded to the cutoff.
struct ClosedForm {
  IntPoly numerator;
  IntPoly denominator;
  TruncSeries series;
};

// (1 + t)^n / (1 - sum a_j t^{j+1})
ClosedForm golod_poincare(const GolodData& data, int cutoff);
// (1 + t)^n / (1 - t^2)^c
ClosedForm ci_poincare(std::size_t n, std::size_t c, int cutoff);

// P^R_k(t) = sum beta_i t^i to the cutoff.
TruncSeries poincare_series(const ResolutionTrunc& F);
// sum dim(m^{m+i} / m^{m+i+1}) t^i
TruncSeries filtration_hilbert_series(const FiniteLocalAlgebra& R, int power, int cutoff);

struct SeriesWitness {
  int cutoff;
  TruncSeries expected;
  TruncSeries computed;
  int first_mismatch;  // -1 when equal to the cutoff
  bool holds() const { return first_mismatch < 0; }
};

// Computed P^R_k against the Golod and complete-intersection candidates.
SeriesWitness golod_witness(const FiniteLocalAlgebra& R, int cutoff);
SeriesWitness ci_witness(const FiniteLocalAlgebra& R, int cutoff);

// H_R(-t) P^R_k(t) = 1 to the cutoff.
SeriesWitness froberg_witness(const FiniteLocalAlgebra& R, int cutoff);
bool froberg_check(const FiniteLocalAlgebra& R, int cutoff);

struct LevinResult {
  int power;
  bool zero_module;  // m^power = 0: both sides vanish
  SeriesWitness witness;
  bool holds() const { return zero_module || witness.holds(); }
};
// H_{m^m}(-t) P^R_k(t) = P^R_{m^m}(t) to the cutoff.
LevinResult levin_check(const FiniteLocalAlgebra& R, int power, int cutoff);

// polreg(R) + 1, the threshold past which the Levin relation holds.
int sega_bound(const FiniteLocalAlgebra& R);

// P(t) D(t) truncated to the cutoff, and the index past which every computed
// coefficient vanishes. The product is witnessed as a polynomial when at
// least two zero coefficients follow it.
struct NumeratorWitness {
  IntPoly product;
  int degree_bound;  // 1 + index of the last nonzero coefficient
  int spare;         // zero coefficients after it within the cutoff
  bool polynomial;
};
NumeratorWitness numerator_witness(const TruncSeries& P, const IntPoly& D);

}  // namespace multlab
