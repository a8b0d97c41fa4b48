#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multlab/graded.hpp"
#include "multlab/localalg.hpp"
#include "multlab/resolve.hpp"

namespace multlab {

// Entry of a linear differential: coefficient of x_var in component gen.
struct LinearEntry {
  std::uint32_t gen;
  std::uint32_t var;
  Elem value;
};
using LinearColumn = std::vector<LinearEntry>;

// Associated graded complex of the m-adic filtration of a minimal
// resolution: free R^g-modules R^g(-i)^{beta_i} with the degree-one parts of
// the original differentials.
struct LinearPartComplex {
  GradedAlgebra base;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<LinearColumn>> differentials;  // [i] : F_i -> F_{i-1}, i >= 1
  std::string module_label;
};

// Throws NonMinimalResolution if some entry is a unit.
LinearPartComplex linear_part(const ResolutionTrunc& F, const FiniteLocalAlgebra& R);

// Total dimension of H_i for 1 <= i < s, and whether d_i d_{i+1} = 0.
std::vector<std::size_t> linear_homology(const LinearPartComplex& L);
bool linear_part_squares_to_zero(const LinearPartComplex& L);

enum class LdVerdict {
  Zero,        // every H_i vanishes in the window
  LowerBound,  // H_{s-1} != 0, so ld >= s - 1
  Candidate,   // last nonzero H_v with v < s - 1: ld >= v, flagged for review
};
std::string to_string(LdVerdict v);

struct LinDefReport {
  std::string module_label;
  int hom_cutoff;
  std::vector<std::size_t> homology_dims;  // index i - 1 holds dim H_i
  LdVerdict verdict;
  int value;  // 0, the lower bound, or the candidate value
};

LinDefReport linearity_defect(const FiniteLocalAlgebra& R, const ResolutionTrunc& F);
LinDefReport linearity_defect_residue(const FiniteLocalAlgebra& R, int hom_cutoff);
LinDefReport linearity_defect_power(const FiniteLocalAlgebra& R, int power, int hom_cutoff);

struct KoszulRingCertificate {
  int cutoff;
  bool ld_zero;
  bool tangent_cone_quadratic;
  bool tangent_cone_diagonal;
  bool tangent_cone_koszul() const { return tangent_cone_quadratic && tangent_cone_diagonal; }
  bool agree() const { return ld_zero == tangent_cone_koszul(); }
};
KoszulRingCertificate koszul_ring_check(const FiniteLocalAlgebra& R, int hom_cutoff);

// ld m^j <= ld k for j = 1..m_max, read with the three-valued semantics: a
// violation needs ld k = 0 in the window and nonzero homology for m^j.
bool sega_monotonicity_check(const FiniteLocalAlgebra& R, int m_max, int hom_cutoff);

}  // namespace multlab
