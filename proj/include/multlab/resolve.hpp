#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multlab/graded.hpp"
#include "multlab/linalg.hpp"
#include "multlab/localalg.hpp"

namespace multlab {

constexpr int kDefaultHomCutoff = 8;
constexpr int kDefaultDegCutoff = 16;

// One nonzero entry of a differential column: the coefficient of ring basis
// element ring_index in component gen of the target free module.
struct DiffEntry {
  std::uint32_t gen;
  std::uint32_t ring_index;
  Elem value;
  bool operator==(const DiffEntry&) const = default;
};
using DiffColumn = std::vector<DiffEntry>;

// Minimal free resolution F_0 <- F_1 <- ... <- F_s of right modules. Column e
// of differentials[i] is the image of the e-th basis element of F_i in
// F_{i-1}; entries act by right multiplication. For a module M inside a free
// module G, differentials[0] holds the images of the generators of F_0 in G.
// Ring indices refer to the ring's global basis.
struct ResolutionTrunc {
  bool graded = false;
  int hom_cutoff = 0;
  int deg_cutoff = -1;
  // Graded mode over an infinite algebra: false when a syzygy generator
  // appeared at the internal cutoff, so more may lie beyond it.
  bool saturated = true;
  std::string module_label;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<int>> shifts;
  std::vector<std::vector<DiffColumn>> differentials;
  std::size_t ambient_rank = 0;
};

struct BettiTable {
  bool graded = false;
  std::string module_label;
  int hom_cutoff = 0;
  int deg_cutoff = -1;
  std::vector<std::size_t> local;
  std::map<std::pair<int, int>, std::size_t> entries;

  std::size_t beta(int i) const;
  std::size_t beta(int i, int j) const;
};

BettiTable betti_table(const ResolutionTrunc& F);

// Local mode. Uses the graded engine when R equals its associated graded
// ring and dense linear algebra on R^b otherwise.
ResolutionTrunc resolve_residue_field(const FiniteLocalAlgebra& R, int hom_cutoff);
ResolutionTrunc resolve_residue_field_dense(const FiniteLocalAlgebra& R, int hom_cutoff);

// Graded mode. Throws SaturationFailure if a syzygy generator appears at the
// internal cutoff of an infinite algebra.
ResolutionTrunc resolve_residue_field(const GradedAlgebra& A, int hom_cutoff, int deg_cutoff);
// Same computation restricted to internal degrees <= deg_cutoff without the
// saturation requirement: the Betti numbers beta_{ij} with j <= deg_cutoff
// are exact.
ResolutionTrunc resolve_residue_field_window(const GradedAlgebra& A, int hom_cutoff,
                                             int deg_cutoff);

// Submodule of R^rank spanned by the given vectors (length rank * dim R).
ResolutionTrunc resolve_module(const FiniteLocalAlgebra& R, std::size_t rank,
                               const std::vector<Vec>& generators, int hom_cutoff,
                               const std::string& label = "M");
ResolutionTrunc resolve_module_dense(const FiniteLocalAlgebra& R, std::size_t rank,
                                     const std::vector<Vec>& generators, int hom_cutoff,
                                     const std::string& label = "M");
// m^power as an ideal of R; power 0 gives R itself.
ResolutionTrunc resolve_maximal_ideal_power(const FiniteLocalAlgebra& R, int power,
                                            int hom_cutoff);

struct ResolutionCheck {
  bool squares_to_zero = true;
  bool minimal = true;
  bool exact = true;
};
// Checks d_i d_{i+1} = 0, entries in m, and ker d_i = im d_{i+1} for
// 1 <= i < s, all as linear algebra over k on R^b.
ResolutionCheck verify_resolution(const FiniteLocalAlgebra& R, const ResolutionTrunc& F);

bool betti_symmetry_check(const BettiTable& T, int d, int ell);

// reg of R^g over k[x_1..x_n].
int polynomial_regularity(const FiniteLocalAlgebra& R, int deg_cutoff = kDefaultDegCutoff);
BettiTable polynomial_ring_betti(const FiniteLocalAlgebra& R, int deg_cutoff = kDefaultDegCutoff);

// dim Ext^i_A(k, A) for i = 0..s over a finite graded algebra, computed from
// the cochain complex Hom_A(F, A) of the minimal resolution of k.
std::vector<std::size_t> ext_into_algebra(const GradedAlgebra& A, int s);

}  // namespace multlab
