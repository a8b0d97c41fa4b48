#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "multlab/linalg.hpp"
#include "multlab/localalg.hpp"
#include "multlab/quadratic.hpp"
#include "multlab/truncseries.hpp"

namespace multlab {

// Degree-2 relations of the Ext-algebra: generators xi_1..xi_n dual to the
// variables, relations sum b_ij (xi_i xi_j + xi_j xi_i) + sum b_ii xi_i xi_i
// for b in the kernel of the matrix of quadratic coefficients.
struct SjodinPresentation {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> columns;  // (i, j), i <= j
  Matrix coeff_matrix;
  Subspace relation_space;
  std::vector<std::string> names;

  QuadraticPresentation algebra() const;
};

// Throws NonMinimalPresentation unless the nonzero relations of P minimally
// generate the ideal.
SjodinPresentation sjodin_presentation(const RingPresentation& P, const FiniteLocalAlgebra& R);

struct ExtComparison {
  SjodinPresentation sjodin;
  QuadraticPresentation dual_of_quadratic_part;
  int cutoff;
  TruncSeries ext_hilbert;  // beta_i(k) over R
  TruncSeries sjodin_hilbert;
  bool relation_spaces_equal;
  bool hilbert_match;  // witness that the Ext-algebra is quadratic
  int first_mismatch;  // -1 when none
  bool match() const { return relation_spaces_equal && hilbert_match; }
};
ExtComparison ext_dual_comparison(const RingPresentation& P, const FiniteLocalAlgebra& R, int cutoff);

struct Theorem1Report {
  int cutoff;
  std::size_t edim, length, socle_dim;
  int top_degree;
  std::size_t sjodin_relations;
  std::size_t relation_rank;  // 0 unless there is exactly one relation
  bool gldim2_witness;
  bool ext_match;
  bool stmt1, stmt2, stmt3;
  bool consistent() const { return stmt1 == stmt2 && stmt2 == stmt3; }
};
// Throws EmbeddingDimensionTooSmall when edim < 2.
Theorem1Report theorem1_check(const RingPresentation& P, const FiniteLocalAlgebra& R, int cutoff);

struct Theorem2Report {
  int cutoff;
  std::size_t m, length, min_generators;
  bool complete_intersection;
  bool gldim_witness;
  bool ext_match;
  bool koszul_witness;
  bool growth_witness;
  bool dual_frobenius;
  bool stmt1, stmt2, stmt2p, stmt3, stmt3p;
  bool consistent() const {
    return stmt1 == stmt2 && stmt2 == stmt2p && stmt2p == stmt3 && stmt3 == stmt3p;
  }
};
Theorem2Report theorem2_check(const RingPresentation& P, const FiniteLocalAlgebra& R, int cutoff);

// Throws HypothesisViolation unless R is Gorenstein with m^3 = 0 and edim >= 2.
bool levin_avramov_check(const RingPresentation& P, const FiniteLocalAlgebra& R);

}  // namespace multlab
