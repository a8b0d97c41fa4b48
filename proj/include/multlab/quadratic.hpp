#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multlab/graded.hpp"
#include "multlab/linalg.hpp"
#include "multlab/poly.hpp"
#include "multlab/truncseries.hpp"

namespace multlab {

// <V | W> with V = span(x_0..x_{n-1}) and W a subspace of V (x) V, where
// coordinate i*n + j of V (x) V is the word x_i x_j.
struct QuadraticPresentation {
  QuadraticPresentation(const PrimeField& F, std::size_t n, Subspace W,
                        std::vector<std::string> names = {});
  static QuadraticPresentation from_tensors(const PrimeField& F, std::size_t n,
                                            const std::vector<TensorElement>& rels,
                                            std::vector<std::string> names = {});

  const PrimeField& field() const { return relations.field(); }
  // Reduced echelon basis of W as tensors.
  std::vector<TensorElement> relation_tensors() const;

  std::size_t n_gens;
  Subspace relations;
  std::vector<std::string> names;
};

Vec tensor_vector(const TensorElement& f, std::size_t n);
TensorElement vector_tensor(const PrimeField& F, std::span<const Elem> v, std::size_t n);

// A with A_1 = V and W the kernel of V (x) V -> A_2.
QuadraticPresentation quadratic_part(const GradedAlgebra& A);
// Relations W^perp under the pairing <xi_i xi_j, x_k x_l> = delta_ik delta_jl.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& A);

struct QuadRank {
  TensorElement relation;
  std::size_t rank;
  std::size_t n_gens;
  bool maximal;
};
// Throws NonHomogeneous unless f is homogeneous of degree 2.
QuadRank relation_rank(const TensorElement& f);

// Degreewise quotient A_d = (A_{d-1} (x) V) / (A_{d-2} (x) W) through degree cutoff.
GradedAlgebra quadratic_algebra(const QuadraticPresentation& A, int cutoff);
TruncSeries hilbert_series(const GradedAlgebra& A, int cutoff);
TruncSeries hilbert_series_quadratic(const QuadraticPresentation& A, int cutoff);

struct FrobeniusCertificate {
  bool is_frobenius;
  bool is_gorenstein;
  std::size_t socle_dim;
  int sup;
};
// Throws NotFiniteDimensional unless a zero piece has been reached.
FrobeniusCertificate frobenius_check(const GradedAlgebra& A);
// Independent route: A_top is one dimensional and A_i x A_{top-i} -> A_top is
// a perfect pairing for every i.
bool frobenius_pairing_check(const GradedAlgebra& A);
// Independent route: Ext_A(k, A) is one dimensional in total through
// homological degree s.
bool gorenstein_ext_check(const GradedAlgebra& A, int s);
// For finite B with top degree 2: B_1 x B_1 -> B_2 nondegenerate on both sides
// and dim B_2 = 1.
bool top_pairing_nondegenerate(const GradedAlgebra& B);

struct KoszulNumericCertificate {
  int cutoff;
  bool series_identity_ok;
  int series_failure_degree;  // -1 when the identity holds through cutoff
  bool diagonal_betti_ok;
  int first_off_diagonal_i;  // -1 when none
  int first_off_diagonal_j;
};
KoszulNumericCertificate koszul_numeric_check(const QuadraticPresentation& A, int cutoff);

struct LeftShapeCertificate {
  bool g_span_degree_one;
  bool exact;
  bool injective;
  bool is_resolution() const { return g_span_degree_one && exact && injective; }
};
// The complex 0 -> A(-2) -[x_1..x_m]-> A(-1)^m -[g_1..g_m]^T-> A of left
// modules for a single relation f = sum_j x_j g_j, tested degreewise
// through cutoff.
LeftShapeCertificate left_resolution_shape(const QuadraticPresentation& A, int cutoff);

}  // namespace multlab
