#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "multlab/field.hpp"
#include "multlab/graded.hpp"
#include "multlab/linalg.hpp"
#include "multlab/poly.hpp"

namespace multlab {

// k[x_1..x_n]/(f_1..f_c) with every f_h in (x)^2, localized at the origin.
class RingPresentation {
 public:
  RingPresentation(const PrimeField& F, std::vector<std::string> vars,
                   std::vector<Polynomial> relations);

  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  std::size_t nvars() const { return vars_.size(); }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  std::vector<Polynomial> relations_;
};

RingPresentation make_presentation(std::uint32_t p, const std::vector<std::string>& vars,
                                   const std::vector<std::string>& relations);

constexpr int kDefaultDegreeCap = 12;

class FiniteLocalAlgebra {
 public:
  const RingPresentation& presentation() const { return presentation_; }
  const PrimeField& field() const { return presentation_.field(); }
  std::size_t nvars() const { return presentation_.nvars(); }
  std::size_t dim() const { return basis_.size(); }
  // dim m^i/m^{i+1} for i = 0..s
  const std::vector<std::size_t>& filtration_dims() const { return filtration_; }
  // s, the largest i with m^i != 0
  int top_degree() const { return static_cast<int>(filtration_.size()) - 1; }
  // Truncation degree at which m^{s+1} = 0 was certified.
  int certified_at() const { return certified_at_; }

  const std::vector<Monomial>& basis() const { return basis_; }
  int degree(std::size_t b) const { return basis_[b].degree(); }
  std::size_t degree_offset(int d) const;
  std::size_t generator(std::size_t k) const { return 1 + k; }

  const SparseVec& product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  Vec multiply(std::span<const Elem> a, std::span<const Elem> b) const;
  // v * (basis element b)
  Vec multiply_basis(std::span<const Elem> v, std::size_t b) const;

  Vec normal_form(const Polynomial& f) const;
  Polynomial to_polynomial(std::span<const Elem> v) const;

  // True when every product of basis elements is homogeneous of the
  // expected degree, so R coincides with its associated graded ring.
  bool is_graded() const { return graded_; }

 private:
  friend FiniteLocalAlgebra build_finite_algebra(const RingPresentation&, int);
  explicit FiniteLocalAlgebra(RingPresentation P) : presentation_(std::move(P)) {}

  RingPresentation presentation_;
  std::vector<std::size_t> filtration_;
  int certified_at_ = 0;
  std::vector<Monomial> basis_;
  std::vector<std::vector<SparseVec>> table_;
  bool graded_ = true;
  // Data for normal forms: monomials up to the truncation degree and the
  // reduced echelon basis of the ideal there.
  int trunc_ = 0;
  std::vector<Monomial> columns_;
  std::map<Monomial, std::size_t> column_index_;
  std::vector<std::size_t> basis_columns_;
  std::vector<long> column_to_basis_;
  Matrix ideal_rref_{PrimeField(2), 0, 0};
  std::vector<std::size_t> ideal_pivots_;
};

FiniteLocalAlgebra build_finite_algebra(const RingPresentation& P,
                                        int degree_cap = kDefaultDegreeCap);

GradedAlgebra associated_graded(const FiniteLocalAlgebra& R);
Subspace socle(const FiniteLocalAlgebra& R);
std::size_t minimal_generator_count(const RingPresentation& P, const FiniteLocalAlgebra& R);

// Lowest-degree homogeneous part of f.
Polynomial initial_form(const Polynomial& f);

}  // namespace multlab
