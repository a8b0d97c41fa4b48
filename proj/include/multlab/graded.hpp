#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multlab/field.hpp"
#include "multlab/linalg.hpp"
#include "multlab/poly.hpp"

namespace multlab {

// A connected graded algebra generated in degree 1, known through degree
// cutoff(). Piece A_d has a basis in which every element of positive degree
// is parent * x_k for a basis element parent of A_{d-1}; A_1 has the
// generators x_0..x_{n-1} as its basis in order. Right multiplication by each
// generator is stored sparsely, which determines all products.
class GradedAlgebra {
 public:
  GradedAlgebra(const PrimeField& F, std::size_t ngens);

  // Appends A_{d+1} where d = cutoff(). parents[b] = (index in A_d, generator);
  // right[b][k] = image of (basis b of A_d) * x_k in A_{d+1}.
  void push_piece(std::vector<std::pair<std::size_t, std::size_t>> parents,
                  std::vector<std::vector<SparseVec>> right);

  const PrimeField& field() const { return field_; }
  std::size_t ngens() const { return ngens_; }
  int cutoff() const { return static_cast<int>(dims_.size()) - 1; }
  // True once a zero piece has been reached: every later piece is zero too.
  bool is_finite() const { return finite_; }
  int top_degree() const;
  std::size_t dim(int d) const;
  std::vector<std::size_t> dims() const { return dims_; }
  std::size_t total_dim() const;
  // Offset of A_d inside A_0 + A_1 + ... (global basis numbering).
  std::size_t offset(int d) const;
  std::pair<int, std::size_t> locate(std::size_t global) const;

  bool has_right_maps(int d) const;
  const SparseVec& right_gen(int d, std::size_t b, std::size_t k) const;
  std::pair<std::size_t, std::size_t> parent(int d, std::size_t b) const { return parents_[d][b]; }
  Word word(int d, std::size_t b) const;

  // v in A_d times x_k, result in A_{d+1}.
  Vec right_mul_gen(int d, std::span<const Elem> v, std::size_t k) const;
  // a in A_i times basis element b of A_j.
  Vec right_mul_basis(int i, std::span<const Elem> a, int j, std::size_t b) const;
  Vec multiply(int i, std::span<const Elem> a, int j, std::span<const Elem> b) const;

  std::vector<std::string> gen_names;

 private:
  PrimeField field_;
  std::size_t ngens_;
  bool finite_ = false;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> parents_;
  // right_[d][b][k], for d < cutoff()
  std::vector<std::vector<std::vector<SparseVec>>> right_;
  static const SparseVec kZero;
};

// Polynomial ring k[x_1..x_n] truncated at the given degree.
GradedAlgebra polynomial_ring(const PrimeField& F, std::size_t n, int cutoff);

// The right socle {a : a * A_+ = 0} of a finite graded algebra, as a subspace
// of the global basis.
Subspace socle(const GradedAlgebra& A);

}  // namespace multlab
