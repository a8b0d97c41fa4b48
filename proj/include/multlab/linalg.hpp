#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "multlab/field.hpp"

namespace multlab {

using Vec = std::vector<Elem>;

// Sparse vector as (index, value) pairs sorted by index, no zero values.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, Elem>> entries;
  bool empty() const { return entries.empty(); }
};

// dst += c * src over [begin, dst.size()).
void axpy(const PrimeField& F, std::span<Elem> dst, std::span<const Elem> src, Elem c,
          std::size_t begin = 0);
void scale(const PrimeField& F, std::span<Elem> v, Elem c);
void axpy_sparse(const PrimeField& F, std::span<Elem> dst, const SparseVec& src, Elem c,
                 std::size_t offset = 0);
bool is_zero(std::span<const Elem> v);

class Subspace;

class Matrix {
 public:
  Matrix(const PrimeField& F, std::size_t rows, std::size_t cols);
  static Matrix identity(const PrimeField& F, std::size_t n);
  static Matrix from_rows(const PrimeField& F, std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_ints(const PrimeField& F, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;

  void append_row(std::span<const Elem> v);
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec apply(std::span<const Elem> v) const;
  bool is_zero() const;

  // Reduced row echelon form in place; zero rows are dropped. Returns pivot columns.
  std::vector<std::size_t> rref_in_place();
  Matrix rref() const;

  bool operator==(const Matrix& o) const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

std::size_t rank(const Matrix& M);
Subspace kernel(const Matrix& M);

// A subspace of k^n stored by its reduced row echelon basis, so equal
// subspaces have identical representations.
class Subspace {
 public:
  Subspace(const PrimeField& F, std::size_t ambient);
  static Subspace full(const PrimeField& F, std::size_t ambient);
  static Subspace span(Matrix generators);
  static Subspace span(const PrimeField& F, std::size_t ambient, const std::vector<Vec>& gens);
  // Takes a matrix already in reduced row echelon form with no zero rows.
  static Subspace from_rref(Matrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const PrimeField& field() const { return basis_.field(); }

  bool contains(std::span<const Elem> v) const;
  // Normal form of v modulo the subspace (zero at every pivot column).
  Vec reduce(std::span<const Elem> v) const;
  // Coordinates of v (assumed in the subspace) in the stored basis.
  Vec coordinates(std::span<const Elem> v) const;

  Subspace orthogonal_complement() const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool contains(const Subspace& o) const;

  bool operator==(const Subspace& o) const;

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots);
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Incrementally maintained semi-echelon basis: every stored row has a leading
// 1 at its pivot and zeros at the pivots of rows stored before it.
class EchelonBuilder {
 public:
  EchelonBuilder(const PrimeField& F, std::size_t ambient);

  // Reduces v in place; returns true and stores it if it was independent.
  bool insert(Vec v);
  // Reduces v against the stored rows in place.
  void reduce(std::span<Elem> v) const;
  bool contains(std::span<const Elem> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vec> take_rows() { return std::move(rows_); }

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Rank of the span of sparse vectors, by elimination on leading entries.
// Suited to the very sparse maps of resolutions with little fill-in.
std::size_t sparse_rank(const PrimeField& F, std::vector<SparseVec> rows);

}  // namespace multlab
