#include "multlab/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "multlab/errors.hpp"

namespace multlab {

namespace {

// Barrett reduction for x < 2^32 when p < 2^16.
struct SmallReducer {
  std::uint32_t p;
  std::uint64_t m;
  explicit SmallReducer(std::uint32_t p_) : p(p_), m((std::uint64_t{1} << 32) / p_) {}
  std::uint32_t operator()(std::uint32_t x) const {
    std::uint32_t q = static_cast<std::uint32_t>((x * m) >> 32);
    std::uint32_t r = x - q * p;
    return r >= p ? r - p : r;
  }
};

}  // namespace

void axpy(const PrimeField& F, std::span<Elem> dst, std::span<const Elem> src, Elem c,
          std::size_t begin) {
  if (c == 0) return;
  const std::size_t n = dst.size();
  const std::uint32_t p = F.modulus();
  Elem* d = dst.data();
  const Elem* s = src.data();
  if (p < (1u << 16)) {
    const SmallReducer red(p);
    for (std::size_t i = begin; i < n; ++i) d[i] = red(d[i] + c * s[i]);
  } else {
    for (std::size_t i = begin; i < n; ++i)
      d[i] = static_cast<Elem>((d[i] + static_cast<std::uint64_t>(c) * s[i]) % p);
  }
}

void scale(const PrimeField& F, std::span<Elem> v, Elem c) {
  for (auto& x : v) x = F.mul(x, c);
}

void axpy_sparse(const PrimeField& F, std::span<Elem> dst, const SparseVec& src, Elem c,
                 std::size_t offset) {
  if (c == 0) return;
  for (const auto& [i, v] : src.entries) {
    Elem& d = dst[offset + i];
    d = F.add(d, F.mul(c, v));
  }
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Matrix::Matrix(const PrimeField& F, std::size_t rows, std::size_t cols)
    : field_(F), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const PrimeField& F, std::size_t n) {
  Matrix M(F, n, n);
  for (std::size_t i = 0; i < n; ++i) M(i, i) = 1;
  return M;
}

Matrix Matrix::from_rows(const PrimeField& F, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix M(F, 0, cols);
  M.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) M.append_row(r);
  return M;
}

Matrix Matrix::from_ints(const PrimeField& F, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix M(F, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = F.from_int(rows[r][c]);
  }
  return M;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) throw Error("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix T(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) T(c, r) = (*this)(r, c);
  return T;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
  Matrix P(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) axpy(field_, P.row(r), o.row(k), (*this)(r, k));
  return P;
}

Vec Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw Error("vector length mismatch");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto row_r = row(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += static_cast<std::uint64_t>(row_r[c]) * v[c] % field_.modulus();
    }
    out[r] = static_cast<Elem>(acc % field_.modulus());
  }
  return out;
}

bool Matrix::is_zero() const { return multlab::is_zero(data_); }

std::vector<std::size_t> Matrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t r = rank; r < rows_; ++r)
      if ((*this)(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv == rows_) continue;
    if (piv != rank)
      std::swap_ranges(row(piv).begin() + c, row(piv).end(), row(rank).begin() + c);
    Elem inv = field_.inv((*this)(rank, c));
    if (inv != 1) {
      auto pr = row(rank);
      for (std::size_t j = c; j < cols_; ++j) pr[j] = field_.mul(pr[j], inv);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      Elem f = (*this)(r, c);
      if (f != 0) axpy(field_, row(r), row(rank), field_.neg(f), c);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows_ = rank;
  data_.resize(rows_ * cols_);
  return pivots;
}

Matrix Matrix::rref() const {
  Matrix M = *this;
  M.rref_in_place();
  return M;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::size_t rank(const Matrix& M) {
  // Eliminate on the shorter side.
  if (M.rows() > M.cols()) return rank(M.transpose());
  EchelonBuilder b(M.field(), M.cols());
  for (std::size_t r = 0; r < M.rows(); ++r) {
    auto row = M.row(r);
    b.insert(Vec(row.begin(), row.end()));
  }
  return b.rank();
}

Subspace kernel(const Matrix& M) {
  const PrimeField& F = M.field();
  const std::size_t n = M.cols();
  // Eliminating with the column order reversed makes the kernel basis come
  // out directly in reduced echelon form in the original order.
  Matrix R(F, M.rows(), n);
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) R(r, n - 1 - c) = M(r, c);
  std::vector<std::size_t> piv = R.rref_in_place();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;

  Matrix K(F, n - piv.size(), n);
  std::vector<std::size_t> kpiv;
  kpiv.reserve(n - piv.size());
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    std::size_t fr = n - 1 - f;
    if (is_pivot[fr]) continue;
    K(row, f) = 1;
    for (std::size_t r = 0; r < piv.size() && piv[r] < fr; ++r) {
      Elem v = R(r, fr);
      if (v != 0) K(row, n - 1 - piv[r]) = F.neg(v);
    }
    kpiv.push_back(f);
    ++row;
  }
  return Subspace::from_rref(std::move(K), std::move(kpiv));
}

Subspace::Subspace(const PrimeField& F, std::size_t ambient) : basis_(F, 0, ambient) {}

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::full(const PrimeField& F, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(F, ambient), std::move(piv));
}

Subspace Subspace::span(Matrix generators) {
  auto piv = generators.rref_in_place();
  return Subspace(std::move(generators), std::move(piv));
}

Subspace Subspace::span(const PrimeField& F, std::size_t ambient, const std::vector<Vec>& gens) {
  return span(Matrix::from_rows(F, ambient, gens));
}

Subspace Subspace::from_rref(Matrix basis, std::vector<std::size_t> pivots) {
  assert(basis.rows() == pivots.size());
  return Subspace(std::move(basis), std::move(pivots));
}

Vec Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw Error("vector length mismatch");
  Vec w(v.begin(), v.end());
  const PrimeField& F = field();
  for (std::size_t r = 0; r < dim(); ++r) {
    Elem c = w[pivots_[r]];
    if (c != 0) axpy(F, w, basis_.row(r), F.neg(c), pivots_[r]);
  }
  return w;
}

bool Subspace::contains(std::span<const Elem> v) const { return multlab::is_zero(reduce(v)); }

Vec Subspace::coordinates(std::span<const Elem> v) const {
  Vec c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Subspace Subspace::orthogonal_complement() const {
  if (dim() == 0) return full(field(), ambient_dim());
  return kernel(basis_);
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (ambient_dim() != o.ambient_dim()) throw Error("ambient dimension mismatch");
  Matrix M = basis_;
  for (std::size_t r = 0; r < o.dim(); ++r) M.append_row(o.basis_.row(r));
  return span(std::move(M));
}

Subspace Subspace::intersect(const Subspace& o) const {
  return (orthogonal_complement() + o.orthogonal_complement()).orthogonal_complement();
}

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t r = 0; r < o.dim(); ++r)
    if (!contains(o.basis_.row(r))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return pivots_ == o.pivots_ && basis_ == o.basis_;
}

EchelonBuilder::EchelonBuilder(const PrimeField& F, std::size_t ambient)
    : field_(F), ambient_(ambient) {}

void EchelonBuilder::reduce(std::span<Elem> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Elem c = v[pivots_[r]];
    if (c != 0) axpy(field_, v, rows_[r], field_.neg(c), pivots_[r]);
  }
}

bool EchelonBuilder::contains(std::span<const Elem> v) const {
  Vec w(v.begin(), v.end());
  reduce(w);
  return multlab::is_zero(w);
}

bool EchelonBuilder::insert(Vec v) {
  if (v.size() != ambient_) throw Error("vector length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  Elem inv = field_.inv(v[p]);
  if (inv != 1)
    for (std::size_t j = p; j < v.size(); ++j) v[j] = field_.mul(v[j], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

namespace {

// a - c * b for sparse vectors sorted by index.
SparseVec sparse_sub(const PrimeField& F, const SparseVec& a, const SparseVec& b, Elem c) {
  SparseVec out;
  out.entries.reserve(a.entries.size() + b.entries.size());
  auto i = a.entries.begin(), j = b.entries.begin();
  while (i != a.entries.end() || j != b.entries.end()) {
    if (j == b.entries.end() || (i != a.entries.end() && i->first < j->first)) {
      out.entries.push_back(*i++);
    } else if (i == a.entries.end() || j->first < i->first) {
      out.entries.push_back({j->first, F.neg(F.mul(c, j->second))});
      ++j;
    } else {
      Elem v = F.sub(i->second, F.mul(c, j->second));
      if (v != 0) out.entries.push_back({i->first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t sparse_rank(const PrimeField& F, std::vector<SparseVec> rows) {
  std::unordered_map<std::uint32_t, SparseVec> pivots;
  for (auto& r : rows) {
    SparseVec v = std::move(r);
    while (!v.entries.empty()) {
      auto it = pivots.find(v.entries.front().first);
      if (it == pivots.end()) break;
      v = sparse_sub(F, v, it->second, v.entries.front().second);
    }
    if (v.entries.empty()) continue;
    Elem inv = F.inv(v.entries.front().second);
    for (auto& e : v.entries) e.second = F.mul(e.second, inv);
    std::uint32_t lead = v.entries.front().first;
    pivots.emplace(lead, std::move(v));
  }
  return pivots.size();
}

}  // namespace multlab
