#include "multlab/graded.hpp"

#include <map>

#include "multlab/errors.hpp"

namespace multlab {

const SparseVec GradedAlgebra::kZero{};

GradedAlgebra::GradedAlgebra(const PrimeField& F, std::size_t ngens)
    : field_(F), ngens_(ngens), dims_{1}, parents_(1) {
  parents_[0].push_back({0, 0});
  gen_names = default_var_names(ngens);
}

void GradedAlgebra::push_piece(std::vector<std::pair<std::size_t, std::size_t>> parents,
                               std::vector<std::vector<SparseVec>> right) {
  if (finite_) throw Error("cannot extend a graded algebra past a zero piece");
  if (right.size() != dims_.back()) throw Error("right multiplication table has wrong size");
  dims_.push_back(parents.size());
  parents_.push_back(std::move(parents));
  right_.push_back(std::move(right));
  if (dims_.back() == 0) finite_ = true;
}

int GradedAlgebra::top_degree() const {
  int top = 0;
  for (int d = 0; d <= cutoff(); ++d)
    if (dims_[d] != 0) top = d;
  return top;
}

std::size_t GradedAlgebra::dim(int d) const {
  if (d < 0) return 0;
  if (d <= cutoff()) return dims_[d];
  if (finite_) return 0;
  throw Error("graded piece of degree " + std::to_string(d) + " lies beyond the cutoff " +
              std::to_string(cutoff()));
}

std::size_t GradedAlgebra::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

std::size_t GradedAlgebra::offset(int d) const {
  std::size_t s = 0;
  for (int i = 0; i < d && i <= cutoff(); ++i) s += dims_[i];
  return s;
}

std::pair<int, std::size_t> GradedAlgebra::locate(std::size_t global) const {
  for (int d = 0; d <= cutoff(); ++d) {
    if (global < dims_[d]) return {d, global};
    global -= dims_[d];
  }
  throw Error("basis index out of range");
}

bool GradedAlgebra::has_right_maps(int d) const { return d < cutoff() || finite_; }

const SparseVec& GradedAlgebra::right_gen(int d, std::size_t b, std::size_t k) const {
  if (d < cutoff()) return right_[d][b][k];
  if (finite_) return kZero;
  throw Error("multiplication out of degree " + std::to_string(d) + " is beyond the cutoff");
}

Word GradedAlgebra::word(int d, std::size_t b) const {
  Word w{std::vector<int>(d, 0)};
  for (int i = d; i >= 1; --i) {
    auto [p, k] = parents_[i][b];
    w.letters[i - 1] = static_cast<int>(k);
    b = p;
  }
  return w;
}

Vec GradedAlgebra::right_mul_gen(int d, std::span<const Elem> v, std::size_t k) const {
  Vec out(dim(d + 1), 0);
  if (out.empty()) return out;
  for (std::size_t b = 0; b < v.size(); ++b)
    if (v[b] != 0) axpy_sparse(field_, out, right_gen(d, b, k), v[b]);
  return out;
}

Vec GradedAlgebra::right_mul_basis(int i, std::span<const Elem> a, int j, std::size_t b) const {
  Word w = word(j, b);
  Vec cur(a.begin(), a.end());
  int d = i;
  for (int l : w.letters) {
    cur = right_mul_gen(d, cur, static_cast<std::size_t>(l));
    ++d;
  }
  return cur;
}

Vec GradedAlgebra::multiply(int i, std::span<const Elem> a, int j,
                            std::span<const Elem> b) const {
  Vec out(dim(i + j), 0);
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (b[t] == 0) continue;
    Vec prod = right_mul_basis(i, a, j, t);
    axpy(field_, out, prod, b[t]);
  }
  return out;
}

GradedAlgebra polynomial_ring(const PrimeField& F, std::size_t n, int cutoff) {
  GradedAlgebra S(F, n);
  std::vector<Monomial> prev = commutative_basis(n, 0);
  for (int d = 1; d <= cutoff; ++d) {
    std::vector<Monomial> cur = commutative_basis(n, d);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < cur.size(); ++i) index[cur[i]] = i;
    std::vector<std::pair<std::size_t, std::size_t>> parents(cur.size());
    std::map<Monomial, std::size_t> prev_index;
    for (std::size_t i = 0; i < prev.size(); ++i) prev_index[prev[i]] = i;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      Monomial m = cur[i];
      std::size_t last = n;
      while (m.exp[last - 1] == 0) --last;
      --m.exp[last - 1];
      parents[i] = {prev_index.at(m), last - 1};
    }
    std::vector<std::vector<SparseVec>> right(prev.size(), std::vector<SparseVec>(n));
    for (std::size_t b = 0; b < prev.size(); ++b)
      for (std::size_t k = 0; k < n; ++k) {
        Monomial m = prev[b];
        ++m.exp[k];
        right[b][k].entries.push_back({static_cast<std::uint32_t>(index.at(m)), 1});
      }
    S.push_piece(std::move(parents), std::move(right));
    prev = std::move(cur);
  }
  return S;
}

Subspace socle(const GradedAlgebra& A) {
  if (!A.is_finite())
    throw NotFiniteDimensional("graded algebra has a nonzero piece at its cutoff " +
                               std::to_string(A.cutoff()));
  const PrimeField& F = A.field();
  const std::size_t total = A.total_dim();
  std::vector<Vec> gens;
  for (int d = 0; d <= A.top_degree(); ++d) {
    // Matrix of A_d -> (A_{d+1})^n, v -> (v x_1, ..., v x_n)
    std::size_t rows = A.dim(d + 1) * A.ngens();
    Matrix M(F, rows, A.dim(d));
    for (std::size_t b = 0; b < A.dim(d); ++b)
      for (std::size_t k = 0; k < A.ngens(); ++k)
        for (const auto& [i, v] : A.right_gen(d, b, k).entries) M(k * A.dim(d + 1) + i, b) = v;
    Subspace K = kernel(M);
    for (std::size_t r = 0; r < K.dim(); ++r) {
      Vec g(total, 0);
      auto row = K.basis().row(r);
      for (std::size_t b = 0; b < A.dim(d); ++b) g[A.offset(d) + b] = row[b];
      gens.push_back(std::move(g));
    }
  }
  return Subspace::span(F, total, gens);
}

}  // namespace multlab
