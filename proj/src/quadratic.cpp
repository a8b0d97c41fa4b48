#include "multlab/quadratic.hpp"

#include "multlab/errors.hpp"
#include "multlab/resolve.hpp"

namespace multlab {

QuadraticPresentation::QuadraticPresentation(const PrimeField& F, std::size_t n, Subspace W,
                                             std::vector<std::string> nm)
    : n_gens(n), relations(std::move(W)), names(std::move(nm)) {
  if (relations.ambient_dim() != n * n) throw Error("relation space must live in V (x) V");
  if (!(relations.field() == F)) throw Error("relation space over a different field");
  if (names.empty()) names = default_var_names(n);
  if (names.size() != n) throw Error("wrong number of generator names");
}

Vec tensor_vector(const TensorElement& f, std::size_t n) {
  Vec v(n * n, 0);
  for (const auto& [w, c] : f.terms()) {
    if (w.degree() != 2) throw NonHomogeneous("quadratic relation must be homogeneous of degree 2");
    v[w.letters[0] * n + w.letters[1]] = c;
  }
  return v;
}

TensorElement vector_tensor(const PrimeField& F, std::span<const Elem> v, std::size_t n) {
  TensorElement f(F, n);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) f.add_term(Word{{static_cast<int>(i / n), static_cast<int>(i % n)}}, v[i]);
  return f;
}

QuadraticPresentation QuadraticPresentation::from_tensors(const PrimeField& F, std::size_t n,
                                                          const std::vector<TensorElement>& rels,
                                                          std::vector<std::string> names) {
  std::vector<Vec> rows;
  for (const auto& f : rels) rows.push_back(tensor_vector(f, n));
  return QuadraticPresentation(F, n, Subspace::span(F, n * n, rows), std::move(names));
}

std::vector<TensorElement> QuadraticPresentation::relation_tensors() const {
  std::vector<TensorElement> out;
  for (std::size_t r = 0; r < relations.dim(); ++r)
    out.push_back(vector_tensor(field(), relations.basis().row(r), n_gens));
  return out;
}

QuadraticPresentation quadratic_part(const GradedAlgebra& A) {
  if (!A.is_finite() && A.cutoff() < 2) throw Error("quadratic part needs the algebra through degree 2");
  const std::size_t n = A.ngens();
  const std::size_t a2 = A.dim(2);
  Matrix M(A.field(), a2, n * n);
  if (a2 > 0)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [b, v] : A.right_gen(1, i, j).entries) M(b, i * n + j) = v;
  return QuadraticPresentation(A.field(), n, kernel(M), A.gen_names);
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& A) {
  std::vector<std::string> names;
  for (const auto& s : A.names)
    names.push_back(!s.empty() && s.back() == '\'' ? s.substr(0, s.size() - 1) : s + "'");
  return QuadraticPresentation(A.field(), A.n_gens, A.relations.orthogonal_complement(), names);
}

QuadRank relation_rank(const TensorElement& f) {
  if (f.homogeneous_degree() != 2) throw NonHomogeneous("relation rank needs a nonzero degree-2 tensor");
  const std::size_t n = f.nvars();
  Matrix L(f.field(), n, n);
  for (const auto& [w, c] : f.terms()) L(w.letters[0], w.letters[1]) = c;
  std::size_t r = rank(L);
  return QuadRank{f, r, n, r == n};
}

GradedAlgebra quadratic_algebra(const QuadraticPresentation& Q, int cutoff) {
  const PrimeField& F = Q.field();
  const std::size_t n = Q.n_gens;
  GradedAlgebra A(F, n);
  A.gen_names = Q.names;
  if (cutoff < 1) return A;
  {
    std::vector<std::pair<std::size_t, std::size_t>> parents;
    std::vector<std::vector<SparseVec>> right(1, std::vector<SparseVec>(n));
    for (std::size_t k = 0; k < n; ++k) {
      parents.push_back({0, k});
      right[0][k].entries.push_back({static_cast<std::uint32_t>(k), 1});
    }
    A.push_piece(std::move(parents), std::move(right));
  }
  const Matrix& W = Q.relations.basis();
  for (int d = 2; d <= cutoff && !A.is_finite(); ++d) {
    const std::size_t a1 = A.dim(d - 1), a2 = A.dim(d - 2);
    // Column b*n + k stands for (basis b of A_{d-1}) x_k.
    Matrix rel(F, 0, a1 * n);
    Vec row(a1 * n);
    for (std::size_t c = 0; c < a2; ++c)
      for (std::size_t w = 0; w < W.rows(); ++w) {
        std::fill(row.begin(), row.end(), 0);
        auto wr = W.row(w);
        for (std::size_t i = 0; i < n; ++i)
          for (const auto& [b, v] : A.right_gen(d - 2, c, i).entries)
            for (std::size_t j = 0; j < n; ++j)
              if (wr[i * n + j] != 0) row[b * n + j] = F.add(row[b * n + j], F.mul(v, wr[i * n + j]));
        rel.append_row(row);
      }
    auto pivots = rel.rref_in_place();
    std::vector<long> pivot_row(a1 * n, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[pivots[r]] = static_cast<long>(r);
    std::vector<long> new_index(a1 * n, -1);
    std::vector<std::pair<std::size_t, std::size_t>> parents;
    for (std::size_t col = 0; col < a1 * n; ++col)
      if (pivot_row[col] < 0) {
        new_index[col] = static_cast<long>(parents.size());
        parents.push_back({col / n, col % n});
      }
    std::vector<std::vector<SparseVec>> right(a1, std::vector<SparseVec>(n));
    for (std::size_t col = 0; col < a1 * n; ++col) {
      SparseVec& out = right[col / n][col % n];
      if (pivot_row[col] < 0) {
        out.entries.push_back({static_cast<std::uint32_t>(new_index[col]), 1});
        continue;
      }
      auto r = rel.row(static_cast<std::size_t>(pivot_row[col]));
      for (std::size_t c2 = col + 1; c2 < r.size(); ++c2)
        if (r[c2] != 0 && pivot_row[c2] < 0)
          out.entries.push_back({static_cast<std::uint32_t>(new_index[c2]), F.neg(r[c2])});
    }
    A.push_piece(std::move(parents), std::move(right));
  }
  return A;
}

TruncSeries hilbert_series(const GradedAlgebra& A, int cutoff) {
  if (!A.is_finite() && A.cutoff() < cutoff)
    throw Error("algebra is known only through degree " + std::to_string(A.cutoff()));
  TruncSeries s(cutoff);
  for (int d = 0; d <= cutoff; ++d) s[d] = static_cast<std::int64_t>(A.dim(d));
  return s;
}

TruncSeries hilbert_series_quadratic(const QuadraticPresentation& A, int cutoff) {
  if (cutoff < 0) throw Error("cutoff must be nonnegative");
  return hilbert_series(quadratic_algebra(A, cutoff), cutoff);
}

FrobeniusCertificate frobenius_check(const GradedAlgebra& A) {
  if (!A.is_finite()) throw NotFiniteDimensional("no zero piece within the cutoff");
  std::size_t sd = socle(A).dim();
  return FrobeniusCertificate{sd == 1, sd == 1, sd, A.top_degree()};
}

bool frobenius_pairing_check(const GradedAlgebra& A) {
  if (!A.is_finite()) throw NotFiniteDimensional("no zero piece within the cutoff");
  const int top = A.top_degree();
  if (A.dim(top) != 1) return false;
  for (int i = 0; i <= top; ++i) {
    const std::size_t ai = A.dim(i), aj = A.dim(top - i);
    if (ai != aj) return false;
    Matrix P(A.field(), ai, aj);
    for (std::size_t a = 0; a < ai; ++a) {
      Vec ua(ai, 0);
      ua[a] = 1;
      for (std::size_t b = 0; b < aj; ++b) P(a, b) = A.right_mul_basis(i, ua, top - i, b)[0];
    }
    if (rank(P) != ai) return false;
  }
  return true;
}

bool gorenstein_ext_check(const GradedAlgebra& A, int s) {
  auto ext = ext_into_algebra(A, s);
  if (ext[0] != 1) return false;
  for (std::size_t i = 1; i < ext.size(); ++i)
    if (ext[i] != 0) return false;
  return true;
}

bool top_pairing_nondegenerate(const GradedAlgebra& B) {
  if (!B.is_finite() || B.top_degree() != 2) throw HypothesisViolation("needs a finite algebra with top degree 2");
  if (B.dim(2) != 1) return false;
  const std::size_t n = B.dim(1);
  Matrix P(B.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [b, v] : B.right_gen(1, i, j).entries) P(i, j) = v;
  return rank(P) == n;
}

KoszulNumericCertificate koszul_numeric_check(const QuadraticPresentation& A, int cutoff) {
  if (cutoff < 2) throw Error("Koszul check needs cutoff >= 2");
  KoszulNumericCertificate c{cutoff, true, -1, true, -1, -1};
  GradedAlgebra alg = quadratic_algebra(A, cutoff);
  TruncSeries h = hilbert_series(alg, cutoff);
  TruncSeries hd = hilbert_series_quadratic(quadratic_dual(A), cutoff);
  TruncSeries prod = h * hd.negate_variable();
  for (int i = 0; i <= cutoff; ++i)
    if (prod[i] != (i == 0 ? 1 : 0)) {
      c.series_identity_ok = false;
      c.series_failure_degree = i;
      break;
    }
  ResolutionTrunc T = resolve_residue_field_window(alg, cutoff, cutoff);
  for (std::size_t i = 0; i < T.shifts.size() && c.diagonal_betti_ok; ++i)
    for (int j : T.shifts[i])
      if (j != static_cast<int>(i)) {
        c.diagonal_betti_ok = false;
        c.first_off_diagonal_i = static_cast<int>(i);
        c.first_off_diagonal_j = j;
        break;
      }
  return c;
}

LeftShapeCertificate left_resolution_shape(const QuadraticPresentation& Q, int cutoff) {
  if (Q.relations.dim() != 1) throw HypothesisViolation("left resolution shape needs exactly one relation");
  if (cutoff < 2) throw Error("cutoff must be at least 2");
  const PrimeField& F = Q.field();
  const std::size_t m = Q.n_gens;
  auto f = Q.relations.basis().row(0);
  GradedAlgebra A = quadratic_algebra(Q, cutoff);
  LeftShapeCertificate out{true, true, true};
  auto dim = [&](int d) -> std::size_t { return d < 0 ? 0 : A.dim(d); };
  for (int d = 1; d <= cutoff; ++d) {
    // beta_d : A_{d-1}^m -> A_d, (b_j) -> sum_j b_j g_j with g_j = sum_i f_{(j,i)} x_i.
    const std::size_t p = dim(d - 1), q = dim(d);
    Matrix B(F, q, m * p);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t b = 0; b < p; ++b)
        for (std::size_t i = 0; i < m; ++i) {
          Elem c = f[j * m + i];
          if (c == 0) continue;
          for (const auto& [r, v] : A.right_gen(d - 1, b, i).entries)
            B(r, j * p + b) = F.add(B(r, j * p + b), F.mul(c, v));
        }
    const std::size_t rb = rank(B);
    if (rb != q) {
      if (d == 1)
        out.g_span_degree_one = false;
      else
        out.exact = false;
    }
    if (d < 2) continue;
    // alpha_d : A_{d-2} -> A_{d-1}^m, a -> (a x_j)_j.
    const std::size_t o = dim(d - 2);
    Matrix Al(F, m * p, o);
    for (std::size_t a = 0; a < o; ++a)
      for (std::size_t j = 0; j < m; ++j)
        for (const auto& [r, v] : A.right_gen(d - 2, a, j).entries) Al(j * p + r, a) = v;
    const std::size_t ra = rank(Al);
    if (ra != o) out.injective = false;
    if (ra != m * p - rb) out.exact = false;
  }
  return out;
}

}  // namespace multlab
