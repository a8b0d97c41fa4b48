#include "multlab/localalg.hpp"

#include <algorithm>

#include "multlab/errors.hpp"

namespace multlab {

RingPresentation::RingPresentation(const PrimeField& F, std::vector<std::string> vars,
                                   std::vector<Polynomial> relations)
    : field_(F), vars_(std::move(vars)), relations_(std::move(relations)) {
  if (vars_.empty()) throw InvalidPresentation("a presentation needs at least one variable");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw InvalidPresentation("duplicate variable '" + vars_[i] + "'");
  for (const auto& f : relations_) {
    if (f.nvars() != vars_.size())
      throw InvalidPresentation("relation has the wrong number of variables");
    if (!(f.field() == field_)) throw InvalidPresentation("relation over a different field");
    if (!f.is_zero() && f.min_degree() < 2)
      throw InvalidPresentation("relation " + to_string(f, vars_) +
                                " has a constant or linear term");
  }
}

RingPresentation make_presentation(std::uint32_t p, const std::vector<std::string>& vars,
                                   const std::vector<std::string>& relations) {
  PrimeField F(p);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(parse_polynomial(r, vars, F));
  return RingPresentation(F, vars, std::move(rels));
}

Polynomial initial_form(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f.homogeneous_part(f.min_degree());
}

namespace {

struct Truncation {
  std::vector<Monomial> columns;
  std::map<Monomial, std::size_t> index;
  Matrix rref{PrimeField(2), 0, 0};
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> dims;  // per degree 0..N
};

// The ideal I + (x)^{N+1} inside k[x]_{<= N}, in reduced echelon form with
// columns ordered by ascending degree, so pivots are lowest-degree terms.
Truncation truncate(const RingPresentation& P, int N) {
  const PrimeField& F = P.field();
  const std::size_t n = P.nvars();
  Truncation T;
  T.columns = monomials_up_to(n, N);
  for (std::size_t i = 0; i < T.columns.size(); ++i) T.index[T.columns[i]] = i;
  Matrix M(F, 0, T.columns.size());
  Vec row(T.columns.size());
  for (const auto& f : P.relations()) {
    if (f.is_zero()) continue;
    int ord = f.min_degree();
    for (int d = 0; d + ord <= N; ++d)
      for (const auto& m : commutative_basis(n, d)) {
        std::fill(row.begin(), row.end(), 0);
        for (const auto& [u, c] : f.terms()) {
          Monomial mu = m * u;
          if (mu.degree() > N) continue;
          row[T.index.at(mu)] = c;
        }
        M.append_row(row);
      }
  }
  T.pivots = M.rref_in_place();
  T.rref = std::move(M);
  T.dims.assign(N + 1, 0);
  std::vector<bool> is_pivot(T.columns.size(), false);
  for (auto p : T.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < T.columns.size(); ++c)
    if (!is_pivot[c]) ++T.dims[T.columns[c].degree()];
  return T;
}

}  // namespace

FiniteLocalAlgebra build_finite_algebra(const RingPresentation& P, int degree_cap) {
  if (degree_cap < 2) throw Error("degree cap must be at least 2");
  bool any = std::any_of(P.relations().begin(), P.relations().end(),
                         [](const Polynomial& f) { return !f.is_zero(); });
  if (!any) throw NotArtinianAtCap("no relations: a polynomial ring is not artinian");

  for (int N = 2; N + 1 <= degree_cap; ++N) {
    Truncation T = truncate(P, N);
    if (T.dims[N] != 0) continue;
    // A zero piece in degree N forces m^N = 0 by Nakayama. Recompute one
    // degree higher as the certificate.
    Truncation C = truncate(P, N + 1);
    if (C.dims[N] != 0 || C.dims[N + 1] != 0 ||
        !std::equal(T.dims.begin(), T.dims.end(), C.dims.begin()))
      throw Error("internal error: filtration changed under recomputation");

    FiniteLocalAlgebra R(P);
    R.filtration_.assign(T.dims.begin(), T.dims.end() - 1);
    R.certified_at_ = N + 1;
    R.trunc_ = N;
    std::vector<bool> is_pivot(T.columns.size(), false);
    std::vector<long> pivot_row(T.columns.size(), -1);
    for (std::size_t r = 0; r < T.pivots.size(); ++r) {
      is_pivot[T.pivots[r]] = true;
      pivot_row[T.pivots[r]] = static_cast<long>(r);
    }
    R.column_to_basis_.assign(T.columns.size(), -1);
    for (std::size_t c = 0; c < T.columns.size(); ++c)
      if (!is_pivot[c]) {
        R.column_to_basis_[c] = static_cast<long>(R.basis_.size());
        R.basis_.push_back(T.columns[c]);
        R.basis_columns_.push_back(c);
      }
    R.columns_ = std::move(T.columns);
    R.column_index_ = std::move(T.index);
    R.ideal_rref_ = std::move(T.rref);
    R.ideal_pivots_ = std::move(T.pivots);

    const PrimeField& F = P.field();
    const std::size_t L = R.basis_.size();
    auto monomial_nf = [&](const Monomial& m) {
      SparseVec out;
      if (m.degree() > N) return out;
      std::size_t c = R.column_index_.at(m);
      if (!is_pivot[c]) {
        out.entries.push_back({static_cast<std::uint32_t>(R.column_to_basis_[c]), 1});
        return out;
      }
      auto row = R.ideal_rref_.row(static_cast<std::size_t>(pivot_row[c]));
      for (std::size_t j = c + 1; j < row.size(); ++j)
        if (row[j] != 0 && !is_pivot[j])
          out.entries.push_back({static_cast<std::uint32_t>(R.column_to_basis_[j]), F.neg(row[j])});
      return out;
    };
    R.table_.assign(L, std::vector<SparseVec>(L));
    for (std::size_t a = 0; a < L; ++a)
      for (std::size_t b = 0; b < L; ++b) {
        R.table_[a][b] = monomial_nf(R.basis_[a] * R.basis_[b]);
        int d = R.basis_[a].degree() + R.basis_[b].degree();
        for (const auto& [i, v] : R.table_[a][b].entries)
          if (R.basis_[i].degree() != d) R.graded_ = false;
      }
    return R;
  }
  throw NotArtinianAtCap("filtration did not stabilize below degree cap " +
                         std::to_string(degree_cap));
}

std::size_t FiniteLocalAlgebra::degree_offset(int d) const {
  std::size_t s = 0;
  for (int i = 0; i < d && i < static_cast<int>(filtration_.size()); ++i) s += filtration_[i];
  return s;
}

Vec FiniteLocalAlgebra::multiply_basis(std::span<const Elem> v, std::size_t b) const {
  Vec out(dim(), 0);
  for (std::size_t a = 0; a < v.size(); ++a)
    if (v[a] != 0) axpy_sparse(field(), out, table_[a][b], v[a]);
  return out;
}

Vec FiniteLocalAlgebra::multiply(std::span<const Elem> a, std::span<const Elem> b) const {
  Vec out(dim(), 0);
  const PrimeField& F = field();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) axpy_sparse(F, out, table_[i][j], F.mul(a[i], b[j]));
  }
  return out;
}

Vec FiniteLocalAlgebra::normal_form(const Polynomial& f) const {
  const PrimeField& F = field();
  Vec v(columns_.size(), 0);
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() > trunc_) continue;
    v[column_index_.at(m)] = F.add(v[column_index_.at(m)], c);
  }
  for (std::size_t r = 0; r < ideal_pivots_.size(); ++r) {
    Elem c = v[ideal_pivots_[r]];
    if (c != 0) axpy(F, v, ideal_rref_.row(r), F.neg(c), ideal_pivots_[r]);
  }
  Vec out(dim(), 0);
  for (std::size_t b = 0; b < dim(); ++b) out[b] = v[basis_columns_[b]];
  return out;
}

Polynomial FiniteLocalAlgebra::to_polynomial(std::span<const Elem> v) const {
  Polynomial f(field(), nvars());
  for (std::size_t b = 0; b < v.size(); ++b) f.add_term(basis_[b], v[b]);
  return f;
}

GradedAlgebra associated_graded(const FiniteLocalAlgebra& R) {
  const std::size_t n = R.nvars();
  GradedAlgebra G(R.field(), n);
  G.gen_names = R.presentation().vars();
  const int s = R.top_degree();
  std::map<Monomial, std::size_t> index;
  for (std::size_t b = 0; b < R.dim(); ++b) index[R.basis()[b]] = b;
  for (int d = 1; d <= s + 1; ++d) {
    const std::size_t off = R.degree_offset(d);
    const std::size_t dim_d = d <= s ? R.filtration_dims()[d] : 0;
    const std::size_t off_prev = R.degree_offset(d - 1);
    const std::size_t dim_prev = R.filtration_dims()[d - 1];
    std::vector<std::pair<std::size_t, std::size_t>> parents(dim_d);
    for (std::size_t i = 0; i < dim_d; ++i) {
      Monomial m = R.basis()[off + i];
      std::size_t last = n;
      while (m.exp[last - 1] == 0) --last;
      --m.exp[last - 1];
      parents[i] = {index.at(m) - off_prev, last - 1};
    }
    std::vector<std::vector<SparseVec>> right(dim_prev, std::vector<SparseVec>(n));
    for (std::size_t b = 0; b < dim_prev; ++b)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [i, v] : R.product(off_prev + b, R.generator(k)).entries)
          if (R.degree(i) == d)
            right[b][k].entries.push_back({static_cast<std::uint32_t>(i - off), v});
    G.push_piece(std::move(parents), std::move(right));
  }
  return G;
}

Subspace socle(const FiniteLocalAlgebra& R) {
  const std::size_t L = R.dim(), n = R.nvars();
  Matrix M(R.field(), n * L, L);
  for (std::size_t b = 0; b < L; ++b)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [i, v] : R.product(b, R.generator(k)).entries) M(k * L + i, b) = v;
  return kernel(M);
}

std::size_t minimal_generator_count(const RingPresentation& P, const FiniteLocalAlgebra& R) {
  // dim (I + n^{s+2}) / (nI + n^{s+2}), computed inside k[x]_{<= s+1}.
  const int N = R.top_degree() + 1;
  const std::size_t n = P.nvars();
  std::vector<Monomial> cols = monomials_up_to(n, N);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  const PrimeField& F = P.field();
  EchelonBuilder all(F, cols.size());
  EchelonBuilder shifted(F, cols.size());
  for (const auto& f : P.relations()) {
    if (f.is_zero()) continue;
    for (int d = 0; d + f.min_degree() <= N; ++d)
      for (const auto& m : commutative_basis(n, d)) {
        Vec row(cols.size(), 0);
        for (const auto& [u, c] : f.terms()) {
          Monomial mu = m * u;
          if (mu.degree() <= N) row[index.at(mu)] = c;
        }
        if (d >= 1) shifted.insert(row);
        all.insert(std::move(row));
      }
  }
  return all.rank() - shifted.rank();
}

}  // namespace multlab
