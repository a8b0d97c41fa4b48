#include "multlab/extalg.hpp"

#include <algorithm>

#include "multlab/errors.hpp"
#include "multlab/resolve.hpp"

namespace multlab {

QuadraticPresentation SjodinPresentation::algebra() const {
  return QuadraticPresentation(relation_space.field(), n, relation_space, names);
}

SjodinPresentation sjodin_presentation(const RingPresentation& P, const FiniteLocalAlgebra& R) {
  const PrimeField& F = P.field();
  const std::size_t n = P.nvars();
  std::vector<const Polynomial*> rels;
  for (const auto& f : P.relations())
    if (!f.is_zero()) rels.push_back(&f);
  if (rels.size() != minimal_generator_count(P, R))
    throw NonMinimalPresentation("relations do not form a minimal generating set of the ideal");

  std::vector<std::pair<std::size_t, std::size_t>> columns;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) columns.push_back({i, j});
  Matrix C(F, rels.size(), columns.size());
  for (std::size_t h = 0; h < rels.size(); ++h) {
    const Polynomial q = rels[h]->homogeneous_part(2);
    for (const auto& [m, c] : q.terms()) {
      std::vector<std::size_t> idx;
      for (std::size_t v = 0; v < n; ++v)
        for (int e = 0; e < m.exp[v]; ++e) idx.push_back(v);
      auto it = std::find(columns.begin(), columns.end(), std::make_pair(idx[0], idx[1]));
      C(h, static_cast<std::size_t>(it - columns.begin())) = c;
    }
  }
  Subspace K = kernel(C);
  std::vector<Vec> tensors;
  for (std::size_t r = 0; r < K.dim(); ++r) {
    Vec t(n * n, 0);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      Elem b = K.basis()(r, c);
      auto [i, j] = columns[c];
      t[i * n + j] = b;
      t[j * n + i] = b;
    }
    tensors.push_back(std::move(t));
  }
  std::vector<std::string> names;
  for (const auto& v : P.vars()) names.push_back(v + "'");
  return SjodinPresentation{n, std::move(columns), std::move(C), Subspace::span(F, n * n, tensors),
                            std::move(names)};
}

ExtComparison ext_dual_comparison(const RingPresentation& P, const FiniteLocalAlgebra& R, int cutoff) {
  if (cutoff < 2) throw Error("cutoff must be at least 2");
  SjodinPresentation S = sjodin_presentation(P, R);
  QuadraticPresentation B = quadratic_dual(quadratic_part(associated_graded(R)));
  ResolutionTrunc T = resolve_residue_field(R, cutoff);
  TruncSeries ext(cutoff);
  for (int i = 0; i <= cutoff; ++i) ext[i] = static_cast<std::int64_t>(T.ranks[i]);
  TruncSeries h = hilbert_series_quadratic(S.algebra(), cutoff);
  int mismatch = -1;
  for (int i = 0; i <= cutoff && mismatch < 0; ++i)
    if (ext[i] != h[i]) mismatch = i;
  bool equal = S.relation_space == B.relations;
  return ExtComparison{std::move(S), std::move(B), cutoff, ext, h, equal, mismatch < 0, mismatch};
}

namespace {

// beta_i(k) over the quadratic algebra vanish for m < i <= cutoff while beta_m != 0.
bool global_dimension_witness(const QuadraticPresentation& A, std::size_t m, int cutoff) {
  GradedAlgebra alg = quadratic_algebra(A, cutoff);
  ResolutionTrunc T = resolve_residue_field_window(alg, cutoff, cutoff);
  if (static_cast<int>(m) > cutoff || T.ranks[m] == 0) return false;
  for (int i = static_cast<int>(m) + 1; i <= cutoff; ++i)
    if (T.ranks[i] != 0) return false;
  return true;
}

}  // namespace

Theorem1Report theorem1_check(const RingPresentation& P, const FiniteLocalAlgebra& R, int cutoff) {
  const std::size_t n = P.nvars();
  if (n < 2) throw EmbeddingDimensionTooSmall("Theorem 1 needs embedding dimension at least 2");
  Theorem1Report r{};
  r.cutoff = cutoff;
  r.edim = n;
  r.length = R.dim();
  r.socle_dim = socle(R).dim();
  r.top_degree = R.top_degree();
  ExtComparison cmp = ext_dual_comparison(P, R, cutoff);
  QuadraticPresentation A = cmp.sjodin.algebra();
  r.sjodin_relations = A.relations.dim();
  bool max_rank = false;
  if (r.sjodin_relations == 1) {
    QuadRank q = relation_rank(A.relation_tensors()[0]);
    r.relation_rank = q.rank;
    max_rank = q.maximal;
  }
  r.ext_match = cmp.match();
  r.gldim2_witness = cmp.hilbert_match && global_dimension_witness(A, 2, cutoff);

  const bool gorenstein = r.socle_dim == 1;
  r.stmt1 = gorenstein && r.top_degree <= 2 && r.length == n + 2 && r.length >= 3;
  r.stmt2 = gorenstein && r.gldim2_witness && r.ext_match;
  r.stmt3 = cmp.hilbert_match && r.sjodin_relations == 1 && max_rank;
  return r;
}

Theorem2Report theorem2_check(const RingPresentation& P, const FiniteLocalAlgebra& R, int cutoff) {
  Theorem2Report r{};
  r.cutoff = cutoff;
  r.m = P.nvars();
  r.length = R.dim();
  r.min_generators = minimal_generator_count(P, R);
  r.complete_intersection = r.min_generators == r.m;
  ExtComparison cmp = ext_dual_comparison(P, R, cutoff);
  QuadraticPresentation A = cmp.sjodin.algebra();
  r.ext_match = cmp.match();
  r.gldim_witness = cmp.hilbert_match && global_dimension_witness(A, r.m, cutoff);
  KoszulNumericCertificate k = koszul_numeric_check(A, cutoff);
  r.koszul_witness = cmp.hilbert_match && k.series_identity_ok && k.diagonal_betti_ok;
  // 1/(1-t)^m has coefficients C(i+m-1, m-1).
  TruncSeries poly(IntPoly{1}, cutoff);
  for (std::size_t j = 0; j < r.m; ++j) poly = poly * TruncSeries(IntPoly(cutoff + 1, 1), cutoff);
  r.growth_witness = cmp.sjodin_hilbert == poly;
  GradedAlgebra dual = quadratic_algebra(quadratic_dual(A), static_cast<int>(r.m) + 1);
  if (dual.is_finite()) {
    FrobeniusCertificate f = frobenius_check(dual);
    r.dual_frobenius = f.is_frobenius && f.sup == static_cast<int>(r.m);
  }
  r.stmt1 = r.complete_intersection && r.length == (std::size_t{1} << r.m);
  r.stmt2 = r.complete_intersection && r.gldim_witness && r.ext_match;
  r.stmt2p = r.complete_intersection && r.gldim_witness;
  r.stmt3 = r.koszul_witness && r.growth_witness && r.dual_frobenius;
  r.stmt3p = r.koszul_witness && r.growth_witness;
  return r;
}

bool levin_avramov_check(const RingPresentation& P, const FiniteLocalAlgebra& R) {
  if (P.nvars() < 2) throw HypothesisViolation("needs embedding dimension at least 2");
  if (R.top_degree() > 2) throw HypothesisViolation("needs m^3 = 0");
  if (socle(R).dim() != 1) throw HypothesisViolation("ring is not Gorenstein");
  SjodinPresentation S = sjodin_presentation(P, R);
  if (S.relation_space.dim() != 1) return false;
  return relation_rank(S.algebra().relation_tensors()[0]).maximal;
}

}  // namespace multlab
