#include "multlab/lindef.hpp"

#include <map>

#include "multlab/errors.hpp"
#include "multlab/quadratic.hpp"

namespace multlab {

LinearPartComplex linear_part(const ResolutionTrunc& F, const FiniteLocalAlgebra& R) {
  LinearPartComplex L{associated_graded(R), F.ranks, {}, F.module_label};
  const std::size_t n = R.nvars();
  L.differentials.resize(F.ranks.size());
  for (std::size_t i = 1; i < F.differentials.size() && i < F.ranks.size(); ++i) {
    auto& out = L.differentials[i];
    out.reserve(F.differentials[i].size());
    for (const auto& col : F.differentials[i]) {
      LinearColumn lc;
      for (const auto& e : col) {
        if (e.value == 0) continue;
        const int d = R.degree(e.ring_index);
        if (d == 0) throw NonMinimalResolution("differential has a unit entry");
        if (d == 1) {
          std::size_t k = e.ring_index - R.generator(0);
          if (k >= n) throw Error("unexpected basis layout in degree one");
          lc.push_back({e.gen, static_cast<std::uint32_t>(k), e.value});
        }
      }
      out.push_back(std::move(lc));
    }
  }
  return L;
}

namespace {

// Columns of d_i restricted to internal degree j: basis (e, b) of
// (R^g)_{j-i}^{beta_i}, images in (R^g)_{j-i+1}^{beta_{i-1}}.
std::vector<SparseVec> degree_columns(const LinearPartComplex& L, std::size_t i, int j) {
  const GradedAlgebra& A = L.base;
  const int src = j - static_cast<int>(i);
  std::vector<SparseVec> cols;
  if (src < 0 || src + 1 > A.cutoff()) return cols;
  const std::size_t ds = A.dim(src), dt = A.dim(src + 1);
  const auto& D = L.differentials[i];
  cols.reserve(D.size() * ds);
  std::map<std::uint32_t, Elem> acc;
  const PrimeField& F = A.field();
  for (const auto& col : D)
    for (std::size_t b = 0; b < ds; ++b) {
      acc.clear();
      for (const auto& [f, k, v] : col)
        for (const auto& [r, w] : A.right_gen(src, b, k).entries) {
          std::uint32_t idx = static_cast<std::uint32_t>(f * dt + r);
          Elem& slot = acc[idx];
          slot = F.add(slot, F.mul(v, w));
        }
      SparseVec s;
      for (const auto& [idx, c] : acc)
        if (c != 0) s.entries.push_back({idx, c});
      cols.push_back(std::move(s));
    }
  return cols;
}

std::size_t piece_dim(const LinearPartComplex& L, std::size_t i, int j) {
  const int src = j - static_cast<int>(i);
  if (i >= L.ranks.size() || src < 0 || src > L.base.top_degree()) return 0;
  return L.ranks[i] * L.base.dim(src);
}

}  // namespace

std::vector<std::size_t> linear_homology(const LinearPartComplex& L) {
  const std::size_t s = L.ranks.empty() ? 0 : L.ranks.size() - 1;
  const int top = L.base.top_degree();
  std::vector<std::size_t> out;
  std::map<std::pair<std::size_t, int>, std::size_t> ranks;
  auto rank_of = [&](std::size_t i, int j) -> std::size_t {
    auto key = std::make_pair(i, j);
    auto it = ranks.find(key);
    if (it != ranks.end()) return it->second;
    std::size_t r = sparse_rank(L.base.field(), degree_columns(L, i, j));
    ranks.emplace(key, r);
    return r;
  };
  for (std::size_t i = 1; i + 1 <= s; ++i) {
    std::size_t h = 0;
    for (int j = static_cast<int>(i); j <= static_cast<int>(i) + top; ++j) {
      const std::size_t dim = piece_dim(L, i, j);
      if (dim == 0) continue;
      h += dim - rank_of(i, j) - rank_of(i + 1, j);
    }
    out.push_back(h);
  }
  return out;
}

bool linear_part_squares_to_zero(const LinearPartComplex& L) {
  const std::size_t s = L.ranks.empty() ? 0 : L.ranks.size() - 1;
  const int top = L.base.top_degree();
  const PrimeField& F = L.base.field();
  for (std::size_t i = 1; i + 1 <= s; ++i)
    for (int j = static_cast<int>(i) + 1; j <= static_cast<int>(i) + 1 + top; ++j) {
      auto upper = degree_columns(L, i + 1, j);
      if (upper.empty()) continue;
      auto lower = degree_columns(L, i, j);
      if (lower.empty()) continue;
      for (const auto& u : upper) {
        std::map<std::uint32_t, Elem> acc;
        for (const auto& [idx, c] : u.entries)
          for (const auto& [r, w] : lower[idx].entries) {
            Elem& slot = acc[r];
            slot = F.add(slot, F.mul(c, w));
          }
        for (const auto& kv : acc)
          if (kv.second != 0) return false;
      }
    }
  return true;
}

std::string to_string(LdVerdict v) {
  switch (v) {
    case LdVerdict::Zero: return "zero";
    case LdVerdict::LowerBound: return "lower_bound";
    case LdVerdict::Candidate: return "candidate";
  }
  return "?";
}

LinDefReport linearity_defect(const FiniteLocalAlgebra& R, const ResolutionTrunc& F) {
  LinearPartComplex L = linear_part(F, R);
  LinDefReport r{F.module_label, F.hom_cutoff, linear_homology(L), LdVerdict::Zero, 0};
  int last = 0;
  for (std::size_t i = 0; i < r.homology_dims.size(); ++i)
    if (r.homology_dims[i] != 0) last = static_cast<int>(i) + 1;
  if (last == 0) return r;
  r.value = last;
  r.verdict = last == static_cast<int>(r.homology_dims.size()) ? LdVerdict::LowerBound : LdVerdict::Candidate;
  return r;
}

LinDefReport linearity_defect_residue(const FiniteLocalAlgebra& R, int hom_cutoff) {
  return linearity_defect(R, resolve_residue_field(R, hom_cutoff));
}

LinDefReport linearity_defect_power(const FiniteLocalAlgebra& R, int power, int hom_cutoff) {
  return linearity_defect(R, resolve_maximal_ideal_power(R, power, hom_cutoff));
}

KoszulRingCertificate koszul_ring_check(const FiniteLocalAlgebra& R, int hom_cutoff) {
  KoszulRingCertificate c{hom_cutoff, false, false, false};
  c.ld_zero = linearity_defect_residue(R, hom_cutoff).verdict == LdVerdict::Zero;
  GradedAlgebra G = associated_graded(R);
  const int top = G.top_degree();
  GradedAlgebra Q = quadratic_algebra(quadratic_part(G), top + 1);
  c.tangent_cone_quadratic = true;
  for (int d = 0; d <= top + 1; ++d) {
    std::size_t qd = d <= Q.cutoff() ? Q.dim(d) : 0;
    if (qd != (d <= top ? G.dim(d) : 0)) c.tangent_cone_quadratic = false;
  }
  ResolutionTrunc T = resolve_residue_field(G, hom_cutoff, kDefaultDegCutoff);
  c.tangent_cone_diagonal = true;
  for (std::size_t i = 0; i < T.shifts.size(); ++i)
    for (int j : T.shifts[i])
      if (j != static_cast<int>(i)) c.tangent_cone_diagonal = false;
  return c;
}

bool sega_monotonicity_check(const FiniteLocalAlgebra& R, int m_max, int hom_cutoff) {
  if (linearity_defect_residue(R, hom_cutoff).verdict != LdVerdict::Zero) return true;
  for (int m = 1; m <= m_max && m <= R.top_degree(); ++m)
    if (linearity_defect_power(R, m, hom_cutoff).verdict != LdVerdict::Zero) return false;
  return true;
}

}  // namespace multlab
