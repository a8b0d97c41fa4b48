#include "multlab/resolve.hpp"

#include <algorithm>
#include <optional>

#include "multlab/errors.hpp"

namespace multlab {

std::size_t BettiTable::beta(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= local.size()) return 0;
  return local[i];
}

std::size_t BettiTable::beta(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

BettiTable betti_table(const ResolutionTrunc& F) {
  BettiTable T;
  T.graded = F.graded;
  T.module_label = F.module_label;
  T.hom_cutoff = F.hom_cutoff;
  T.deg_cutoff = F.deg_cutoff;
  T.local = F.ranks;
  if (F.graded)
    for (std::size_t i = 0; i < F.shifts.size(); ++i)
      for (int d : F.shifts[i]) ++T.entries[{static_cast<int>(i), d}];
  return T;
}

namespace {

// The free right module sum_e A(-degs[e]) in degree j: one block per
// generator, block e being A_{j - degs[e]}.
struct GradedFree {
  const GradedAlgebra* A = nullptr;
  std::vector<int> degs;
  int jmax = 0;
  std::vector<std::vector<std::size_t>> offs;  // offs[j][e], offs[j].back() = size

  GradedFree(const GradedAlgebra& alg, std::vector<int> d, int top) : A(&alg), degs(std::move(d)), jmax(top) {
    offs.resize(jmax + 1);
    for (int j = 0; j <= jmax; ++j) {
      offs[j].assign(degs.size() + 1, 0);
      for (std::size_t e = 0; e < degs.size(); ++e) {
        int t = j - degs[e];
        offs[j][e + 1] = offs[j][e] + (t < 0 ? 0 : A->dim(t));
      }
    }
  }

  std::size_t size(int j) const { return j > jmax ? 0 : offs[j].back(); }
  std::size_t offset(int j, std::size_t e) const { return offs[j][e]; }

  Vec mul_gen(const Vec& v, int j, std::size_t k) const {
    const PrimeField& F = A->field();
    Vec out(size(j + 1), 0);
    if (out.empty()) return out;
    for (std::size_t e = 0; e < degs.size(); ++e) {
      int t = j - degs[e];
      if (t < 0) continue;
      for (std::size_t b = offs[j][e]; b < offs[j][e + 1]; ++b)
        if (v[b] != 0) axpy_sparse(F, out, A->right_gen(t, b - offs[j][e], k), v[b], offs[j + 1][e]);
    }
    return out;
  }
};

struct Level {
  GradedFree F;
  std::vector<SparseVec> images;  // images[e] in the previous level, degree degs[e]
  std::vector<std::size_t> kdim;  // dim of the kernel of this level's map, per degree
};

int level_top(const GradedAlgebra& A, const std::vector<int>& degs, int D) {
  if (!A.is_finite()) return D;
  int m = degs.empty() ? 0 : *std::max_element(degs.begin(), degs.end());
  return m + A.top_degree();
}

// Matrix of the map cur -> prev in degree j.
Matrix level_matrix(const GradedAlgebra& A, const Level& cur, const Level& prev, int j) {
  Matrix M(A.field(), prev.F.size(j), cur.F.size(j));
  for (std::size_t e = 0; e < cur.F.degs.size(); ++e) {
    int de = cur.F.degs[e];
    if (de > j) continue;
    std::vector<Vec> imgs{Vec(prev.F.size(de), 0)};
    for (const auto& [r, v] : cur.images[e].entries) imgs[0][r] = v;
    for (int t = de + 1; t <= j; ++t) {
      std::vector<Vec> next(A.dim(t - de));
      for (std::size_t b = 0; b < next.size(); ++b) {
        auto [p, k] = A.parent(t - de, b);
        next[b] = prev.F.mul_gen(imgs[p], t - 1, k);
      }
      imgs = std::move(next);
    }
    const std::size_t off = cur.F.offset(j, e);
    for (std::size_t b = 0; b < imgs.size(); ++b)
      for (std::size_t r = 0; r < imgs[b].size(); ++r) M(r, off + b) = imgs[b][r];
  }
  return M;
}

struct GradedRun {
  std::vector<Level> levels;
  bool gens_at_cutoff = false;
};

// Resolves starting from a base free module with a given kernel, computing
// `steps` further levels. base_kernel[j] is the kernel in degree j.
// Continues a run whose first `start` levels (and the kernel dimensions of
// all but the last) are known.
void continue_graded(const GradedAlgebra& A, GradedRun& run, const std::vector<Subspace>& base_kernel,
                     int start, int steps, int D) {
  const PrimeField& F = A.field();
  const std::size_t n = A.ngens();
  for (int step = start; step < steps; ++step) {
    Level& cur = run.levels[step];
    std::vector<int> new_degs;
    std::vector<SparseVec> new_images;
    const int jhi = cur.F.jmax;
    cur.kdim.assign(jhi + 1, 0);
    if (!cur.F.degs.empty()) {
      const int jlo = *std::min_element(cur.F.degs.begin(), cur.F.degs.end());
      std::vector<Vec> Kprev;
      for (int j = jlo; j <= jhi; ++j) {
        const std::size_t size = cur.F.size(j);
        std::optional<Subspace> K;
        std::size_t target;
        if (step == 0) {
          K = j < static_cast<int>(base_kernel.size()) ? base_kernel[j] : Subspace(F, size);
          if (K->ambient_dim() != size) throw Error("internal error: base kernel has the wrong size");
          target = K->dim();
        } else {
          const auto& pk = run.levels[step - 1].kdim;
          std::size_t image = j < static_cast<int>(pk.size()) ? pk[j] : 0;
          target = size - image;
        }
        if (target == 0) {
          Kprev.clear();
          continue;
        }
        EchelonBuilder U(F, size);
        for (std::size_t r = 0; r < Kprev.size() && U.rank() < target; ++r)
          for (std::size_t k = 0; k < n && U.rank() < target; ++k)
            U.insert(cur.F.mul_gen(Kprev[r], j - 1, k));
        const bool keep = j < jhi;
        if (U.rank() < target && !K && run.levels[step - 1].F.size(j) == 0) {
          // Everything in degree j is a cycle; complement U among unit vectors.
          Matrix C = Matrix::from_rows(F, size, U.rows());
          std::vector<bool> covered(size, false);
          for (auto p : C.rref_in_place()) covered[p] = true;
          for (std::size_t c = 0; c < size; ++c)
            if (!covered[c]) {
              new_degs.push_back(j);
              new_images.push_back(SparseVec{{{static_cast<std::uint32_t>(c), 1}}});
              if (!A.is_finite() && j == D) run.gens_at_cutoff = true;
            }
          Kprev.clear();
          if (keep)
            for (std::size_t c = 0; c < size; ++c) {
              Kprev.emplace_back(size, 0);
              Kprev.back()[c] = 1;
            }
        } else if (U.rank() < target) {
          if (!K) {
            K = kernel(level_matrix(A, cur, run.levels[step - 1], j));
            if (K->dim() != target) throw Error("internal error: kernel dimension mismatch");
          }
          // New generators: kernel basis vectors outside the span of U, read
          // off from the coordinates of U in the reduced basis of K.
          Matrix C(F, U.rank(), K->dim());
          for (std::size_t r = 0; r < U.rank(); ++r)
            for (std::size_t t = 0; t < K->dim(); ++t) C(r, t) = U.rows()[r][K->pivots()[t]];
          std::vector<bool> covered(K->dim(), false);
          for (auto p : C.rref_in_place()) covered[p] = true;
          Kprev.clear();
          for (std::size_t t = 0; t < K->dim(); ++t) {
            auto row = K->basis().row(t);
            if (!covered[t]) {
              SparseVec sv;
              for (std::size_t c = 0; c < row.size(); ++c)
                if (row[c] != 0) sv.entries.push_back({static_cast<std::uint32_t>(c), row[c]});
              new_degs.push_back(j);
              new_images.push_back(std::move(sv));
              if (!A.is_finite() && j == D) run.gens_at_cutoff = true;
            }
            if (keep) Kprev.emplace_back(row.begin(), row.end());
          }
        } else {
          Kprev = U.take_rows();
        }
        cur.kdim[j] = target;
      }
    }
    int top = level_top(A, new_degs, D);
    run.levels.push_back(Level{GradedFree(A, new_degs, top), std::move(new_images), {}});
  }
}

void check_window(const GradedAlgebra& A, int D) {
  if (!A.is_finite() && A.cutoff() < D)
    throw Error("algebra is known only through degree " + std::to_string(A.cutoff()));
}

// Resolves starting from a base free module with a given kernel, computing
// `steps` further levels. base_kernel[j] is the kernel in degree j.
GradedRun run_graded(const GradedAlgebra& A, std::vector<int> base_degs,
                     const std::vector<Subspace>& base_kernel, int steps, int D) {
  check_window(A, D);
  GradedRun run;
  int top0 = level_top(A, base_degs, D);
  run.levels.push_back(Level{GradedFree(A, base_degs, top0), {}, {}});
  continue_graded(A, run, base_kernel, 0, steps, D);
  return run;
}

// Resolution of k: F_0 = A with kernel A_+, F_1 = A(-1)^n mapping e_k to x_k.
GradedRun run_residue(const GradedAlgebra& A, int steps, int D) {
  check_window(A, D);
  GradedRun run;
  Level L0{GradedFree(A, {0}, level_top(A, {0}, D)), {}, {}};
  L0.kdim.assign(L0.F.jmax + 1, 0);
  for (int j = 1; j <= L0.F.jmax; ++j) L0.kdim[j] = A.dim(j);
  run.levels.push_back(std::move(L0));
  if (steps == 0) return run;
  std::vector<int> degs(A.dim(1) == 0 ? 0 : A.ngens(), 1);
  std::vector<SparseVec> images;
  for (std::size_t k = 0; k < degs.size(); ++k) images.push_back(SparseVec{{{static_cast<std::uint32_t>(k), 1}}});
  run.levels.push_back(Level{GradedFree(A, degs, level_top(A, degs, D)), std::move(images), {}});
  if (!A.is_finite() && D == 1 && !degs.empty()) run.gens_at_cutoff = true;
  continue_graded(A, run, {}, 1, steps, D);
  return run;
}

std::vector<DiffColumn> graded_columns(const GradedAlgebra& A, const Level& cur, const Level& prev) {
  std::vector<DiffColumn> cols;
  for (std::size_t e = 0; e < cur.F.degs.size(); ++e) {
    const int de = cur.F.degs[e];
    DiffColumn col;
    std::size_t f = 0;
    for (const auto& [r, v] : cur.images[e].entries) {
      while (prev.F.offset(de, f + 1) <= r) ++f;
      int t = de - prev.F.degs[f];
      col.push_back({static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(A.offset(t) + r - prev.F.offset(de, f)), v});
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

// Converts levels first..last into a resolution; level `first` is F_0.
ResolutionTrunc graded_result(const GradedAlgebra& A, const GradedRun& run, int first, int hom_cutoff,
                              int D) {
  ResolutionTrunc R;
  R.graded = true;
  R.hom_cutoff = hom_cutoff;
  R.deg_cutoff = A.is_finite() ? -1 : D;
  R.saturated = !run.gens_at_cutoff;
  for (int i = 0; i <= hom_cutoff; ++i) {
    const Level& L = run.levels[first + i];
    R.ranks.push_back(L.F.degs.size());
    R.shifts.push_back(L.F.degs);
    if (first + i == 0)
      R.differentials.push_back({});
    else
      R.differentials.push_back(graded_columns(A, L, run.levels[first + i - 1]));
  }
  if (first == 1) R.ambient_rank = run.levels[0].F.degs.size();
  return R;
}

ResolutionTrunc graded_residue(const GradedAlgebra& A, int s, int D) {
  if (s < 0) throw Error("homological cutoff must be nonnegative");
  GradedRun run = run_residue(A, s, D);
  ResolutionTrunc R = graded_result(A, run, 0, s, D);
  R.module_label = "k";
  return R;
}

// Dense engine over R on R^b.
struct DenseLevel {
  std::size_t rank = 0;
  std::vector<Vec> images;  // in the previous level, length prev.rank * dim R
};

Vec dense_mul_basis(const FiniteLocalAlgebra& R, const Vec& v, std::size_t rank, std::size_t b) {
  const std::size_t L = R.dim();
  Vec out(rank * L, 0);
  for (std::size_t f = 0; f < rank; ++f) {
    std::span<const Elem> block(v.data() + f * L, L);
    Vec p = R.multiply_basis(block, b);
    std::copy(p.begin(), p.end(), out.begin() + f * L);
  }
  return out;
}

// Columns (e, b) of the map cur -> prev as a matrix over k.
Matrix dense_matrix(const FiniteLocalAlgebra& R, const DenseLevel& cur, std::size_t prev_rank) {
  const std::size_t L = R.dim();
  Matrix M(R.field(), prev_rank * L, cur.rank * L);
  for (std::size_t e = 0; e < cur.rank; ++e)
    for (std::size_t b = 0; b < L; ++b) {
      Vec c = dense_mul_basis(R, cur.images[e], prev_rank, b);
      for (std::size_t r = 0; r < c.size(); ++r) M(r, e * L + b) = c[r];
    }
  return M;
}

std::vector<DenseLevel> run_dense(const FiniteLocalAlgebra& R, std::size_t base_rank, Subspace K, int steps) {
  const PrimeField& F = R.field();
  const std::size_t L = R.dim(), n = R.nvars();
  std::vector<DenseLevel> levels{DenseLevel{base_rank, {}}};
  for (int step = 0; step < steps; ++step) {
    const std::size_t rank = levels.back().rank;
    EchelonBuilder mK(F, rank * L);
    for (std::size_t r = 0; r < K.dim(); ++r) {
      auto row = K.basis().row(r);
      Vec v(row.begin(), row.end());
      for (std::size_t k = 0; k < n; ++k) mK.insert(dense_mul_basis(R, v, rank, R.generator(k)));
    }
    Matrix C(F, mK.rank(), K.dim());
    for (std::size_t r = 0; r < mK.rank(); ++r)
      for (std::size_t t = 0; t < K.dim(); ++t) C(r, t) = mK.rows()[r][K.pivots()[t]];
    std::vector<bool> covered(K.dim(), false);
    for (auto p : C.rref_in_place()) covered[p] = true;
    DenseLevel next;
    for (std::size_t t = 0; t < K.dim(); ++t)
      if (!covered[t]) {
        auto row = K.basis().row(t);
        next.images.emplace_back(row.begin(), row.end());
      }
    next.rank = next.images.size();
    if (step + 1 < steps) {
      Subspace Knext = kernel(dense_matrix(R, next, rank));
      if (Knext.dim() != next.rank * L - K.dim())
        throw Error("internal error: kernel dimension mismatch");
      K = std::move(Knext);
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<DiffColumn> dense_columns(const FiniteLocalAlgebra& R, const DenseLevel& cur) {
  const std::size_t L = R.dim();
  std::vector<DiffColumn> cols;
  for (const auto& v : cur.images) {
    DiffColumn col;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0)
        col.push_back({static_cast<std::uint32_t>(i / L), static_cast<std::uint32_t>(i % L), v[i]});
    cols.push_back(std::move(col));
  }
  return cols;
}

ResolutionTrunc dense_result(const FiniteLocalAlgebra& R, const std::vector<DenseLevel>& levels, int first,
                             int s) {
  ResolutionTrunc T;
  T.hom_cutoff = s;
  for (int i = 0; i <= s; ++i) {
    const DenseLevel& L = levels[first + i];
    T.ranks.push_back(L.rank);
    T.differentials.push_back(first + i == 0 ? std::vector<DiffColumn>{} : dense_columns(R, L));
  }
  if (first == 1) T.ambient_rank = levels[0].rank;
  return T;
}

// Unit vectors of basis elements of degree >= 1.
Subspace maximal_ideal(const FiniteLocalAlgebra& R) {
  std::vector<Vec> gens;
  for (std::size_t b = 1; b < R.dim(); ++b) {
    Vec v(R.dim(), 0);
    v[b] = 1;
    gens.push_back(std::move(v));
  }
  return Subspace::span(R.field(), R.dim(), gens);
}

Subspace module_span(const FiniteLocalAlgebra& R, std::size_t rank, const std::vector<Vec>& gens) {
  std::vector<Vec> all;
  for (const auto& g : gens) {
    if (g.size() != rank * R.dim()) throw Error("module generator has the wrong length");
    for (std::size_t b = 0; b < R.dim(); ++b) all.push_back(dense_mul_basis(R, g, rank, b));
  }
  return Subspace::span(R.field(), rank * R.dim(), all);
}

// Degree of a vector of R^rank if it is homogeneous, -1 for zero, -2 otherwise.
int homogeneous_degree(const FiniteLocalAlgebra& R, const Vec& v) {
  int d = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    int e = R.degree(i % R.dim());
    if (d == -1)
      d = e;
    else if (d != e)
      return -2;
  }
  return d;
}

}  // namespace

ResolutionTrunc resolve_residue_field(const GradedAlgebra& A, int hom_cutoff, int deg_cutoff) {
  ResolutionTrunc R = graded_residue(A, hom_cutoff, deg_cutoff);
  if (!R.saturated)
    throw SaturationFailure("syzygy generators reach the internal degree cutoff " +
                            std::to_string(deg_cutoff) + "; raise the cutoff");
  return R;
}

ResolutionTrunc resolve_residue_field_window(const GradedAlgebra& A, int hom_cutoff, int deg_cutoff) {
  return graded_residue(A, hom_cutoff, deg_cutoff);
}

ResolutionTrunc resolve_residue_field_dense(const FiniteLocalAlgebra& R, int hom_cutoff) {
  if (hom_cutoff < 0) throw Error("homological cutoff must be nonnegative");
  auto levels = run_dense(R, 1, maximal_ideal(R), hom_cutoff);
  ResolutionTrunc T = dense_result(R, levels, 0, hom_cutoff);
  T.module_label = "k";
  return T;
}

ResolutionTrunc resolve_residue_field(const FiniteLocalAlgebra& R, int hom_cutoff) {
  if (!R.is_graded()) return resolve_residue_field_dense(R, hom_cutoff);
  return graded_residue(associated_graded(R), hom_cutoff, -1);
}

ResolutionTrunc resolve_module_dense(const FiniteLocalAlgebra& R, std::size_t rank, const std::vector<Vec>& gens,
                                     int hom_cutoff, const std::string& label) {
  if (hom_cutoff < 0) throw Error("homological cutoff must be nonnegative");
  auto levels = run_dense(R, rank, module_span(R, rank, gens), hom_cutoff + 1);
  ResolutionTrunc T = dense_result(R, levels, 1, hom_cutoff);
  T.module_label = label;
  return T;
}

ResolutionTrunc resolve_module(const FiniteLocalAlgebra& R, std::size_t rank, const std::vector<Vec>& gens,
                               int hom_cutoff, const std::string& label) {
  bool homogeneous = R.is_graded();
  for (const auto& g : gens)
    if (homogeneous_degree(R, g) == -2) homogeneous = false;
  if (!homogeneous) return resolve_module_dense(R, rank, gens, hom_cutoff, label);
  if (hom_cutoff < 0) throw Error("homological cutoff must be nonnegative");

  GradedAlgebra A = associated_graded(R);
  const int s = R.top_degree();
  const std::size_t L = R.dim();
  const PrimeField& F = R.field();
  // M_j = M_{j-1} A_1 + (generators of degree j), in the layout of R^rank in degree j.
  GradedFree G(A, std::vector<int>(rank, 0), s);
  std::vector<Subspace> K;
  std::vector<Vec> prev;
  for (int j = 0; j <= s; ++j) {
    std::vector<Vec> span;
    for (const auto& v : prev)
      for (std::size_t k = 0; k < R.nvars(); ++k) span.push_back(G.mul_gen(v, j - 1, k));
    const std::size_t off = R.degree_offset(j), dj = A.dim(j);
    for (const auto& g : gens) {
      if (homogeneous_degree(R, g) != j) continue;
      Vec v(rank * dj, 0);
      for (std::size_t f = 0; f < rank; ++f)
        for (std::size_t b = 0; b < dj; ++b) v[f * dj + b] = g[f * L + off + b];
      span.push_back(std::move(v));
    }
    K.push_back(Subspace::span(F, rank * dj, span));
    prev.clear();
    for (std::size_t r = 0; r < K.back().dim(); ++r) {
      auto row = K.back().basis().row(r);
      prev.emplace_back(row.begin(), row.end());
    }
  }
  GradedRun run = run_graded(A, std::vector<int>(rank, 0), K, hom_cutoff + 1, -1);
  ResolutionTrunc T = graded_result(A, run, 1, hom_cutoff, -1);
  T.module_label = label;
  return T;
}

ResolutionTrunc resolve_maximal_ideal_power(const FiniteLocalAlgebra& R, int power, int hom_cutoff) {
  if (power < 0) throw Error("power must be nonnegative");
  std::vector<Vec> gens;
  for (std::size_t b = 0; b < R.dim(); ++b)
    if (R.degree(b) == power || (!R.is_graded() && R.degree(b) > power)) {
      Vec v(R.dim(), 0);
      v[b] = 1;
      gens.push_back(std::move(v));
    }
  std::string label = power == 0 ? "R" : power == 1 ? "m" : "m^" + std::to_string(power);
  return resolve_module(R, 1, gens, hom_cutoff, label);
}

namespace {

// Matrix over k of the map R^{cols.size()} -> R^{target_rank} given by the columns.
Matrix columns_matrix(const FiniteLocalAlgebra& R, const std::vector<DiffColumn>& cols, std::size_t target_rank) {
  const std::size_t L = R.dim();
  const PrimeField& F = R.field();
  Matrix M(F, target_rank * L, cols.size() * L);
  for (std::size_t e = 0; e < cols.size(); ++e)
    for (std::size_t b = 0; b < L; ++b)
      for (const auto& [f, r, v] : cols[e])
        for (const auto& [i, w] : R.product(r, b).entries)
          M(f * L + i, e * L + b) = F.add(M(f * L + i, e * L + b), F.mul(v, w));
  return M;
}

}  // namespace

ResolutionCheck verify_resolution(const FiniteLocalAlgebra& R, const ResolutionTrunc& T) {
  ResolutionCheck out;
  const std::size_t L = R.dim();
  const int s = static_cast<int>(T.ranks.size()) - 1;
  std::vector<Matrix> D;  // D[i] : F_i -> F_{i-1}, i >= 1
  D.push_back(Matrix(R.field(), 0, 0));
  for (int i = 1; i <= s; ++i) {
    for (const auto& col : T.differentials[i])
      for (const auto& e : col)
        if (R.degree(e.ring_index) == 0) out.minimal = false;
    D.push_back(columns_matrix(R, T.differentials[i], T.ranks[i - 1]));
  }
  for (int i = 1; i < s; ++i)
    if (D[i].cols() && D[i + 1].cols() && !(D[i] * D[i + 1]).is_zero()) out.squares_to_zero = false;
  for (int i = 1; i < s; ++i)
    if (T.ranks[i] * L - rank(D[i]) != rank(D[i + 1])) out.exact = false;
  // Degree zero: ker of the augmentation (resp. of F_0 -> G) is the image of d_1.
  if (s >= 1) {
    std::size_t ker0;
    if (T.ambient_rank == 0) {
      ker0 = T.ranks[0] * L - 1;
    } else {
      Matrix D0 = columns_matrix(R, T.differentials[0], T.ambient_rank);
      ker0 = T.ranks[0] * L - rank(D0);
      if (D0.cols() && D[1].cols() && !(D0 * D[1]).is_zero()) out.squares_to_zero = false;
    }
    if (ker0 != rank(D[1])) out.exact = false;
  }
  return out;
}

bool betti_symmetry_check(const BettiTable& T, int d, int ell) {
  if (!T.graded) throw Error("symmetry check needs a graded Betti table");
  if (T.hom_cutoff < d) throw Error("Betti table is truncated below the requested length");
  for (const auto& [key, v] : T.entries) {
    auto [i, j] = key;
    if (i > d) continue;
    if (T.beta(d - i, ell - j) != v) return false;
  }
  for (int i = 0; i <= d; ++i)
    if (T.beta(i) != T.beta(d - i)) return false;
  return true;
}

namespace {

ResolutionTrunc polynomial_resolution(const FiniteLocalAlgebra& R, int deg_cutoff) {
  GradedAlgebra A = associated_graded(R);
  const std::size_t n = R.nvars();
  const PrimeField& F = R.field();
  for (int D = std::max(deg_cutoff, A.top_degree() + 2);; D *= 2) {
    GradedAlgebra S = polynomial_ring(F, n, D);
    // Kernel of S_j -> A_j.
    std::vector<Subspace> K;
    for (int j = 0; j <= D; ++j) {
      const std::size_t sj = S.dim(j), aj = A.dim(j);
      Matrix M(F, aj, sj);
      if (aj > 0)
        for (std::size_t b = 0; b < sj; ++b) {
          Vec v{1};
          int t = 0;
          for (std::size_t k : S.word(j, b).letters) v = A.right_mul_gen(t++, v, k);
          for (std::size_t r = 0; r < aj; ++r) M(r, b) = v[r];
        }
      K.push_back(kernel(M));
    }
    GradedRun run = run_graded(S, {0}, K, static_cast<int>(n), D);
    if (!run.gens_at_cutoff) {
      ResolutionTrunc T = graded_result(S, run, 0, static_cast<int>(n), D);
      T.module_label = "R^g";
      return T;
    }
    if (D >= 64) throw SaturationFailure("polynomial resolution did not saturate by degree 64");
  }
}

}  // namespace

BettiTable polynomial_ring_betti(const FiniteLocalAlgebra& R, int deg_cutoff) {
  return betti_table(polynomial_resolution(R, deg_cutoff));
}

int polynomial_regularity(const FiniteLocalAlgebra& R, int deg_cutoff) {
  ResolutionTrunc T = polynomial_resolution(R, deg_cutoff);
  int reg = 0;
  for (std::size_t i = 0; i < T.shifts.size(); ++i)
    for (int d : T.shifts[i]) reg = std::max(reg, d - static_cast<int>(i));
  return reg;
}

std::vector<std::size_t> ext_into_algebra(const GradedAlgebra& A, int s) {
  if (!A.is_finite()) throw NotFiniteDimensional("Ext into the algebra needs a finite algebra");
  const PrimeField& F = A.field();
  ResolutionTrunc T = graded_residue(A, s + 1, -1);
  const std::size_t N = A.total_dim();
  // Products of global basis elements.
  std::vector<std::vector<Vec>> prod(N, std::vector<Vec>(N));
  for (std::size_t a = 0; a < N; ++a) {
    auto [da, ia] = A.locate(a);
    Vec ua(A.dim(da), 0);
    ua[ia] = 1;
    for (std::size_t b = 0; b < N; ++b) {
      auto [db, ib] = A.locate(b);
      Vec p(N, 0);
      if (da + db <= A.top_degree()) {
        Vec q = A.right_mul_basis(da, ua, db, ib);
        std::copy(q.begin(), q.end(), p.begin() + A.offset(da + db));
      }
      prod[a][b] = std::move(p);
    }
  }
  // d^i : A^{beta_i} -> A^{beta_{i+1}}, phi -> (sum_e phi_e a_{e,e'})_{e'}.
  std::vector<Matrix> d;
  for (int i = 0; i <= s; ++i) {
    const auto& cols = T.differentials[i + 1];
    Matrix M(F, cols.size() * N, T.ranks[i] * N);
    for (std::size_t ep = 0; ep < cols.size(); ++ep)
      for (const auto& [e, g, v] : cols[ep])
        for (std::size_t c = 0; c < N; ++c) {
          const Vec& p = prod[c][g];
          for (std::size_t r = 0; r < N; ++r)
            if (p[r] != 0) M(ep * N + r, e * N + c) = F.add(M(ep * N + r, e * N + c), F.mul(v, p[r]));
        }
    d.push_back(std::move(M));
  }
  std::vector<std::size_t> out;
  for (int i = 0; i <= s; ++i) {
    std::size_t ker = T.ranks[i] * N - rank(d[i]);
    std::size_t im = i == 0 ? 0 : rank(d[i - 1]);
    out.push_back(ker - im);
  }
  return out;
}

}  // namespace multlab
