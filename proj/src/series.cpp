#include "multlab/series.hpp"

#include <bit>

#include "multlab/errors.hpp"

namespace multlab {

IntPoly GolodData::denominator() const {
  IntPoly d(a.size() + 2, 0);
  d[0] = 1;
  for (std::size_t j = 1; j <= a.size(); ++j) d[j + 1] = -static_cast<std::int64_t>(a[j - 1]);
  poly_trim(d);
  return d;
}

namespace {

// Subsets of {0..n-1} of size j as bitmasks, in increasing order.
std::vector<unsigned> subsets(std::size_t n, std::size_t j) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == j) out.push_back(m);
  return out;
}

// d_j : wedge^j (x) R -> wedge^{j-1} (x) R as a matrix over k.
Matrix koszul_differential(const FiniteLocalAlgebra& R, std::size_t j) {
  const std::size_t n = R.nvars(), L = R.dim();
  const PrimeField& F = R.field();
  auto src = subsets(n, j), dst = subsets(n, j - 1);
  std::vector<long> index(1u << n, -1);
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<long>(i);
  Matrix M(F, dst.size() * L, src.size() * L);
  for (std::size_t c = 0; c < src.size(); ++c) {
    const unsigned S = src[c];
    int sign_count = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (!(S >> t & 1u)) continue;
      const std::size_t row_block = static_cast<std::size_t>(index[S & ~(1u << t)]);
      const Elem sign = sign_count % 2 ? F.neg(1) : 1;
      ++sign_count;
      for (std::size_t b = 0; b < L; ++b)
        for (const auto& [r, v] : R.product(R.generator(t), b).entries)
          M(row_block * L + r, c * L + b) = F.add(M(row_block * L + r, c * L + b), F.mul(sign, v));
    }
  }
  return M;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SeriesWitness compare(int cutoff, TruncSeries expected, TruncSeries computed) {
  int mismatch = -1;
  for (int i = 0; i <= cutoff && mismatch < 0; ++i)
    if (expected[i] != computed[i]) mismatch = i;
  return SeriesWitness{cutoff, std::move(expected), std::move(computed), mismatch};
}

}  // namespace

GolodData koszul_homology_dims(const FiniteLocalAlgebra& R) {
  const std::size_t n = R.nvars(), L = R.dim();
  if (n > 16) throw Error("Koszul complex too large");
  std::vector<std::size_t> rk(n + 2, 0);  // rk[j] = rank d_j
  for (std::size_t j = 1; j <= n; ++j) rk[j] = rank(koszul_differential(R, j));
  GolodData g;
  g.edim = n;
  for (std::size_t j = 1; j <= n; ++j) g.a.push_back(binom(n, j) * L - rk[j] - rk[j + 1]);
  return g;
}

ClosedForm golod_poincare(const GolodData& data, int cutoff) {
  IntPoly num = poly_pow({1, 1}, static_cast<int>(data.edim));
  IntPoly den = data.denominator();
  TruncSeries s = TruncSeries(num, cutoff) * TruncSeries(den, cutoff).inverse();
  return ClosedForm{std::move(num), std::move(den), std::move(s)};
}

ClosedForm ci_poincare(std::size_t n, std::size_t c, int cutoff) {
  IntPoly num = poly_pow({1, 1}, static_cast<int>(n));
  IntPoly den = poly_pow({1, 0, -1}, static_cast<int>(c));
  TruncSeries s = TruncSeries(num, cutoff) * TruncSeries(den, cutoff).inverse();
  return ClosedForm{std::move(num), std::move(den), std::move(s)};
}

TruncSeries poincare_series(const ResolutionTrunc& F) {
  TruncSeries s(F.hom_cutoff);
  for (int i = 0; i <= F.hom_cutoff; ++i) s[i] = static_cast<std::int64_t>(F.ranks[i]);
  return s;
}

TruncSeries filtration_hilbert_series(const FiniteLocalAlgebra& R, int power, int cutoff) {
  if (power < 0) throw Error("power must be nonnegative");
  TruncSeries s(cutoff);
  const auto& h = R.filtration_dims();
  for (int i = 0; i <= cutoff; ++i)
    if (power + i < static_cast<int>(h.size())) s[i] = static_cast<std::int64_t>(h[power + i]);
  return s;
}

SeriesWitness golod_witness(const FiniteLocalAlgebra& R, int cutoff) {
  return compare(cutoff, golod_poincare(koszul_homology_dims(R), cutoff).series,
                 poincare_series(resolve_residue_field(R, cutoff)));
}

SeriesWitness ci_witness(const FiniteLocalAlgebra& R, int cutoff) {
  const std::size_t c = minimal_generator_count(R.presentation(), R);
  return compare(cutoff, ci_poincare(R.nvars(), c, cutoff).series,
                 poincare_series(resolve_residue_field(R, cutoff)));
}

SeriesWitness froberg_witness(const FiniteLocalAlgebra& R, int cutoff) {
  TruncSeries P = poincare_series(resolve_residue_field(R, cutoff));
  TruncSeries H = filtration_hilbert_series(R, 0, cutoff);
  return compare(cutoff, TruncSeries::one(cutoff), H.negate_variable() * P);
}

bool froberg_check(const FiniteLocalAlgebra& R, int cutoff) { return froberg_witness(R, cutoff).holds(); }

LevinResult levin_check(const FiniteLocalAlgebra& R, int power, int cutoff) {
  if (power < 0) throw Error("power must be nonnegative");
  TruncSeries H = filtration_hilbert_series(R, power, cutoff);
  if (power > R.top_degree()) {
    TruncSeries z(cutoff);
    return LevinResult{power, true, compare(cutoff, z, z)};
  }
  TruncSeries Pk = poincare_series(resolve_residue_field(R, cutoff));
  TruncSeries Pm = poincare_series(resolve_maximal_ideal_power(R, power, cutoff));
  return LevinResult{power, false, compare(cutoff, Pm, H.negate_variable() * Pk)};
}

int sega_bound(const FiniteLocalAlgebra& R) { return polynomial_regularity(R) + 1; }

NumeratorWitness numerator_witness(const TruncSeries& P, const IntPoly& D) {
  TruncSeries prod = P * TruncSeries(D, P.cutoff());
  NumeratorWitness w;
  w.product = prod.coeffs();
  w.degree_bound = 0;
  for (int i = 0; i <= prod.cutoff(); ++i)
    if (prod[i] != 0) w.degree_bound = i + 1;
  w.spare = prod.cutoff() + 1 - w.degree_bound;
  // Two trailing zeros; asking for deg D of them would leave nothing to test
  // for (1 - t^2)^3 at cutoff 8.
  w.polynomial = w.spare >= 2;
  poly_trim(w.product);
  return w;
}

}  // namespace multlab
