#include "multlab/generators.hpp"

#include "multlab/poly.hpp"

namespace multlab {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Elem nonzero(Rng& rng, const PrimeField& F) { return static_cast<Elem>(uniform(rng, 1, F.modulus() - 1)); }

}  // namespace

RingSpec random_monomial_ring(Rng& rng, std::size_t max_vars, int max_top, std::uint32_t p) {
  RingSpec s;
  s.p = p;
  const std::size_t n = uniform(rng, 1, max_vars);
  s.vars = default_var_names(n);
  if (uniform(rng, 0, 2) == 0) {
    int budget = max_top;
    for (std::size_t i = 0; i < n; ++i) {
      int a = 2;
      const int room = budget - static_cast<int>(n - i - 1);
      if (room > 1) a = 1 + static_cast<int>(uniform(rng, 1, static_cast<std::size_t>(room)));
      budget -= a - 1;
      s.relations.push_back(s.vars[i] + "^" + std::to_string(a));
    }
    return s;
  }
  // Keep the generating set minimal: skip multiples of monomials already chosen.
  std::vector<Monomial> chosen;
  auto covered = [&](const Monomial& m) {
    for (const auto& c : chosen)
      if (c.divides(m)) return true;
    return false;
  };
  for (int d = 2; d <= max_top + 1; ++d)
    for (const auto& m : commutative_basis(n, d))
      if (!covered(m) && (d == max_top + 1 || uniform(rng, 0, 3) == 0)) chosen.push_back(m);
  for (const auto& m : chosen) s.relations.push_back(monomial_string(m, s.vars));
  return s;
}

QuadraticPresentation random_single_relation(Rng& rng, const PrimeField& F, std::size_t m, std::size_t r) {
  for (;;) {
    Matrix A(F, m, r), B(F, r, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        A(i, j) = static_cast<Elem>(uniform(rng, 0, F.modulus() - 1));
        B(j, i) = static_cast<Elem>(uniform(rng, 0, F.modulus() - 1));
      }
    Matrix L = A * B;
    if (rank(L) != r) continue;
    Vec v(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) v[i * m + j] = L(i, j);
    return QuadraticPresentation(F, m, Subspace::span(F, m * m, {v}));
  }
}

QuadraticPresentation random_quadratic(Rng& rng, const PrimeField& F, std::size_t n, std::size_t r,
                                       std::size_t support) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < r; ++k) {
    Vec v(n * n, 0);
    const std::size_t nz = uniform(rng, 1, support);
    for (std::size_t t = 0; t < nz; ++t) v[uniform(rng, 0, n * n - 1)] = nonzero(rng, F);
    rows.push_back(std::move(v));
  }
  return QuadraticPresentation(F, n, Subspace::span(F, n * n, rows));
}

}  // namespace multlab
