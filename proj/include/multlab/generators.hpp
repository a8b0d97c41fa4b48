#pragma once

#include <cstddef>
#include <random>

#include "multlab/quadratic.hpp"
#include "multlab/ringspec.hpp"

namespace multlab {

using Rng = std::mt19937_64;

// k[x_1..x_n]/I with I monomial and minimally generated, n <= max_vars and m^{max_top+1} = 0. About a
// third of the draws are pure-power complete intersections, the rest random
// monomial ideals.
RingSpec random_monomial_ring(Rng& rng, std::size_t max_vars, int max_top, std::uint32_t p = 101);

// <x_1..x_m | f> with f of the given coefficient-matrix rank.
QuadraticPresentation random_single_relation(Rng& rng, const PrimeField& F, std::size_t m, std::size_t rank);

// <x_1..x_n | W> with W spanned by r random vectors having at most
// `support` nonzero coordinates each.
QuadraticPresentation random_quadratic(Rng& rng, const PrimeField& F, std::size_t n, std::size_t r,
                                       std::size_t support);

}  // namespace multlab
