#pragma once

// Seeded instance generators shared by selftest and the acceptance binary.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "arecip/exact_arith/int_poly.hpp"
#include "arecip/surface/function.hpp"
#include "arecip/surface/geometry.hpp"

namespace arecip::laws::population {

// t, t-1, t-5, t+2, t^2+1, t^2+2, 2t-1
const std::vector<arith::IntPoly>& base_pool();

// Up to `max_factors` bases from the pool with exponents in [-3, 3] and a
// unit whose numerator and denominator lie in [1, 50] (random sign).
surface::FactoredRationalFunction random_function(std::mt19937_64& rng,
                                                  const std::vector<arith::IntPoly>& pool = base_pool(),
                                                  int max_factors = 3);

// A closed point over one of `primes` lying on a base of the pool, at fiber
// infinity, or (occasionally) on no base at all.
surface::ClosedPoint random_point(std::mt19937_64& rng, const std::vector<std::uint64_t>& primes,
                                  const std::vector<arith::IntPoly>& pool = base_pool());

// (f, g) built from pool bases other than h, each also carrying h to a random
// exponent in [-3, 3] so the horizontal symbol along H(h) is nontrivial.
std::pair<surface::FactoredRationalFunction, surface::FactoredRationalFunction> random_horizontal_pair(
    std::mt19937_64& rng, const arith::IntPoly& h, const std::vector<arith::IntPoly>& pool = base_pool());

}  // namespace arecip::laws::population
