#pragma once

#include <vector>

#include "arecip/config.hpp"
#include "arecip/exact_arith/int_poly.hpp"
#include "arecip/numeric/bigfloat.hpp"

namespace arecip::surface {

// Complex embeddings of Q(theta), theta a root of h. Real roots come first
// (ascending), then complex roots ordered by real part with the positive
// imaginary member of each conjugate pair before its partner.
struct AlgebraicPointData {
    arith::IntPoly h;
    int precision_bits = 0;
    std::vector<num::BigComplex> roots;
    int real_count = 0;
};

// Durand-Kerner iteration at a guarded working precision followed by Newton
// polishing. Throws RootFindingDivergence when the iteration does not settle.
AlgebraicPointData embeddings(const arith::IntPoly& h, const NumericConfig& config);

// h evaluated at z.
num::BigComplex evaluate(const arith::IntPoly& h, const num::BigComplex& z);

}  // namespace arecip::surface
