#pragma once

#include <Eigen/Dense>
#include <random>

namespace arecip::centext {

using RealMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// 0 -> V1 -> V2 -> V3 -> 0 with metrics given by Gram matrices on the
// standard coordinates of each space.
struct ExactSequenceData {
    RealMatrix g1, g2, g3;  // positive definite
    RealMatrix inj;         // dim V2 x dim V1
    RealMatrix surj;        // dim V3 x dim V2
};

// Volume discrepancy: the Gram volume in V2 of an orthonormal basis of V1
// followed by preimages of an orthonormal basis of V3 projected orthogonally
// off the image of V1. With `rng` set, the orthonormal bases and the
// preimages are re-randomized (the value does not depend on them).
// Throws NotExact when the sequence is not exact.
long double gamma_sequence(const ExactSequenceData& seq, std::mt19937_64* rng = nullptr);

}  // namespace arecip::centext
