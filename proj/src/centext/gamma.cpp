#include "arecip/centext/gamma.hpp"

#include <cmath>

#include "arecip/error.hpp"

namespace arecip::centext {

namespace {

constexpr long double kTol = 1e-14L;

// Columns orthonormal for the metric g.
RealMatrix orthonormal_basis(const RealMatrix& g) {
    Eigen::LLT<RealMatrix> llt(g);
    if (llt.info() != Eigen::Success) throw Error(ErrorKind::InvalidArgument, "metric not positive definite");
    const RealMatrix u = llt.matrixU();
    return u.inverse();
}

RealMatrix random_orthogonal(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = nd(rng);
    Eigen::HouseholderQR<RealMatrix> qr(m);
    return qr.householderQ() * RealMatrix::Identity(n, n);
}

}  // namespace

long double gamma_sequence(const ExactSequenceData& seq, std::mt19937_64* rng) {
    const auto d1 = seq.g1.rows(), d2 = seq.g2.rows(), d3 = seq.g3.rows();
    if (seq.inj.rows() != d2 || seq.inj.cols() != d1 || seq.surj.rows() != d3 || seq.surj.cols() != d2)
        throw Error(ErrorKind::NotExact, "map shapes do not match the spaces");
    if (d2 != d1 + d3) throw Error(ErrorKind::NotExact, "dim V2 != dim V1 + dim V3");
    const long double scale = 1 + seq.surj.norm() * seq.inj.norm();
    if ((seq.surj * seq.inj).norm() > kTol * scale) throw Error(ErrorKind::NotExact, "composition is not zero");
    Eigen::FullPivLU<RealMatrix> lu_inj(seq.inj), lu_surj(seq.surj);
    lu_inj.setThreshold(kTol);
    lu_surj.setThreshold(kTol);
    if (lu_inj.rank() != d1 || lu_surj.rank() != d3) throw Error(ErrorKind::NotExact, "maps are not injective/surjective");

    RealMatrix e1 = orthonormal_basis(seq.g1);
    RealMatrix e3 = orthonormal_basis(seq.g3);
    if (rng) {
        e1 = e1 * random_orthogonal(static_cast<int>(d1), *rng);
        e3 = e3 * random_orthogonal(static_cast<int>(d3), *rng);
    }
    const RealMatrix x = seq.inj * e1;
    // A particular preimage by least squares, optionally moved by an element
    // of the kernel (the image of V1).
    RealMatrix y = seq.surj.completeOrthogonalDecomposition().solve(e3);
    if (rng) {
        std::normal_distribution<double> nd;
        RealMatrix shift(d1, d3);
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d3; ++j) shift(i, j) = nd(*rng);
        y += seq.inj * shift;
    }
    if (d1 > 0) {
        const RealMatrix gx = x.transpose() * seq.g2 * x;
        y -= x * gx.ldlt().solve(x.transpose() * seq.g2 * y);
    }
    RealMatrix combined(d2, d2);
    combined << x, y;
    const RealMatrix gram = combined.transpose() * seq.g2 * combined;
    return std::sqrt(gram.determinant());
}

}  // namespace arecip::centext
