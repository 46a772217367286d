#include "arecip/surface/embeddings.hpp"

#include <algorithm>

#include "arecip/error.hpp"

namespace arecip::surface {

using num::BigComplex;
using num::BigFloat;

BigComplex evaluate(const arith::IntPoly& h, const BigComplex& z) {
    const int bits = z.precision();
    BigComplex r(bits);
    for (int i = h.degree(); i >= 0; --i) {
        r *= z;
        r.re += BigFloat(h[i], bits);
    }
    return r;
}

namespace {

BigComplex eval_monic(const std::vector<BigFloat>& c, const BigComplex& z) {
    BigComplex r(z.precision());
    r.re = BigFloat(1L, z.precision());
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        r *= z;
        r.re += c[static_cast<std::size_t>(i)];
    }
    return r;
}

BigComplex eval_monic_derivative(const std::vector<BigFloat>& c, const BigComplex& z) {
    const int n = static_cast<int>(c.size());
    BigComplex r(z.precision());
    r.re = BigFloat(static_cast<long>(n), z.precision());
    for (int i = n - 1; i >= 1; --i) {
        r *= z;
        r.re += c[static_cast<std::size_t>(i)] * BigFloat(static_cast<long>(i), z.precision());
    }
    return r;
}

}  // namespace

AlgebraicPointData embeddings(const arith::IntPoly& h, const NumericConfig& config) {
    const int n = h.degree();
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "embeddings need a polynomial of positive degree");
    const int bits = config.precision_bits;
    const int wp = bits + 64;
    AlgebraicPointData out;
    out.h = h;
    out.precision_bits = bits;

    // Monic coefficients c[0..n-1] of h / lc(h).
    std::vector<BigFloat> c;
    const BigFloat lc(h.leading(), wp);
    for (int i = 0; i < n; ++i) c.push_back(BigFloat(h[i], wp) / lc);

    std::vector<BigComplex> z;
    if (n == 1) {
        z.emplace_back(-c[0], BigFloat(wp));
    } else {
        BigFloat radius(1L, wp);
        for (const auto& a : c) radius = num::max(radius, num::abs(a) + BigFloat(1L, wp));
        const BigFloat two_pi = num::pi(wp) * BigFloat(2L, wp);
        for (int k = 0; k < n; ++k) {
            BigFloat angle = two_pi * BigFloat(static_cast<long>(k), wp) / BigFloat(static_cast<long>(n), wp) +
                             BigFloat(0.4, wp);
            z.emplace_back(radius * num::cos(angle), radius * num::sin(angle));
        }
        const BigFloat tol = num::exp2i(-(wp - 8), wp);
        bool converged = false;
        for (int iter = 0; iter < config.root_max_iterations && !converged; ++iter) {
            BigFloat worst(wp);
            for (int k = 0; k < n; ++k) {
                BigComplex denom(wp);
                denom.re = BigFloat(1L, wp);
                for (int j = 0; j < n; ++j)
                    if (j != k) denom *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
                if (denom.re.is_zero() && denom.im.is_zero()) {
                    // Coincident iterates: nudge and continue.
                    z[static_cast<std::size_t>(k)].re += num::exp2i(-(wp / 4), wp);
                    worst = BigFloat(1L, wp);
                    continue;
                }
                BigComplex step = eval_monic(c, z[static_cast<std::size_t>(k)]) / denom;
                z[static_cast<std::size_t>(k)] -= step;
                BigFloat rel = num::abs(step) / (BigFloat(1L, wp) + num::abs(z[static_cast<std::size_t>(k)]));
                worst = num::max(worst, rel);
            }
            converged = worst < tol;
        }
        if (!converged) throw Error(ErrorKind::RootFindingDivergence, "Durand-Kerner did not converge for " + h.to_string());
        for (auto& r : z) {
            for (int i = 0; i < 3; ++i) {
                BigComplex d = eval_monic_derivative(c, r);
                if (d.re.is_zero() && d.im.is_zero()) break;
                r -= eval_monic(c, r) / d;
            }
        }
    }

    // Residual check at the requested precision, relative to the size of
    // the terms.
    for (const auto& r : z) {
        BigFloat scale(1L, wp), pw(1L, wp);
        const BigFloat mag = num::abs(r);
        for (const auto& a : c) {
            scale += num::abs(a) * pw;
            pw *= mag;
        }
        scale += pw;
        BigFloat residual = num::abs(eval_monic(c, r)) / scale;
        if (residual > num::exp2i(-(bits - 8), wp))
            throw Error(ErrorKind::RootFindingDivergence, "root residual too large for " + h.to_string());
    }

    const BigFloat real_tol = num::exp2i(-(bits / 2), wp);
    std::vector<BigComplex> reals, upper;
    for (auto& r : z) {
        if (num::abs(r.im) <= real_tol * (BigFloat(1L, wp) + num::abs(r.re))) {
            reals.emplace_back(r.re, BigFloat(wp));
        } else if (r.im.sign() > 0) {
            upper.push_back(r);
        }
    }
    if (reals.size() + 2 * upper.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::RootFindingDivergence, "roots do not pair into conjugates for " + h.to_string());
    std::sort(reals.begin(), reals.end(), [](const BigComplex& a, const BigComplex& b) { return a.re < b.re; });
    std::sort(upper.begin(), upper.end(), [](const BigComplex& a, const BigComplex& b) {
        return a.re < b.re || (a.re == b.re && a.im < b.im);
    });
    for (auto& r : reals) out.roots.emplace_back(r.re.with_precision(bits), r.im.with_precision(bits));
    out.real_count = static_cast<int>(reals.size());
    for (auto& r : upper) {
        out.roots.emplace_back(r.re.with_precision(bits), r.im.with_precision(bits));
        out.roots.emplace_back(r.re.with_precision(bits), (-r.im).with_precision(bits));
    }
    return out;
}

}  // namespace arecip::surface
