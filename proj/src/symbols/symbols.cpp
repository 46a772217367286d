#include "arecip/symbols/symbols.hpp"

#include <algorithm>
#include <optional>

#include "arecip/error.hpp"
#include "arecip/exact_arith/integer.hpp"

namespace arecip::symbols {

using arith::IntPoly;
using arith::ModPPoly;

long det2(const RankTwoValuation& vf, const RankTwoValuation& vg) { return vf.nu1 * vg.nu2 - vg.nu1 * vf.nu2; }

RankTwoValuation rank2_vertical(const FactoredRationalFunction& f, std::uint64_t p, const ClosedPoint& x) {
    if (x.p != p) throw Error(ErrorKind::InvalidArgument, "point " + x.to_string() + " is not on V:" + std::to_string(p));
    if (x.is_infinity()) return rank2_vertical(surface::chart_swap(f), p, surface::chart_swap(x));
    RankTwoValuation v;
    v.nu1 = surface::vertical_order(f, p);
    for (const auto& [b, e] : f.factors()) {
        const ModPPoly bp = ModPPoly::from_int(b, p);
        if (bp.is_zero()) throw Error(ErrorKind::ReductionUndefined, "base vanishes mod p: " + b.to_string());
        v.nu2 += static_cast<long>(e) * arith::order_at(bp, *x.pi);
    }
    return v;
}

IntPoly monic_normalization(const IntPoly& h) {
    const int d = h.degree();
    const mpz_class& lc = h.leading();
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    mpz_class pw = 1;  // lc^(d-1-i), filled from the top
    c[static_cast<std::size_t>(d)] = 1;
    for (int i = d - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = h[i] * pw;
        pw *= lc;
    }
    return IntPoly(std::move(c));
}

namespace {

// Re-lifts the factor to at least `precision` digits and returns the factor of
// the new factorization that agrees with `old` to old precision.
arith::PadicFactor refine(const IntPoly& h_monic, const arith::PadicFactor& old, int precision,
                          const ArithConfig& config) {
    const std::uint64_t p = old.poly.prime();
    int n = precision;
    while (true) {
        try {
            const auto fac = arith::padic_factor(h_monic, p, n, config.seed);
            const arith::PadicFactor* match = nullptr;
            int matches = 0;
            for (const auto& cand : fac.factors) {
                if (cand.poly.degree() != old.poly.degree() || cand.residue != old.residue) continue;
                const int common = std::min(cand.poly.precision(), old.poly.precision());
                if (cand.poly.truncated(common).poly() == old.poly.truncated(common).poly()) {
                    match = &cand;
                    ++matches;
                }
            }
            if (matches != 1 || match->poly.precision() <= old.poly.precision()) {
                if (n >= config.padic_cap) throw InsufficientPrecision(n, "cannot separate p-adic branches");
                n = std::min(2 * n, config.padic_cap);
                continue;
            }
            return *match;
        } catch (const InsufficientPrecision&) {
            if (n >= config.padic_cap) throw;
            n = std::min(2 * n, config.padic_cap);
        }
    }
}

}  // namespace

namespace {

// ord_w(a(theta)) at the precision needed to either pin it down or to show
// that it is at least `bound`. Returns {value, exact}; when exact is false,
// value is a lower bound that already reaches `bound`.
std::pair<long, bool> valuation_core(const BranchData& branch, const IntPoly& a, const ArithConfig& config,
                                     std::optional<long> bound) {
    if (a.is_zero()) throw Error(ErrorKind::EvaluationAtZero, "valuation of the zero polynomial");
    const mpz_class pz = arith::to_mpz(branch.p);
    auto [content, prim] = arith::content_primitive(a);
    const long from_content = static_cast<long>(branch.e) * arith::valuation(content, pz);
    const int k = prim.degree();
    if (k == 0) return {from_content, true};
    const mpz_class& lc = branch.h.leading();
    const long shift = from_content - static_cast<long>(k) * branch.e * arith::valuation(lc, pz);
    // A(y) = lc^k prim(y / lc), so A(theta') = lc^k prim(theta).
    std::vector<mpz_class> ac(static_cast<std::size_t>(k) + 1);
    mpz_class pw = 1;
    for (int i = k; i >= 0; --i) {
        ac[static_cast<std::size_t>(i)] = prim[i] * pw;
        pw *= lc;
    }
    const IntPoly big_a(std::move(ac));

    arith::PadicFactor factor = branch.factor;
    const IntPoly h_monic = monic_normalization(branch.h);
    while (true) {
        const mpz_class mod = factor.poly.modulus();
        mpz_class r = arith::resultant(factor.poly.poly(), big_a);
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
        if (r != 0) {
            const long v = arith::valuation(r, pz);
            if (v % factor.f != 0)
                throw Error(ErrorKind::NotExact, "resultant valuation not divisible by residue degree");
            return {v / factor.f + shift, true};
        }
        const long lower = factor.poly.precision() / factor.f + shift;
        if (bound && lower >= *bound) return {lower, false};
        if (factor.poly.precision() >= config.padic_cap)
            throw InsufficientPrecision(factor.poly.precision(), "resultant vanishes to working precision");
        factor = refine(h_monic, factor, std::min(2 * factor.poly.precision(), config.padic_cap), config);
    }
}

bool valuation_at_least(const BranchData& branch, const IntPoly& a, long bound, const ArithConfig& config) {
    return valuation_core(branch, a, config, bound).first >= bound;
}

}  // namespace

long valuation_via_resultant(const BranchData& branch, const IntPoly& a, const ArithConfig& config) {
    return valuation_core(branch, a, config, std::nullopt).first;
}

std::vector<BranchData> branch_decomposition(const IntPoly& h, std::uint64_t p, const ArithConfig& config) {
    if (h.degree() < 1) throw Error(ErrorKind::InvalidArgument, "branches need a horizontal curve of positive degree");
    const IntPoly hm = monic_normalization(h);
    const auto fac = arith::padic_factor(hm, p, config);
    const bool maximal = arith::dedekind_p_maximal(hm, p);
    const ModPPoly hp = ModPPoly::from_int(h, p);
    std::vector<ModPPoly> residues;
    if (hp.degree() >= 1)
        for (const auto& rf : arith::factor_mod_p(hp, config.seed).factors) residues.push_back(rf.poly);

    std::vector<BranchData> out;
    for (const auto& factor : fac.factors) {
        BranchData b;
        b.h = h;
        b.p = p;
        b.factor = factor;
        b.e = factor.e;
        b.f = factor.f;
        b.p_maximal = maximal;
        if (!valuation_at_least(b, IntPoly{0, 1}, 0, config)) {
            b.center = ClosedPoint::at_infinity(p);
            b.weight_rel = b.f;
        } else {
            bool found = false;
            for (const auto& pi : residues) {
                if (valuation_at_least(b, pi.lift(), 1, config)) {
                    b.center = ClosedPoint::affine(pi);
                    if (b.f % pi.degree() != 0)
                        throw Error(ErrorKind::NotExact, "residue degree not a multiple of the center degree");
                    b.weight_rel = b.f / pi.degree();
                    found = true;
                    break;
                }
            }
            if (!found) throw Error(ErrorKind::NotExact, "branch has no center on " + h.to_string());
        }
        out.push_back(std::move(b));
    }
    std::stable_sort(out.begin(), out.end(), [](const BranchData& a, const BranchData& b) {
        if (a.center < b.center) return true;
        if (b.center < a.center) return false;
        return arith::canonical_less(a.factor.poly.poly(), b.factor.poly.poly());
    });
    return out;
}

std::vector<BranchData> branches_at(const IntPoly& h, const ClosedPoint& x, const ArithConfig& config) {
    std::vector<BranchData> out;
    for (auto& b : branch_decomposition(h, x.p, config))
        if (b.center == x) out.push_back(std::move(b));
    return out;
}

long branch_order(const BranchData& branch, const FactoredRationalFunction& f, const ArithConfig& config) {
    long total = static_cast<long>(branch.e) * surface::vertical_order(f, branch.p);
    for (const auto& [b, e] : f.factors()) {
        if (b == branch.h) continue;
        total += static_cast<long>(e) * valuation_via_resultant(branch, b, config);
    }
    return total;
}

const std::vector<BranchData>& BranchCache::branches(const IntPoly& h, std::uint64_t p) {
    auto key = std::make_pair(h.to_string(), p);
    auto it = branches_.find(key);
    if (it == branches_.end()) it = branches_.emplace(key, branch_decomposition(h, p, config_)).first;
    return it->second;
}

long BranchCache::valuation(const IntPoly& h, std::uint64_t p, std::size_t branch_index, const IntPoly& a) {
    auto key = std::make_tuple(h.to_string(), p, branch_index, a.to_string());
    auto it = valuations_.find(key);
    if (it != valuations_.end()) return it->second;
    const long v = valuation_via_resultant(branches(h, p).at(branch_index), a, config_);
    valuations_.emplace(key, v);
    return v;
}

namespace {

long cached_branch_order(BranchCache& cache, const IntPoly& h, std::uint64_t p, std::size_t idx,
                         const FactoredRationalFunction& f) {
    const BranchData& br = cache.branches(h, p)[idx];
    long total = static_cast<long>(br.e) * surface::vertical_order(f, p);
    for (const auto& [b, e] : f.factors()) {
        if (b == h) continue;
        total += static_cast<long>(e) * cache.valuation(h, p, idx, b);
    }
    return total;
}

}  // namespace

long curve_point_symbol(const Curve& c, const ClosedPoint& x, const FactoredRationalFunction& f,
                        const FactoredRationalFunction& g, const ArithConfig& config, BranchCache* cache) {
    if (!surface::incidence(c, x))
        throw Error(ErrorKind::InvalidArgument, "point " + x.to_string() + " is not on " + c.to_string());
    if (x.is_infinity())
        return curve_point_symbol(surface::chart_swap(c), surface::chart_swap(x), surface::chart_swap(f),
                                  surface::chart_swap(g), config, cache);
    if (c.kind == Curve::Kind::Vertical) return det2(rank2_vertical(f, c.p, x), rank2_vertical(g, c.p, x));

    const long m_f = f.exponent(c.h), m_g = g.exponent(c.h);
    if (m_f == 0 && m_g == 0) return 0;
    long total = 0;
    if (cache) {
        const auto& brs = cache->branches(c.h, x.p);
        for (std::size_t i = 0; i < brs.size(); ++i) {
            if (!(brs[i].center == x)) continue;
            long nu = 0;
            if (m_f != 0) nu += m_f * cached_branch_order(*cache, c.h, x.p, i, g);
            if (m_g != 0) nu -= m_g * cached_branch_order(*cache, c.h, x.p, i, f);
            total += brs[i].weight_rel * nu;
        }
        return total;
    }
    for (const auto& br : branches_at(c.h, x, config)) {
        long nu = 0;
        if (m_f != 0) nu += m_f * branch_order(br, g, config);
        if (m_g != 0) nu -= m_g * branch_order(br, f, config);
        total += br.weight_rel * nu;
    }
    return total;
}

std::vector<SymbolTerm> curve_point_symbol_terms(const Curve& c, const ClosedPoint& x,
                                                 const FactoredRationalFunction& f,
                                                 const FactoredRationalFunction& g, const ArithConfig& config) {
    if (!surface::incidence(c, x))
        throw Error(ErrorKind::InvalidArgument, "point " + x.to_string() + " is not on " + c.to_string());
    if (x.is_infinity())
        return curve_point_symbol_terms(surface::chart_swap(c), surface::chart_swap(x), surface::chart_swap(f),
                                        surface::chart_swap(g), config);
    if (c.kind == Curve::Kind::Vertical) {
        const RankTwoValuation vf = rank2_vertical(f, c.p, x), vg = rank2_vertical(g, c.p, x);
        return {SymbolTerm{"rank2 f=(" + std::to_string(vf.nu1) + "," + std::to_string(vf.nu2) + ") g=(" +
                               std::to_string(vg.nu1) + "," + std::to_string(vg.nu2) + ")",
                           det2(vf, vg)}};
    }
    const long m_f = f.exponent(c.h), m_g = g.exponent(c.h);
    std::vector<SymbolTerm> out;
    const auto brs = branches_at(c.h, x, config);
    for (std::size_t i = 0; i < brs.size(); ++i) {
        const auto& br = brs[i];
        const long of = m_g != 0 ? branch_order(br, f, config) : 0;
        const long og = m_f != 0 ? branch_order(br, g, config) : 0;
        out.push_back(SymbolTerm{"branch " + std::to_string(i) + " e=" + std::to_string(br.e) + " f=" +
                                     std::to_string(br.f) + " weight=" + std::to_string(br.weight_rel),
                                 br.weight_rel * (m_f * og - m_g * of)});
    }
    return out;
}

namespace {

num::BigFloat log_abs_without(const FactoredRationalFunction& f, const IntPoly& h, const num::BigComplex& z) {
    const int bits = z.precision();
    num::BigFloat total = num::log(num::abs(num::BigFloat(f.unit(), bits)));
    for (const auto& [b, e] : f.factors()) {
        if (b == h) continue;
        const num::BigFloat mag = num::abs(surface::evaluate(b, z));
        if (mag.is_zero()) throw Error(ErrorKind::EvaluationAtZero, "base vanishes at the embedding");
        total += num::BigFloat(static_cast<long>(e), bits) * num::log(mag);
    }
    return total;
}

}  // namespace

num::BigFloat archimedean_symbol(const FactoredRationalFunction& f, const FactoredRationalFunction& g,
                                 const surface::AlgebraicPointData& point, std::size_t sigma) {
    const auto& z = point.roots.at(sigma);
    const int bits = z.precision();
    const long m_f = f.exponent(point.h), m_g = g.exponent(point.h);
    num::BigFloat out(bits);
    if (m_g != 0) out += num::BigFloat(m_g, bits) * log_abs_without(f, point.h, z);
    if (m_f != 0) out -= num::BigFloat(m_f, bits) * log_abs_without(g, point.h, z);
    return out;
}

}  // namespace arecip::symbols
