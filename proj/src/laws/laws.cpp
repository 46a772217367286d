#include "arecip/laws/laws.hpp"

#include <algorithm>
#include <set>

#include "arecip/error.hpp"
#include "arecip/exact_arith/integer.hpp"
#include "arecip/exact_arith/mod_poly.hpp"
#include "arecip/surface/embeddings.hpp"

namespace arecip::laws {

using arith::IntPoly;
using arith::ModPPoly;

const char* to_string(Law law) {
    switch (law) {
        case Law::Point: return "point";
        case Law::Vertical: return "vertical";
        case Law::Horizontal: return "horizontal";
    }
    return "unknown";
}

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

bool is_scope_limit(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnsupportedFactorization:
        case ErrorKind::InsufficientPrecision:
        case ErrorKind::FactorizationTimeout:
        case ErrorKind::RootFindingDivergence:
        case ErrorKind::EvaluationAtZero:
            return true;
        default:
            return false;
    }
}

LawReport inconclusive(LawReport report, const Error& e) {
    report.items.clear();
    report.exact_sum = 0;
    report.log_coefficients.clear();
    report.numeric_sum.reset();
    report.verdict = Verdict::Inconclusive;
    report.reason = std::string(arecip::to_string(e.kind())) + ": " + e.what();
    return report;
}

std::string branch_label(const symbols::BranchData& b, std::size_t index) {
    return "branch " + std::to_string(index) + " e=" + std::to_string(b.e) + " f=" + std::to_string(b.f) +
           (b.p_maximal ? "" : " non-maximal");
}

}  // namespace

LawReport verify_point_law(const ClosedPoint& x, const FactoredRationalFunction& f, const FactoredRationalFunction& g,
                           const ArithConfig& config, symbols::BranchCache* cache) {
    LawReport report;
    report.law = Law::Point;
    report.arith = config;
    try {
        for (const auto& c : surface::curves_through_point(x, f, g)) {
            LawItem item;
            item.place = c.to_string();
            item.branch = x.to_string();
            item.value = symbols::curve_point_symbol(c, x, f, g, config, cache);
            report.exact_sum += item.value;
            report.items.push_back(std::move(item));
        }
    } catch (const Error& e) {
        if (is_scope_limit(e.kind())) return inconclusive(std::move(report), e);
        throw;
    }
    report.verdict = report.exact_sum == 0 ? Verdict::Pass : Verdict::Fail;
    if (report.verdict == Verdict::Fail) report.reason = "nonzero exact sum";
    return report;
}

std::vector<ClosedPoint> vertical_support(std::uint64_t p, const FactoredRationalFunction& f,
                                          const FactoredRationalFunction& g, std::uint64_t seed) {
    std::set<ClosedPoint> pts{ClosedPoint::at_infinity(p)};
    for (const auto* fn : {&f, &g}) {
        for (const auto& [b, e] : fn->factors()) {
            const ModPPoly bp = ModPPoly::from_int(b, p);
            if (bp.degree() < 1) continue;
            for (const auto& fac : arith::factor_mod_p(bp, seed).factors) pts.insert(ClosedPoint::affine(fac.poly));
        }
    }
    return {pts.begin(), pts.end()};
}

LawReport verify_vertical_law(std::uint64_t p, const FactoredRationalFunction& f, const FactoredRationalFunction& g,
                              const ArithConfig& config) {
    const Curve v = Curve::vertical(p);
    LawReport report;
    report.law = Law::Vertical;
    report.arith = config;
    for (const auto& x : vertical_support(p, f, g, config.seed)) {
        LawItem item;
        item.place = x.to_string();
        item.branch = v.to_string();
        item.value = static_cast<long>(x.degree()) * symbols::curve_point_symbol(v, x, f, g, config);
        report.exact_sum += item.value;
        report.items.push_back(std::move(item));
    }
    report.verdict = report.exact_sum == 0 ? Verdict::Pass : Verdict::Fail;
    if (report.verdict == Verdict::Fail) report.reason = "nonzero exact sum";
    return report;
}

std::vector<std::uint64_t> relevant_primes(const IntPoly& h, const FactoredRationalFunction& f,
                                           const FactoredRationalFunction& g, const ArithConfig& config) {
    std::vector<mpz_class> numbers{h.leading()};
    for (const auto* fn : {&f, &g}) {
        numbers.push_back(fn->unit().get_num());
        numbers.push_back(fn->unit().get_den());
        for (const auto& [b, e] : fn->factors())
            if (!(b == h)) numbers.push_back(arith::resultant(h, b));
    }
    std::set<std::uint64_t> primes;
    for (const auto& n : numbers) {
        if (n == 0) throw Error(ErrorKind::EvaluationAtZero, "base shares a root with " + h.to_string());
        for (const auto& [q, k] : arith::factor_integer(n, config.factor_budget).primes) {
            if (!q.fits_ulong_p()) throw Error(ErrorKind::UnsupportedFactorization, "prime above 64 bits: " + q.get_str());
            primes.insert(q.get_ui());
        }
    }
    return {primes.begin(), primes.end()};
}

LawReport verify_horizontal_law(const IntPoly& h_in, const FactoredRationalFunction& f,
                                const FactoredRationalFunction& g, const ArithConfig& arith,
                                const NumericConfig& numeric, symbols::BranchCache* cache) {
    LawReport report;
    report.law = Law::Horizontal;
    report.arith = arith;
    report.numeric = numeric;
    const IntPoly h = Curve::horizontal(h_in).h;
    const int bits = numeric.precision_bits;
    const long m_f = f.exponent(h), m_g = g.exponent(h);
    if (m_f == 0 && m_g == 0) {
        report.numeric_sum = num::BigFloat(bits);
        return report;
    }
    try {
        for (std::uint64_t p : relevant_primes(h, f, g, arith)) {
            std::vector<symbols::BranchData> local;
            const std::vector<symbols::BranchData>* brs = nullptr;
            if (cache) {
                brs = &cache->branches(h, p);
            } else {
                local = symbols::branch_decomposition(h, p, arith);
                brs = &local;
            }
            for (std::size_t i = 0; i < brs->size(); ++i) {
                const auto& br = (*brs)[i];
                long nu = 0;
                if (m_f != 0) nu += m_f * symbols::branch_order(br, g, arith);
                if (m_g != 0) nu -= m_g * symbols::branch_order(br, f, arith);
                LawItem item;
                item.place = br.center.to_string();
                item.branch = branch_label(br, i);
                item.value = static_cast<long>(br.f) * nu;
                item.log_base = p;
                if (item.value != 0) report.log_coefficients[p] += item.value;
                report.items.push_back(std::move(item));
            }
        }
        for (auto it = report.log_coefficients.begin(); it != report.log_coefficients.end();)
            it = it->second == 0 ? report.log_coefficients.erase(it) : std::next(it);

        num::BigFloat total(bits);
        for (const auto& [p, c] : report.log_coefficients)
            total += num::BigFloat(c, bits) * num::log(num::BigFloat(static_cast<long>(p), bits));

        const auto point = surface::embeddings(h, numeric);
        for (std::size_t s = 0; s < point.roots.size(); ++s) {
            const bool real = static_cast<int>(s) < point.real_count;
            // Conjugate pairs are listed with the positive imaginary part first.
            if (!real && point.roots[s].im.sign() < 0) continue;
            LawItem item;
            item.place = (real ? "real:" : "complex:") + std::to_string(s);
            item.branch = real ? "weight 1" : "weight 2";
            num::BigFloat v = symbols::archimedean_symbol(f, g, point, s);
            if (!real) v *= num::BigFloat(2L, bits);
            total += v;
            item.numeric = std::move(v);
            report.items.push_back(std::move(item));
        }
        report.numeric_sum = total;
    } catch (const Error& e) {
        if (is_scope_limit(e.kind())) return inconclusive(std::move(report), e);
        throw;
    }
    const bool ok = num::abs(*report.numeric_sum) <= num::BigFloat(numeric.tolerance, bits);
    report.verdict = ok ? Verdict::Pass : Verdict::Fail;
    if (!ok) report.reason = "numeric sum exceeds tolerance";
    return report;
}

}  // namespace arecip::laws
