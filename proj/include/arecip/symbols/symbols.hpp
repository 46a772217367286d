#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "arecip/config.hpp"
#include "arecip/exact_arith/padic.hpp"
#include "arecip/numeric/bigfloat.hpp"
#include "arecip/surface/embeddings.hpp"
#include "arecip/surface/function.hpp"
#include "arecip/surface/geometry.hpp"

namespace arecip::symbols {

using surface::ClosedPoint;
using surface::Curve;
using surface::FactoredRationalFunction;

// (order along the curve, order at the point on the curve)
struct RankTwoValuation {
    long nu1 = 0;
    long nu2 = 0;
    friend bool operator==(const RankTwoValuation& a, const RankTwoValuation& b) {
        return a.nu1 == b.nu1 && a.nu2 == b.nu2;
    }
};

long det2(const RankTwoValuation& vf, const RankTwoValuation& vg);

// Rank-two valuation of f along the fiber V(p) at a closed point x over p.
RankTwoValuation rank2_vertical(const FactoredRationalFunction& f, std::uint64_t p, const ClosedPoint& x);

// A branch of the horizontal curve H(h) above p, i.e. a place w of Q(theta)
// with h(theta) = 0. The p-adic factor describes theta' = lc(h) * theta,
// a root of the monic normalization lc^(d-1) h(y / lc).
struct BranchData {
    arith::IntPoly h;
    std::uint64_t p = 2;
    arith::PadicFactor factor;
    ClosedPoint center;
    int e = 1;           // ramification index
    int f = 1;           // residue degree over F_p
    int weight_rel = 1;  // residue degree over the residue field of center
    bool p_maximal = true;  // Dedekind criterion for the monic normalization
};

// Monic normalization lc^(d-1) h(y / lc) of h.
arith::IntPoly monic_normalization(const arith::IntPoly& h);

// All branches of H(h) above p, ordered by center then factor.
std::vector<BranchData> branch_decomposition(const arith::IntPoly& h, std::uint64_t p, const ArithConfig& config);

// Branches of H(h) centered at x.
std::vector<BranchData> branches_at(const arith::IntPoly& h, const ClosedPoint& x, const ArithConfig& config);

// ord_w(a(theta)) normalized so that ord_w(p) = e. Computed from
// v_p(Res(H_w, A)) / f with A the transform of a to the monic variable;
// raises precision until the resultant is nonzero mod p^N.
long valuation_via_resultant(const BranchData& branch, const arith::IntPoly& a, const ArithConfig& config);

// ord_w of f with every factor of h removed.
long branch_order(const BranchData& branch, const FactoredRationalFunction& f, const ArithConfig& config);

// Memoizes branch decompositions and base valuations for repeated queries.
class BranchCache {
public:
    explicit BranchCache(ArithConfig config = {}) : config_(config) {}
    const std::vector<BranchData>& branches(const arith::IntPoly& h, std::uint64_t p);
    long valuation(const arith::IntPoly& h, std::uint64_t p, std::size_t branch_index, const arith::IntPoly& a);
    const ArithConfig& config() const { return config_; }

private:
    ArithConfig config_;
    std::map<std::pair<std::string, std::uint64_t>, std::vector<BranchData>> branches_;
    std::map<std::tuple<std::string, std::uint64_t, std::size_t, std::string>, long> valuations_;
};

// Integer symbol nu_{C,x}(f, g) for a curve C through the closed point x.
// For horizontal curves this is the sum over branches centered at x of
// [k(w) : k(x)] * det2. Points at fiber infinity and the infinity section are
// handled in the chart t = 1/s.
long curve_point_symbol(const Curve& c, const ClosedPoint& x, const FactoredRationalFunction& f,
                        const FactoredRationalFunction& g, const ArithConfig& config, BranchCache* cache = nullptr);

// One contribution to curve_point_symbol: a branch of a horizontal curve
// (weight_rel * det2) or the single rank-two term of a vertical curve.
struct SymbolTerm {
    std::string label;
    long value = 0;
};

// Itemized form of curve_point_symbol; the values sum to the symbol.
std::vector<SymbolTerm> curve_point_symbol_terms(const Curve& c, const ClosedPoint& x,
                                                 const FactoredRationalFunction& f,
                                                 const FactoredRationalFunction& g, const ArithConfig& config);

// m_g log|f1(sigma theta)| - m_f log|g1(sigma theta)| at a complex embedding
// of H(h), where m is the order along H(h) and f1 = f / h^m_f.
num::BigFloat archimedean_symbol(const FactoredRationalFunction& f, const FactoredRationalFunction& g,
                                 const surface::AlgebraicPointData& point, std::size_t sigma);

}  // namespace arecip::symbols
