#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arecip/config.hpp"
#include "arecip/numeric/bigfloat.hpp"
#include "arecip/surface/function.hpp"
#include "arecip/surface/geometry.hpp"
#include "arecip/symbols/symbols.hpp"

namespace arecip::laws {

using surface::ClosedPoint;
using surface::Curve;
using surface::FactoredRationalFunction;

enum class Law { Point, Vertical, Horizontal };
enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Law law);
const char* to_string(Verdict verdict);

// One term of a reciprocity sum. Finite terms carry an integer `value`; when
// log_base is set the term contributes value * log(log_base). Archimedean
// terms carry `numeric` instead.
struct LawItem {
    std::string place;
    std::string branch;
    long value = 0;
    std::optional<std::uint64_t> log_base;
    std::optional<num::BigFloat> numeric;
};

struct LawReport {
    Law law = Law::Point;
    std::vector<LawItem> items;
    long exact_sum = 0;                          // laws 1 and 2
    std::map<std::uint64_t, long> log_coefficients;  // law 3: sum of c_p log p
    std::optional<num::BigFloat> numeric_sum;    // law 3
    Verdict verdict = Verdict::Pass;
    std::string reason;
    ArithConfig arith;
    NumericConfig numeric;
};

// Sum of curve_point_symbol over the curves through x. Exact.
LawReport verify_point_law(const ClosedPoint& x, const FactoredRationalFunction& f, const FactoredRationalFunction& g,
                           const ArithConfig& config = {}, symbols::BranchCache* cache = nullptr);

// Closed points of V(p) where f or g can carry a nonzero symbol: the reduced
// factors of every base, plus fiber infinity.
std::vector<ClosedPoint> vertical_support(std::uint64_t p, const FactoredRationalFunction& f,
                                          const FactoredRationalFunction& g, std::uint64_t seed = 0x5eed);

// Sum of deg(x) * nu_{V,x}(f, g) over vertical_support. Exact.
LawReport verify_vertical_law(std::uint64_t p, const FactoredRationalFunction& f, const FactoredRationalFunction& g,
                              const ArithConfig& config = {});

// Primes at which a branch of H(h) can carry a nonzero symbol for (f, g).
std::vector<std::uint64_t> relevant_primes(const arith::IntPoly& h, const FactoredRationalFunction& f,
                                           const FactoredRationalFunction& g, const ArithConfig& config);

// Finite part as an exact combination of log p plus archimedean part at the
// requested precision; pass iff the total is within tolerance.
LawReport verify_horizontal_law(const arith::IntPoly& h, const FactoredRationalFunction& f,
                                const FactoredRationalFunction& g, const ArithConfig& arith = {},
                                const NumericConfig& numeric = {}, symbols::BranchCache* cache = nullptr);

}  // namespace arecip::laws
