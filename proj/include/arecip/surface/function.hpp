#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arecip/config.hpp"
#include "arecip/exact_arith/int_poly.hpp"

namespace arecip::surface {

using arith::IntPoly;

// Throws NonIrreducibleBase when h is visibly reducible over Q. Degree 1 and
// 2 are decided exactly, degree 3 by the rational root test; higher degrees
// are certified by factor degree patterns modulo small primes when possible,
// otherwise only rational roots are excluded.
void check_irreducible(const IntPoly& h);

// unit * prod base^exponent over Q(t), in canonical form: bases primitive,
// irreducible, positive leading coefficient, pairwise distinct, sorted, with
// nonzero exponents. The point at infinity of the t-line is the divisor of
// 1/t, so an INF factor with exponent k is stored as t^-k.
class FactoredRationalFunction {
public:
    FactoredRationalFunction() : unit_(1) {}
    explicit FactoredRationalFunction(mpq_class unit);
    // Normalizes arbitrary nonzero integer polynomial bases.
    FactoredRationalFunction(mpq_class unit, const std::vector<std::pair<IntPoly, int>>& factors);
    // Bases must already be canonical and irreducible; only merges equal
    // bases, drops zero exponents and sorts.
    static FactoredRationalFunction from_canonical(mpq_class unit, std::vector<std::pair<IntPoly, int>> factors);

    const mpq_class& unit() const { return unit_; }
    const std::vector<std::pair<IntPoly, int>>& factors() const { return factors_; }
    // Exponent of base b (0 when absent); b must be canonical.
    int exponent(const IntPoly& b) const;

    FactoredRationalFunction operator*(const FactoredRationalFunction& o) const;
    FactoredRationalFunction inverse() const;
    FactoredRationalFunction pow(int k) const;
    // f with every base equal to b removed.
    FactoredRationalFunction without(const IntPoly& b) const;

    mpq_class eval(const mpq_class& x) const;
    std::string to_string() const;

    friend bool operator==(const FactoredRationalFunction& a, const FactoredRationalFunction& b) {
        return a.unit_ == b.unit_ && a.factors_ == b.factors_;
    }

private:
    mpq_class unit_;
    std::vector<std::pair<IntPoly, int>> factors_;
};

// Grammar: <rational> ( '*' '(' <intpoly> | INF ')' '^' <int> )*
FactoredRationalFunction parse_function(std::string_view text);

// Valuation of the unit at p (the order along the fiber over p).
int vertical_order(const FactoredRationalFunction& f, std::uint64_t p);

// Pulls f back along t = 1/s (the other chart of the projective line).
FactoredRationalFunction chart_swap(const FactoredRationalFunction& f);

// Canonical form of a base polynomial: (content, primitive part with
// positive leading coefficient).
std::pair<mpz_class, IntPoly> normalize_base(const IntPoly& b);

}  // namespace arecip::surface
