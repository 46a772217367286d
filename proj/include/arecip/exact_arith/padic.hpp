#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "arecip/config.hpp"
#include "arecip/exact_arith/int_poly.hpp"
#include "arecip/exact_arith/mod_poly.hpp"

namespace arecip::arith {

mpz_class prime_power(std::uint64_t p, int n);

// Polynomial with coefficients known modulo p^precision, stored as integers
// in [0, p^precision).
class PadicPoly {
public:
    PadicPoly() = default;
    PadicPoly(std::uint64_t p, int precision, const IntPoly& f);

    std::uint64_t prime() const { return p_; }
    int precision() const { return precision_; }
    mpz_class modulus() const { return prime_power(p_, precision_); }
    const IntPoly& poly() const { return f_; }
    int degree() const { return f_.degree(); }
    // Same polynomial known to fewer digits.
    PadicPoly truncated(int precision) const;
    ModPPoly residue() const { return ModPPoly::from_int(f_, p_); }

private:
    std::uint64_t p_ = 2;
    int precision_ = 0;
    IntPoly f_;
};

// One irreducible factor over Q_p: degree = e * f.
struct PadicFactor {
    PadicPoly poly;       // monic
    int e = 1;            // ramification index
    int f = 1;            // residue degree
    ModPPoly residue;     // irreducible factor of h mod p under this factor
};

struct PadicFactorization {
    IntPoly input;
    std::uint64_t p = 2;
    int precision = 0;  // every factor is known at least to this precision
    std::vector<PadicFactor> factors;
};

// Reduces coefficients into [0, m).
IntPoly reduce_mod(const IntPoly& f, const mpz_class& m);

// Lifts f = g0 * h0 (mod p), with g0, h0 monic and coprime mod p and f monic,
// to f = g * h (mod p^n). Returns {g, h}.
std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const ModPPoly& g0, const ModPPoly& h0, int n);

// Factorization of a monic squarefree h over Q_p at fixed precision n.
// Throws InsufficientPrecision when n digits cannot separate or classify the
// factors, UnsupportedFactorization when a cluster falls outside the handled
// shapes (square-free residue, quadratic clusters, Eisenstein-type clusters
// over a linear residue).
PadicFactorization padic_factor(const IntPoly& h, std::uint64_t p, int n, std::uint64_t seed);

// Same, walking the precision ladder config.padic_start, doubling up to
// config.padic_cap.
PadicFactorization padic_factor(const IntPoly& h, std::uint64_t p, const ArithConfig& config);

// Dedekind criterion: is Z[t]/(h) maximal at p? h monic.
bool dedekind_p_maximal(const IntPoly& h, std::uint64_t p);

}  // namespace arecip::arith
