#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arecip/exact_arith/int_poly.hpp"

namespace arecip::arith {

using u64 = std::uint64_t;

// Arithmetic in Z/p for a prime p < 2^63.
inline u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
u64 reduce(const mpz_class& a, u64 p);

// Polynomial over F_p, coefficients in [0, p) stored low degree first.
class ModPPoly {
public:
    ModPPoly() = default;
    ModPPoly(u64 p, std::vector<u64> coeffs);
    static ModPPoly from_int(const IntPoly& f, u64 p);
    static ModPPoly constant(u64 p, u64 c);
    // t - a
    static ModPPoly linear_root(u64 p, u64 a);
    static ModPPoly x(u64 p);

    u64 prime() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    u64 operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    u64 coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : 0; }
    u64 leading() const;
    const std::vector<u64>& coeffs() const { return c_; }

    ModPPoly& operator+=(const ModPPoly& o);
    ModPPoly& operator-=(const ModPPoly& o);
    ModPPoly& operator*=(const ModPPoly& o);
    ModPPoly scaled(u64 s) const;
    friend ModPPoly operator+(ModPPoly a, const ModPPoly& b) { return a += b; }
    friend ModPPoly operator-(ModPPoly a, const ModPPoly& b) { return a -= b; }
    friend ModPPoly operator*(ModPPoly a, const ModPPoly& b) { return a *= b; }
    friend bool operator==(const ModPPoly& a, const ModPPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ModPPoly& a, const ModPPoly& b) { return !(a == b); }

    ModPPoly monic() const;
    ModPPoly derivative() const;
    u64 eval(u64 x) const;
    // Integer lift with coefficients in [0, p).
    IntPoly lift() const;
    std::string to_string(char var = 't') const;

private:
    void trim();
    u64 p_ = 2;
    std::vector<u64> c_;
};

std::pair<ModPPoly, ModPPoly> divmod(const ModPPoly& a, const ModPPoly& b);
ModPPoly rem(const ModPPoly& a, const ModPPoly& b);
// Monic gcd; gcd(0, 0) = 0.
ModPPoly gcd(const ModPPoly& a, const ModPPoly& b);
// Returns (g, s, t) with s a + t b = g, g monic.
struct ExtGcd {
    ModPPoly g, s, t;
};
ExtGcd ext_gcd(const ModPPoly& a, const ModPPoly& b);
ModPPoly powmod(const ModPPoly& base, const mpz_class& e, const ModPPoly& modulus);
ModPPoly pow(const ModPPoly& base, unsigned e);

// Multiplicity of the monic irreducible pi in a (a nonzero).
int order_at(const ModPPoly& a, const ModPPoly& pi);

bool is_irreducible(const ModPPoly& f);

struct ModFactor {
    ModPPoly poly;  // monic irreducible
    int multiplicity;
};

// Complete factorization of q: q = unit * prod poly^multiplicity, factors
// sorted canonically. The unit is the leading coefficient of q.
struct ModFactorization {
    u64 unit;
    std::vector<ModFactor> factors;
};

ModFactorization factor_mod_p(const ModPPoly& q, std::uint64_t seed);

bool canonical_less(const ModPPoly& a, const ModPPoly& b);

}  // namespace arecip::arith
