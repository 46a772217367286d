#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arecip::arith {

// Dense univariate polynomial over Z, coefficients stored low degree first.
// The zero polynomial has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly constant(const mpz_class& c);
    static IntPoly monomial(const mpz_class& c, int degree);
    // t - a
    static IntPoly linear_root(const mpz_class& a);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const mpz_class& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    mpz_class coeff(int i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const mpz_class& s);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    // Exact division of every coefficient; throws if not exact.
    IntPoly divexact(const mpz_class& s) const;
    IntPoly pow(unsigned e) const;
    IntPoly derivative() const;
    // t^deg * p(1/t)
    IntPoly reversed() const;
    // p(t + a)
    IntPoly shifted(const mpz_class& a) const;
    // p(s * t)
    IntPoly scaled(const mpz_class& s) const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Total order used for canonical output: by degree, then coefficients from
// the top down.
bool canonical_less(const IntPoly& a, const IntPoly& b);

// Parses e.g. "3t^2 - t + 5", "t*(3+t)" is not accepted here (no products).
IntPoly parse_int_poly(std::string_view text);

// content is a gcd of the coefficients carrying the sign of the leading
// coefficient, so that primitive has positive leading coefficient.
// The zero polynomial throws ZeroPolynomial.
std::pair<mpz_class, IntPoly> content_primitive(const IntPoly& f);

// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over roots alpha of a.
// Res(a, 0) = 0. Res(c, b) = c^deg(b) for a nonzero constant c.
mpz_class resultant(const IntPoly& a, const IntPoly& b);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Exact quotient a / b over Z; throws if b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Largest k with p^k | n; n must be nonzero.
int valuation(const mpz_class& n, const mpz_class& p);

}  // namespace arecip::arith
