#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace arecip::centext {

// Finite Laurent polynomial sum c_k t^k over Q. Decimal coefficients in the
// input are read exactly.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(const mpq_class& c);
    static LaurentPoly monomial(const mpq_class& c, int k);

    bool is_zero() const { return terms_.empty(); }
    // Lowest exponent (the t-adic order); f must be nonzero.
    int order() const;
    // Coefficient at the lowest exponent.
    const mpq_class& leading_low() const;
    int top() const;
    mpq_class coeff(int k) const;
    const std::map<int, mpq_class>& terms() const { return terms_; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    // Terms of exponent <= k.
    LaurentPoly truncated(int k) const;
    // 1/f as a Laurent series, exact through exponent k.
    LaurentPoly series_inverse(int k) const;

    std::string to_string() const;

private:
    void set(int k, const mpq_class& c);
    std::map<int, mpq_class> terms_;
};

// Grammar: sums and products of rational numbers, t, t^k (k may be negative)
// and parenthesized subexpressions, e.g. "t*(3+t)", "5*t^2", "0.5 - t^-1".
LaurentPoly parse_laurent(std::string_view text);

}  // namespace arecip::centext
