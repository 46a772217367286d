#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace arecip::num {

// MPFR real with its own precision. Binary operations produce a result at
// the larger operand precision; nothing depends on MPFR's global default.
class BigFloat {
public:
    explicit BigFloat(int bits = 128);
    BigFloat(long v, int bits);
    BigFloat(double v, int bits);
    BigFloat(const mpz_class& v, int bits);
    BigFloat(const mpq_class& v, int bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
    BigFloat with_precision(int bits) const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);
    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    BigFloat operator-() const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    // Scientific notation with `digits` significant digits.
    std::string to_string(int digits = 20) const;

    const __mpfr_struct* get() const { return v_; }
    __mpfr_struct* get() { return v_; }

private:
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat pi(int bits);
BigFloat max(const BigFloat& a, const BigFloat& b);
// 2^e at the given precision.
BigFloat exp2i(long e, int bits);

struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(int bits = 128) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    int precision() const { return re.precision(); }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);
    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
};

BigFloat abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);

}  // namespace arecip::num
