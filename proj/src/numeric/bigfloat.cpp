#include "arecip/numeric/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace arecip::num {

namespace {
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
    return static_cast<mpfr_prec_t>(std::max(a.precision(), b.precision()));
}
}  // namespace

BigFloat::BigFloat(int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, kRnd);
}

BigFloat::BigFloat(double v, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, v, kRnd);
}

BigFloat::BigFloat(const mpz_class& v, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, v.get_mpz_t(), kRnd);
}

BigFloat::BigFloat(const mpq_class& v, int bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, v.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, kRnd);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(int bits) const {
    BigFloat r(bits);
    mpfr_set(r.v_, v_, kRnd);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, wider(*this, o), kRnd);
    mpfr_add(v_, v_, o.v_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, wider(*this, o), kRnd);
    mpfr_sub(v_, v_, o.v_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, wider(*this, o), kRnd);
    mpfr_mul(v_, v_, o.v_, kRnd);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.precision() > precision()) mpfr_prec_round(v_, wider(*this, o), kRnd);
    mpfr_div(v_, v_, o.v_, kRnd);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, kRnd);
    return r;
}

std::string BigFloat::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    if (is_zero()) {
        // No signed zeros in rendered output.
        BigFloat z(precision());
        mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, z.v_);
        return buf.data();
    }
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return buf.data();
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x);
    mpfr_abs(r.get(), r.get(), kRnd);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), kRnd);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log(r.get(), x.get(), kRnd);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(std::max(x.precision(), y.precision()));
    mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_cos(r.get(), x.get(), kRnd);
    return r;
}

BigFloat sin(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sin(r.get(), x.get(), kRnd);
    return r;
}

BigFloat pi(int bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.get(), kRnd);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat exp2i(long e, int bits) {
    BigFloat r(1L, bits);
    mpfr_mul_2si(r.get(), r.get(), e, kRnd);
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    BigFloat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigFloat d = o.re * o.re + o.im * o.im;
    BigFloat r = (re * o.re + im * o.im) / d;
    BigFloat i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

}  // namespace arecip::num
