#include "arecip/centext/laurent.hpp"

#include <cctype>

#include "arecip/error.hpp"

namespace arecip::centext {

LaurentPoly LaurentPoly::constant(const mpq_class& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const mpq_class& c, int k) {
    LaurentPoly f;
    f.set(k, c);
    return f;
}

void LaurentPoly::set(int k, const mpq_class& c) {
    if (c == 0)
        terms_.erase(k);
    else
        terms_[k] = c;
}

int LaurentPoly::order() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "order of the zero Laurent polynomial");
    return terms_.begin()->first;
}

const mpq_class& LaurentPoly::leading_low() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero Laurent polynomial");
    return terms_.begin()->second;
}

int LaurentPoly::top() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero Laurent polynomial");
    return terms_.rbegin()->first;
}

mpq_class LaurentPoly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [k, c] : b.terms_) r.set(k, r.coeff(k) + c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [k, c] : b.terms_) r.set(k, r.coeff(k) - c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<int, mpq_class> acc;
    for (const auto& [i, x] : a.terms_)
        for (const auto& [j, y] : b.terms_) acc[i + j] += x * y;
    LaurentPoly r;
    for (const auto& [k, c] : acc) r.set(k, c);
    return r;
}

LaurentPoly LaurentPoly::truncated(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
        if (e <= k) r.terms_.emplace(e, c);
    return r;
}

LaurentPoly LaurentPoly::series_inverse(int k) const {
    const int nu = order();
    const mpq_class c0 = leading_low();
    // f = c0 t^nu (1 + u) with u of positive order; invert the unit part.
    LaurentPoly unit;
    for (const auto& [e, c] : terms_) unit.set(e - nu, c / c0);
    const int need = k + nu;  // exponents of the unit inverse up to `need`
    std::map<int, mpq_class> inv;
    if (need >= 0) inv[0] = 1;
    for (int n = 1; n <= need; ++n) {
        mpq_class s = 0;
        for (const auto& [e, c] : unit.terms_) {
            if (e == 0 || e > n) continue;
            auto it = inv.find(n - e);
            if (it != inv.end()) s -= c * it->second;
        }
        inv[n] = s;
    }
    LaurentPoly r;
    for (const auto& [e, c] : inv) r.set(e - nu, c / c0);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int k = it->first;
        mpq_class c = it->second;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        const bool unit = c == 1;
        if (!unit || k == 0) out += c.get_str();
        if (k != 0) {
            if (!unit) out += "*";
            out += "t";
            if (k != 1) out += "^" + std::to_string(k);
        }
        first = false;
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    LaurentPoly parse() {
        LaurentPoly f = expr();
        skip();
        if (i_ != s_.size()) throw ParseError(i_, "unexpected character");
        return f;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    LaurentPoly expr() {
        LaurentPoly f = term();
        while (true) {
            if (eat('+'))
                f = f + term();
            else if (eat('-'))
                f = f - term();
            else
                return f;
        }
    }

    LaurentPoly term() {
        LaurentPoly f = unary();
        while (eat('*')) f = f * unary();
        return f;
    }

    LaurentPoly unary() {
        if (eat('-')) return LaurentPoly::constant(-1) * unary();
        if (eat('+')) return unary();
        return primary();
    }

    LaurentPoly primary() {
        skip();
        if (i_ >= s_.size()) throw ParseError(i_, "unexpected end of input");
        if (eat('(')) {
            LaurentPoly f = expr();
            if (!eat(')')) throw ParseError(i_, "expected ')'");
            return f;
        }
        if (s_[i_] == 't') {
            ++i_;
            int k = 1;
            if (eat('^')) k = integer();
            return LaurentPoly::monomial(1, k);
        }
        return LaurentPoly::constant(number());
    }

    int integer() {
        skip();
        const std::size_t start = i_;
        bool neg = false;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
        const std::size_t digits = i_;
        long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_++] - '0');
            if (v > 1'000'000) throw ParseError(start, "exponent too large");
        }
        if (i_ == digits) throw ParseError(start, "expected integer exponent");
        return static_cast<int>(neg ? -v : v);
    }

    mpq_class number() {
        const std::size_t start = i_;
        std::string whole, frac;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) whole += s_[i_++];
        if (i_ < s_.size() && s_[i_] == '.') {
            ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) frac += s_[i_++];
        }
        if (whole.empty() && frac.empty()) throw ParseError(start, "expected number or t");
        mpz_class num(whole.empty() ? "0" : whole);
        mpz_class den = 1;
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        mpq_class q(num, den);
        q.canonicalize();
        if (eat('/')) {
            skip();
            const std::size_t ds = i_;
            std::string d;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) d += s_[i_++];
            if (d.empty()) throw ParseError(ds, "expected denominator");
            mpz_class dz(d);
            if (dz == 0) throw ParseError(ds, "zero denominator");
            q /= dz;
        }
        q.canonicalize();
        return q;
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return Parser(text).parse(); }

}  // namespace arecip::centext
