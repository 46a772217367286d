#include "arecip/surface/function.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "arecip/error.hpp"
#include "arecip/exact_arith/integer.hpp"
#include "arecip/exact_arith/mod_poly.hpp"

namespace arecip::surface {

using arith::content_primitive;

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [q, e] : arith::factor_integer(n).primes) {
        const std::size_t base = out.size();
        mpz_class pw = 1;
        for (int k = 1; k <= e; ++k) {
            pw *= q;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
        }
    }
    return out;
}

bool has_rational_root(const IntPoly& h) {
    if (h[0] == 0) return true;
    const auto num = divisors(abs(h[0]));
    const auto den = divisors(abs(h.leading()));
    if (num.size() * den.size() > 200000) return false;
    for (const auto& d : num)
        for (const auto& l : den)
            for (int s : {1, -1}) {
                mpq_class x(s * d, l);
                x.canonicalize();
                if (h.eval(x) == 0) return true;
            }
    return false;
}

// Degrees that some factor over Q could have, as seen modulo p: subset sums
// of the degrees of the irreducible factors of h mod p.
std::set<int> factor_degree_sums(const arith::ModFactorization& fac) {
    std::set<int> sums{0};
    for (const auto& f : fac.factors)
        for (int k = 0; k < f.multiplicity; ++k) {
            std::set<int> next = sums;
            for (int s : sums) next.insert(s + f.poly.degree());
            sums = std::move(next);
        }
    return sums;
}

}  // namespace

void check_irreducible(const IntPoly& h) {
    const int n = h.degree();
    if (n <= 0) throw Error(ErrorKind::NonIrreducibleBase, "base of degree <= 0: " + h.to_string());
    auto [c, prim] = content_primitive(h);
    if (n == 1) return;
    if (n == 2) {
        mpz_class disc = prim[1] * prim[1] - 4 * prim[0] * prim[2];
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t()))
            throw Error(ErrorKind::NonIrreducibleBase, "reducible quadratic base: " + h.to_string());
        return;
    }
    if (has_rational_root(prim)) throw Error(ErrorKind::NonIrreducibleBase, "base has a rational root: " + h.to_string());
    if (n == 3) return;
    std::set<int> possible;
    for (int k = 1; k < n; ++k) possible.insert(k);
    static const std::uint64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
    for (std::uint64_t p : kPrimes) {
        const arith::ModPPoly hp = arith::ModPPoly::from_int(prim, p);
        if (hp.degree() != n) continue;
        if (arith::gcd(hp, hp.derivative()).degree() > 0) continue;
        const auto sums = factor_degree_sums(arith::factor_mod_p(hp, p));
        std::set<int> keep;
        for (int k : possible)
            if (sums.count(k)) keep.insert(k);
        possible = std::move(keep);
        if (possible.empty()) return;
    }
    // Not certified; rational roots are excluded and the base is accepted.
}

std::pair<mpz_class, IntPoly> normalize_base(const IntPoly& b) { return content_primitive(b); }

FactoredRationalFunction::FactoredRationalFunction(mpq_class unit) : unit_(std::move(unit)) {
    if (unit_ == 0) throw Error(ErrorKind::ZeroPolynomial, "zero unit");
}

FactoredRationalFunction::FactoredRationalFunction(mpq_class unit,
                                                   const std::vector<std::pair<IntPoly, int>>& factors)
    : unit_(std::move(unit)) {
    if (unit_ == 0) throw Error(ErrorKind::ZeroPolynomial, "zero unit");
    std::vector<std::pair<IntPoly, int>> canon;
    for (const auto& [b, e] : factors) {
        if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero base");
        auto [c, prim] = content_primitive(b);
        mpq_class cq(c);
        if (e >= 0) {
            for (int i = 0; i < e; ++i) unit_ *= cq;
        } else {
            for (int i = 0; i < -e; ++i) unit_ /= cq;
        }
        if (prim.degree() == 0) continue;
        check_irreducible(prim);
        canon.emplace_back(std::move(prim), e);
    }
    *this = from_canonical(unit_, std::move(canon));
}

FactoredRationalFunction FactoredRationalFunction::from_canonical(mpq_class unit,
                                                                  std::vector<std::pair<IntPoly, int>> factors) {
    FactoredRationalFunction out(std::move(unit));
    out.unit_.canonicalize();
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return arith::canonical_less(a.first, b.first); });
    for (auto& [b, e] : factors) {
        if (!out.factors_.empty() && out.factors_.back().first == b)
            out.factors_.back().second += e;
        else
            out.factors_.emplace_back(std::move(b), e);
    }
    out.factors_.erase(std::remove_if(out.factors_.begin(), out.factors_.end(),
                                      [](const auto& f) { return f.second == 0; }),
                       out.factors_.end());
    return out;
}

int FactoredRationalFunction::exponent(const IntPoly& b) const {
    for (const auto& [base, e] : factors_)
        if (base == b) return e;
    return 0;
}

FactoredRationalFunction FactoredRationalFunction::operator*(const FactoredRationalFunction& o) const {
    auto all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return from_canonical(unit_ * o.unit_, std::move(all));
}

FactoredRationalFunction FactoredRationalFunction::inverse() const { return pow(-1); }

FactoredRationalFunction FactoredRationalFunction::pow(int k) const {
    mpq_class u = 1;
    for (int i = 0; i < std::abs(k); ++i) u *= unit_;
    if (k < 0) u = 1 / u;
    auto fs = factors_;
    for (auto& f : fs) f.second *= k;
    return from_canonical(u, std::move(fs));
}

FactoredRationalFunction FactoredRationalFunction::without(const IntPoly& b) const {
    auto fs = factors_;
    fs.erase(std::remove_if(fs.begin(), fs.end(), [&](const auto& f) { return f.first == b; }), fs.end());
    return from_canonical(unit_, std::move(fs));
}

mpq_class FactoredRationalFunction::eval(const mpq_class& x) const {
    mpq_class r = unit_;
    for (const auto& [b, e] : factors_) {
        mpq_class v = b.eval(x);
        if (v == 0) throw Error(ErrorKind::EvaluationAtZero, "base vanishes at evaluation point");
        for (int i = 0; i < std::abs(e); ++i) r = e > 0 ? mpq_class(r * v) : mpq_class(r / v);
    }
    return r;
}

std::string FactoredRationalFunction::to_string() const {
    std::ostringstream os;
    os << unit_.get_str();
    for (const auto& [b, e] : factors_) os << " * (" << b.to_string() << ")^" << e;
    return os.str();
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip();
        return pos_ >= s_.size();
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (digits == pos_) throw ParseError(pos_, "expected integer");
        std::string text(s_.substr(start, pos_ - start));
        if (text[0] == '+') text.erase(0, 1);
        return mpz_class(text);
    }
    std::size_t pos() const { return pos_; }
    std::string_view until(char c) {
        const std::size_t start = pos_;
        const std::size_t end = s_.find(c, pos_);
        if (end == std::string_view::npos) throw ParseError(s_.size(), std::string("missing '") + c + "'");
        pos_ = end;
        return s_.substr(start, end - start);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

FactoredRationalFunction parse_function(std::string_view text) {
    Cursor cur(text);
    mpz_class num = cur.integer();
    mpz_class den = 1;
    if (cur.accept('/')) {
        den = cur.integer();
        if (den == 0) throw ParseError(cur.pos(), "zero denominator");
    }
    if (num == 0) throw Error(ErrorKind::ZeroPolynomial, "zero function");
    mpq_class unit(num, den);
    unit.canonicalize();
    std::vector<std::pair<IntPoly, int>> factors;
    while (!cur.eof()) {
        cur.expect('*');
        cur.expect('(');
        cur.skip();
        const std::size_t body_start = cur.pos();
        std::string_view body = cur.until(')');
        cur.expect(')');
        cur.expect('^');
        const std::size_t exp_pos = cur.pos();
        mpz_class e = cur.integer();
        if (!e.fits_sint_p() || abs(e) > 10000) throw ParseError(exp_pos, "exponent out of range");
        std::string trimmed(body);
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
        if (trimmed == "INF") {
            factors.emplace_back(IntPoly{0, 1}, -static_cast<int>(e.get_si()));
            continue;
        }
        IntPoly b;
        try {
            b = arith::parse_int_poly(trimmed);
        } catch (const ParseError& err) {
            throw ParseError(body_start + err.position(), "bad polynomial");
        }
        if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero base");
        factors.emplace_back(std::move(b), static_cast<int>(e.get_si()));
    }
    return FactoredRationalFunction(unit, factors);
}

int vertical_order(const FactoredRationalFunction& f, std::uint64_t p) {
    const mpz_class pz = arith::to_mpz(p);
    return arith::valuation(f.unit().get_num(), pz) - arith::valuation(f.unit().get_den(), pz);
}

FactoredRationalFunction chart_swap(const FactoredRationalFunction& f) {
    // b(1/s) = s^-deg(b) rev(b)(s); rev(b) stays primitive and irreducible
    // (b is not t itself) up to the sign of b(0).
    mpq_class unit = f.unit();
    int s_exp = 0;
    std::vector<std::pair<IntPoly, int>> out;
    for (const auto& [b, e] : f.factors()) {
        s_exp -= e * b.degree();
        IntPoly r = b.reversed();
        if (r.degree() == 0) {
            // b = t: rev(b) is the constant 1.
            continue;
        }
        if (r.leading() < 0) {
            r = -r;
            if (e % 2) unit = -unit;
        }
        out.emplace_back(std::move(r), e);
    }
    if (s_exp != 0) out.emplace_back(IntPoly{0, 1}, s_exp);
    return FactoredRationalFunction::from_canonical(unit, std::move(out));
}

}  // namespace arecip::surface
