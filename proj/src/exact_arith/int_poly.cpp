#include "arecip/exact_arith/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "arecip/error.hpp"

namespace arecip::arith {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
    std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_root(const mpz_class& a) {
    return IntPoly(std::vector<mpz_class>{-a, 1});
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

IntPoly IntPoly::divexact(const mpz_class& s) const {
    if (s == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    IntPoly r = *this;
    for (auto& c : r.c_) {
        if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
            throw Error(ErrorKind::InvalidArgument, "inexact coefficient division");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    }
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result = IntPoly::constant(1);
    IntPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reversed() const {
    std::vector<mpz_class> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted(const mpz_class& a) const {
    // Horner in the shifted variable.
    IntPoly result;
    const IntPoly lin(std::vector<mpz_class>{a, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        result *= lin;
        result += IntPoly::constant(*it);
    }
    return result;
}

IntPoly IntPoly::scaled(const mpz_class& s) const {
    IntPoly r = *this;
    mpz_class pw = 1;
    for (auto& c : r.c_) {
        c *= pw;
        pw *= s;
    }
    r.trim();
    return r;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + mpq_class(*it);
    r.canonicalize();
    return r;
}

std::string IntPoly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

namespace {

class PolyLexer {
public:
    explicit PolyLexer(std::string_view s) : s_(s) {}
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    mpz_class number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected digits");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }
    std::size_t pos() const { return pos_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_int_poly(std::string_view text) {
    PolyLexer lx(text);
    if (lx.eof()) throw ParseError(0, "empty polynomial");
    IntPoly result;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('+')) {
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError(lx.pos(), "expected '+' or '-'");
        }
        first = false;
        mpz_class coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coef = lx.number();
            have_coef = true;
            lx.accept('*');
        }
        int deg = 0;
        if (lx.accept('t')) {
            deg = 1;
            if (lx.accept('^')) {
                mpz_class e = lx.number();
                if (!e.fits_sint_p() || e > 100000) throw ParseError(lx.pos(), "exponent too large");
                deg = static_cast<int>(e.get_si());
            }
        } else if (!have_coef) {
            throw ParseError(lx.pos(), "expected term");
        }
        result += IntPoly::monomial(sign * coef, deg);
    }
    return result;
}

std::pair<mpz_class, IntPoly> content_primitive(const IntPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "content of zero polynomial");
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (f.leading() < 0) g = -g;
    return {g, f.divexact(g)};
}

int valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0) throw Error(ErrorKind::EvaluationAtZero, "valuation of zero");
    mpz_class m = n;
    int k = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++k;
    }
    return k;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "pseudo-division by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    for (int d = a.degree(); d >= db; --d) {
        mpz_class lead = r[static_cast<std::size_t>(d)];
        for (auto& c : r) c *= lb;
        if (lead != 0) {
            for (int i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(d - db + i)] -= lead * b[i];
        }
    }
    return IntPoly(std::move(r));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const mpz_class& lb = b.leading();
    for (int d = a.degree(); d >= b.degree(); --d) {
        mpz_class& top = r[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
        mpz_class qc = top / lb;
        q[static_cast<std::size_t>(d - b.degree())] = qc;
        for (int i = 0; i <= b.degree(); ++i) r[static_cast<std::size_t>(d - b.degree() + i)] -= qc * b[i];
    }
    for (const auto& c : r)
        if (c != 0) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
    try {
        divexact(a, b);
        return true;
    } catch (const Error&) {
        return false;
    }
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return content_primitive(b).second * abs(content_primitive(b).first);
    if (b.is_zero()) return content_primitive(a).second * abs(content_primitive(a).first);
    auto [ca, pa] = content_primitive(a);
    auto [cb, pb] = content_primitive(b);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly x = pa, y = pb;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = y;
        y = r.is_zero() ? r : content_primitive(r).second;
    }
    return content_primitive(x).second * c;
}

namespace {

mpz_class pow_z(const mpz_class& b, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

mpz_class resultant(const IntPoly& a_in, const IntPoly& b_in) {
    // Subresultant PRS (Collins), following the classic formulation with
    // contents factored out first.
    if (a_in.is_zero() || b_in.is_zero()) return 0;
    if (a_in.degree() == 0) return pow_z(a_in[0], b_in.degree());
    if (b_in.degree() == 0) return pow_z(b_in[0], a_in.degree());

    auto [ca, A] = content_primitive(a_in);
    auto [cb, B] = content_primitive(b_in);
    mpz_class t = pow_z(ca, B.degree()) * pow_z(cb, A.degree());
    mpz_class s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    }
    mpz_class g = 1, h = 1;
    while (true) {
        const long delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = pseudo_remainder(A, B);
        A = B;
        mpz_class denom = g * pow_z(h, delta);
        B = R.is_zero() ? R : R.divexact(denom);
        g = A.leading();
        // h <- g^delta / h^(delta-1)
        if (delta != 0) {
            mpz_class num = pow_z(g, delta);
            mpz_class den = pow_z(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.degree() <= 0) break;
    }
    if (B.is_zero()) return 0;
    const long dA = A.degree();
    // h <- lc(B)^dA / h^(dA-1)
    mpz_class num = pow_z(B.leading(), dA);
    mpz_class res;
    if (dA >= 1) {
        mpz_class den = pow_z(h, dA - 1);
        mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        res = num * h;
    }
    return s * t * res;
}

}  // namespace arecip::arith
