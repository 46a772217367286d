#include "arecip/exact_arith/mod_poly.hpp"

#include <algorithm>
#include <sstream>

#include "arecip/error.hpp"

namespace arecip::arith {

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1u) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1u;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero mod p");
    // Extended Euclid on signed 128-bit values.
    __int128 r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw Error(ErrorKind::InvalidArgument, "non-invertible residue");
    __int128 m = s0 % static_cast<__int128>(p);
    if (m < 0) m += p;
    return static_cast<u64>(m);
}

u64 reduce(const mpz_class& a, u64 p) {
    mpz_class pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
}

ModPPoly::ModPPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p_;
    trim();
}

ModPPoly ModPPoly::from_int(const IntPoly& f, u64 p) {
    std::vector<u64> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(reduce(a, p));
    return ModPPoly(p, std::move(c));
}

ModPPoly ModPPoly::constant(u64 p, u64 c) { return ModPPoly(p, {c}); }
ModPPoly ModPPoly::linear_root(u64 p, u64 a) { return ModPPoly(p, {submod(0, a % p, p), 1}); }
ModPPoly ModPPoly::x(u64 p) { return ModPPoly(p, {0, 1}); }

void ModPPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 ModPPoly::leading() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

ModPPoly& ModPPoly::operator+=(const ModPPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = addmod(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPPoly& ModPPoly::operator-=(const ModPPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = submod(c_[i], o.c_[i], p_);
    trim();
    return *this;
}

ModPPoly& ModPPoly::operator*=(const ModPPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(c_[i], o.c_[j], p_), p_);
    }
    c_ = std::move(r);
    trim();
    return *this;
}

ModPPoly ModPPoly::scaled(u64 s) const {
    ModPPoly r = *this;
    for (auto& c : r.c_) c = mulmod(c, s % p_, p_);
    r.trim();
    return r;
}

ModPPoly ModPPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(invmod(leading(), p_));
}

ModPPoly ModPPoly::derivative() const {
    if (c_.size() <= 1) return ModPPoly(p_, {});
    std::vector<u64> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
    return ModPPoly(p_, std::move(r));
}

u64 ModPPoly::eval(u64 x) const {
    u64 r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = addmod(mulmod(r, x, p_), *it, p_);
    return r;
}

IntPoly ModPPoly::lift() const {
    std::vector<mpz_class> c;
    c.reserve(c_.size());
    for (u64 a : c_) {
        mpz_class z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &a);
        c.push_back(z);
    }
    return IntPoly(std::move(c));
}

std::string ModPPoly::to_string(char var) const { return lift().to_string(var); }

std::pair<ModPPoly, ModPPoly> divmod(const ModPPoly& a, const ModPPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    const u64 p = a.prime();
    if (a.degree() < b.degree()) return {ModPPoly(p, {}), a};
    std::vector<u64> r = a.coeffs();
    std::vector<u64> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const u64 inv = invmod(b.leading(), p);
    const int db = b.degree();
    for (int d = a.degree(); d >= db; --d) {
        u64 top = r[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        u64 qc = mulmod(top, inv, p);
        q[static_cast<std::size_t>(d - db)] = qc;
        for (int i = 0; i <= db; ++i) {
            auto& slot = r[static_cast<std::size_t>(d - db + i)];
            slot = submod(slot, mulmod(qc, b[i], p), p);
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {ModPPoly(p, std::move(q)), ModPPoly(p, std::move(r))};
}

ModPPoly rem(const ModPPoly& a, const ModPPoly& b) { return divmod(a, b).second; }

ModPPoly gcd(const ModPPoly& a, const ModPPoly& b) {
    ModPPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const ModPPoly& a, const ModPPoly& b) {
    const u64 p = a.prime();
    ModPPoly r0 = a, r1 = b;
    ModPPoly s0 = ModPPoly::constant(p, 1), s1(p, {});
    ModPPoly t0(p, {}), t1 = ModPPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        ModPPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    u64 inv = invmod(r0.leading(), p);
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

ModPPoly powmod(const ModPPoly& base, const mpz_class& e, const ModPPoly& modulus) {
    const u64 p = base.prime();
    ModPPoly result = rem(ModPPoly::constant(p, 1), modulus);
    ModPPoly b = rem(base, modulus);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(result * result, modulus);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, modulus);
    }
    return result;
}

ModPPoly pow(const ModPPoly& base, unsigned e) {
    ModPPoly r = ModPPoly::constant(base.prime(), 1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

int order_at(const ModPPoly& a, const ModPPoly& pi) {
    if (a.is_zero()) throw Error(ErrorKind::EvaluationAtZero, "order of zero polynomial");
    int k = 0;
    ModPPoly x = a;
    while (true) {
        auto [q, r] = divmod(x, pi);
        if (!r.is_zero()) return k;
        x = std::move(q);
        ++k;
    }
}

namespace {

mpz_class to_mpz(u64 v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
    return z;
}

// x^(p^k) mod f for consecutive k, via repeated p-th powering.
ModPPoly frobenius(const ModPPoly& g, const ModPPoly& f) {
    return powmod(g, to_mpz(f.prime()), f);
}

// Square-free decomposition of a monic f: list of (squarefree, multiplicity).
std::vector<std::pair<ModPPoly, int>> squarefree(const ModPPoly& f) {
    const u64 p = f.prime();
    std::vector<std::pair<ModPPoly, int>> out;
    if (f.degree() <= 0) return out;
    ModPPoly c = gcd(f, f.derivative());
    ModPPoly w = divmod(f, c).first;
    int i = 1;
    while (!w.is_one()) {
        ModPPoly y = gcd(w, c);
        ModPPoly fac = divmod(w, y).first;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        ++i;
        w = y;
        c = divmod(c, y).first;
    }
    if (!c.is_one()) {
        // c is a p-th power: take the p-th root coefficientwise.
        std::vector<u64> root;
        for (u64 k = 0; k * p <= static_cast<u64>(c.degree()); ++k)
            root.push_back(c.coeff(static_cast<int>(k * p)));
        ModPPoly r(p, std::move(root));
        for (auto& [g, m] : squarefree(r.monic())) out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

// Distinct-degree factorization of a monic squarefree f.
std::vector<std::pair<ModPPoly, int>> distinct_degree(const ModPPoly& f_in) {
    const u64 p = f_in.prime();
    std::vector<std::pair<ModPPoly, int>> out;
    ModPPoly f = f_in;
    ModPPoly h = ModPPoly::x(p);
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = frobenius(h, f);
        ModPPoly g = gcd(h - ModPPoly::x(p), f);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            f = divmod(f, g).first;
            h = rem(h, f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

ModPPoly random_poly(u64 p, int deg_below, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> dist(0, p - 1);
    std::vector<u64> c(static_cast<std::size_t>(deg_below));
    for (auto& x : c) x = dist(rng);
    return ModPPoly(p, std::move(c));
}

// Equal-degree splitting (Cantor-Zassenhaus) of f, a product of distinct
// monic irreducibles each of degree d.
void equal_degree(const ModPPoly& f, int d, std::mt19937_64& rng, std::vector<ModPPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const u64 p = f.prime();
    const int n = f.degree();
    while (true) {
        ModPPoly a = random_poly(p, n, rng);
        if (a.degree() <= 0) continue;
        ModPPoly b;
        if (p == 2) {
            // Trace map to F_2: a + a^2 + ... + a^(2^(d-1)).
            ModPPoly term = rem(a, f);
            b = term;
            for (int i = 1; i < d; ++i) {
                term = rem(term * term, f);
                b += term;
            }
        } else {
            mpz_class q;
            mpz_pow_ui(q.get_mpz_t(), to_mpz(p).get_mpz_t(), static_cast<unsigned long>(d));
            mpz_class e = (q - 1) / 2;
            b = powmod(a, e, f) - ModPPoly::constant(p, 1);
        }
        ModPPoly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(g, d, rng, out);
            equal_degree(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

bool canonical_less(const ModPPoly& a, const ModPPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool is_irreducible(const ModPPoly& f_in) {
    if (f_in.degree() <= 0) return false;
    ModPPoly f = f_in.monic();
    const int n = f.degree();
    if (n == 1) return true;
    // Rabin: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for prime q | n.
    std::vector<ModPPoly> frob;  // frob[k] = x^(p^k) mod f
    frob.push_back(ModPPoly::x(f.prime()));
    for (int k = 1; k <= n; ++k) frob.push_back(frobenius(frob.back(), f));
    if (frob[static_cast<std::size_t>(n)] != rem(ModPPoly::x(f.prime()), f)) return false;
    int m = n;
    for (int q = 2; q <= m; ++q) {
        if (m % q) continue;
        while (m % q == 0) m /= q;
        ModPPoly g = gcd(frob[static_cast<std::size_t>(n / q)] - ModPPoly::x(f.prime()), f);
        if (!g.is_one()) return false;
    }
    return true;
}

ModFactorization factor_mod_p(const ModPPoly& q, std::uint64_t seed) {
    if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factor_mod_p of zero polynomial");
    ModFactorization result{q.leading(), {}};
    std::mt19937_64 rng(seed);
    for (const auto& [sf, mult] : squarefree(q.monic())) {
        for (const auto& [part, d] : distinct_degree(sf)) {
            std::vector<ModPPoly> irr;
            equal_degree(part, d, rng, irr);
            for (auto& g : irr) result.factors.push_back({std::move(g), mult});
        }
    }
    std::sort(result.factors.begin(), result.factors.end(), [](const ModFactor& a, const ModFactor& b) {
        if (canonical_less(a.poly, b.poly)) return true;
        if (canonical_less(b.poly, a.poly)) return false;
        return a.multiplicity < b.multiplicity;
    });
    return result;
}

}  // namespace arecip::arith
