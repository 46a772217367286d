#include "arecip/exact_arith/padic.hpp"

#include <algorithm>
#include <numeric>

#include "arecip/error.hpp"
#include "arecip/exact_arith/integer.hpp"

namespace arecip::arith {

mpz_class prime_power(std::uint64_t p, int n) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), to_mpz(p).get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

IntPoly reduce_mod(const IntPoly& f, const mpz_class& m) {
    std::vector<mpz_class> c = f.coeffs();
    for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return IntPoly(std::move(c));
}

PadicPoly::PadicPoly(std::uint64_t p, int precision, const IntPoly& f)
    : p_(p), precision_(precision), f_(reduce_mod(f, prime_power(p, precision))) {}

PadicPoly PadicPoly::truncated(int precision) const {
    if (precision > precision_) throw Error(ErrorKind::InvalidArgument, "cannot raise p-adic precision by truncation");
    return PadicPoly(p_, precision, f_);
}

namespace {

// Division by a monic divisor over Z followed by reduction mod m.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b, const mpz_class& m) {
    if (a.degree() < b.degree()) return {IntPoly{}, reduce_mod(a, m)};
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    for (int d = a.degree(); d >= db; --d) {
        mpz_class top = r[static_cast<std::size_t>(d)];
        mpz_fdiv_r(top.get_mpz_t(), top.get_mpz_t(), m.get_mpz_t());
        q[static_cast<std::size_t>(d - db)] = top;
        if (top == 0) continue;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(d - db + i)] -= top * b[i];
    }
    r.resize(static_cast<std::size_t>(db));
    return {reduce_mod(IntPoly(std::move(q)), m), reduce_mod(IntPoly(std::move(r)), m)};
}

IntPoly mulmod_poly(const IntPoly& a, const IntPoly& b, const mpz_class& m) { return reduce_mod(a * b, m); }

// Square root of u modulo p^k for odd p, u a nonzero quadratic residue unit.
mpz_class sqrt_mod_odd(const mpz_class& u, std::uint64_t p, int k) {
    const mpz_class pz = to_mpz(p);
    mpz_class a = u % pz;
    if (a < 0) a += pz;
    // Tonelli-Shanks modulo p.
    mpz_class q = pz - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), pz.get_mpz_t()) != -1) ++z;
    mpz_class c, r, t, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        mpz_class tt = t;
        while (tt != 1) {
            tt = tt * tt % pz;
            ++i;
        }
        mpz_class b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % pz;
        m = i;
        c = b * b % pz;
        t = t * c % pz;
        r = r * b % pz;
    }
    // Newton lifting to p^k.
    const mpz_class mod = prime_power(p, k);
    for (int prec = 1; prec < k; prec *= 2) {
        mpz_class inv, two_r = 2 * r;
        mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), mod.get_mpz_t());
        r = (r - (r * r - u) * inv) % mod;
        if (r < 0) r += mod;
    }
    return r;
}

// Square root of u = 1 (mod 8) modulo 2^k; the result is exact modulo 2^(k-1).
mpz_class sqrt_mod_two(const mpz_class& u, int k) {
    mpz_class r = 1;
    for (int j = 3; j < k; ++j) {
        mpz_class mod = prime_power(2, j + 1);
        mpz_class diff = (r * r - u) % mod;
        if (diff != 0) r += prime_power(2, j - 1);
    }
    return r;
}

PadicFactor linear_factor(std::uint64_t p, int prec, const mpz_class& root, const ModPPoly& residue) {
    return {PadicPoly(p, prec, IntPoly(std::vector<mpz_class>{-root, 1})), 1, 1, residue};
}

// A monic quadratic cluster t^2 + b t + c whose residue is (t - a)^2.
std::vector<PadicFactor> classify_quadratic(const IntPoly& g, std::uint64_t p, int n, const ModPPoly& pi) {
    const mpz_class mod = prime_power(p, n);
    const mpz_class& b = g[1];
    const mpz_class& c = g[0];
    mpz_class d = (b * b - 4 * c) % mod;
    if (d < 0) d += mod;
    if (d == 0) throw InsufficientPrecision(n, "discriminant vanishes to working precision");
    const int v = valuation(d, to_mpz(p));
    mpz_class u = d / prime_power(p, v);
    const PadicPoly whole(p, n, g);
    if (p != 2) {
        if (v % 2 == 1) return {{whole, 2, 1, pi}};
        const mpz_class pz = to_mpz(p);
        if (mpz_legendre(u.get_mpz_t(), pz.get_mpz_t()) == -1) return {{whole, 1, 2, pi}};
        const int prec = n - v / 2;
        if (prec < 1) throw InsufficientPrecision(n, "split quadratic cluster needs more digits");
        const mpz_class sq = prime_power(p, v / 2) * sqrt_mod_odd(u, p, n - v);
        const mpz_class m2 = prime_power(p, prec);
        mpz_class inv2;
        mpz_class two = 2;
        mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), m2.get_mpz_t());
        mpz_class r1 = ((-b + sq) * inv2) % m2, r2 = ((-b - sq) * inv2) % m2;
        if (r1 < 0) r1 += m2;
        if (r2 < 0) r2 += m2;
        return {linear_factor(p, prec, r1, pi), linear_factor(p, prec, r2, pi)};
    }
    if (n - v < 3) throw InsufficientPrecision(n, "2-adic discriminant class needs more digits");
    if (v % 2 == 1) return {{whole, 2, 1, pi}};
    const unsigned long u8 = mpz_fdiv_ui(u.get_mpz_t(), 8);
    if (u8 == 5) return {{whole, 1, 2, pi}};
    if (u8 != 1) return {{whole, 2, 1, pi}};
    const int prec = n - v / 2 - 2;
    if (prec < 1) throw InsufficientPrecision(n, "split quadratic cluster needs more digits");
    const mpz_class sq = prime_power(2, v / 2) * sqrt_mod_two(u, n - v);
    const mpz_class m2 = prime_power(2, prec);
    mpz_class r1 = (-b + sq), r2 = (-b - sq);
    // b is even and v >= 2, so both numerators are even.
    mpz_fdiv_q_2exp(r1.get_mpz_t(), r1.get_mpz_t(), 1);
    mpz_fdiv_q_2exp(r2.get_mpz_t(), r2.get_mpz_t(), 1);
    r1 %= m2;
    r2 %= m2;
    if (r1 < 0) r1 += m2;
    if (r2 < 0) r2 += m2;
    return {linear_factor(p, prec, r1, pi), linear_factor(p, prec, r2, pi)};
}

// Cluster of degree m >= 3 over a linear residue t - a. Accepted when the
// Newton polygon at the shifted root is a single segment of slope k/m with
// gcd(k, m) = 1, which forces an irreducible totally ramified factor.
PadicFactor classify_eisenstein_like(const IntPoly& g, std::uint64_t p, int n, const ModPPoly& pi) {
    const int m = g.degree();
    const mpz_class root = to_mpz((p - pi.coeff(0)) % p);
    const mpz_class mod = prime_power(p, n);
    // Try several lifts so that a root of g sitting exactly at the first
    // lift does not stall the precision ladder.
    IntPoly s;
    for (int j = 0; j <= m; ++j) {
        s = reduce_mod(g.shifted(root + to_mpz(p) * j), mod);
        if (s.coeff(0) != 0) break;
    }
    if (s.coeff(0) == 0) throw InsufficientPrecision(n, "constant term vanishes to working precision");
    const int k = valuation(s.coeff(0), to_mpz(p));
    if (std::gcd(k, m) != 1)
        throw Error(ErrorKind::UnsupportedFactorization,
                    "cluster of degree " + std::to_string(m) + " with Newton slope " + std::to_string(k) + "/" +
                        std::to_string(m));
    for (int i = 1; i < m; ++i) {
        const mpz_class ci = s.coeff(i);
        if (ci == 0) continue;
        const int vi = valuation(ci, to_mpz(p));
        if (static_cast<long>(m) * vi < static_cast<long>(k) * (m - i))
            throw Error(ErrorKind::UnsupportedFactorization, "cluster Newton polygon has several segments");
    }
    return {PadicPoly(p, n, g), m, 1, pi};
}

}  // namespace

std::pair<IntPoly, IntPoly> hensel_lift(const IntPoly& f, const ModPPoly& g0, const ModPPoly& h0, int n) {
    const std::uint64_t p = g0.prime();
    ExtGcd eg = ext_gcd(g0, h0);
    if (!eg.g.is_one()) throw Error(ErrorKind::InvalidArgument, "Hensel factors not coprime");
    IntPoly g = g0.lift(), h = h0.lift(), s = eg.s.lift(), t = eg.t.lift();
    int prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        const mpz_class m = prime_power(p, prec);
        IntPoly e = reduce_mod(f - g * h, m);
        auto [q, r] = divmod_monic(mulmod_poly(s, e, m), h, m);
        IntPoly g_new = reduce_mod(g + t * e + q * g, m);
        IntPoly h_new = reduce_mod(h + r, m);
        IntPoly b = reduce_mod(s * g_new + t * h_new - IntPoly::constant(1), m);
        auto [c, d] = divmod_monic(mulmod_poly(s, b, m), h_new, m);
        s = reduce_mod(s - d, m);
        t = reduce_mod(t - t * b - c * g_new, m);
        g = std::move(g_new);
        h = std::move(h_new);
    }
    const mpz_class m = prime_power(p, n);
    return {reduce_mod(g, m), reduce_mod(h, m)};
}

PadicFactorization padic_factor(const IntPoly& h, std::uint64_t p, int n, std::uint64_t seed) {
    if (h.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "padic_factor of zero polynomial");
    if (h.leading() != 1) throw Error(ErrorKind::InvalidArgument, "padic_factor expects a monic polynomial");
    if (gcd(h, h.derivative()).degree() > 0)
        throw Error(ErrorKind::InvalidArgument, "padic_factor expects a squarefree polynomial");
    PadicFactorization out{h, p, n, {}};
    if (h.degree() == 0) return out;

    const ModFactorization fac = factor_mod_p(ModPPoly::from_int(h, p), seed);
    std::vector<ModPPoly> clusters;
    for (const auto& f : fac.factors) clusters.push_back(pow(f.poly, static_cast<unsigned>(f.multiplicity)));

    std::vector<IntPoly> lifted;
    IntPoly rest = reduce_mod(h, prime_power(p, n));
    for (std::size_t j = 0; j + 1 < clusters.size(); ++j) {
        ModPPoly others = ModPPoly::constant(p, 1);
        for (std::size_t k = j + 1; k < clusters.size(); ++k) others *= clusters[k];
        auto [g, r] = hensel_lift(rest, clusters[j], others, n);
        lifted.push_back(std::move(g));
        rest = std::move(r);
    }
    lifted.push_back(std::move(rest));

    for (std::size_t j = 0; j < clusters.size(); ++j) {
        const ModPPoly& pi = fac.factors[j].poly;
        const int mult = fac.factors[j].multiplicity;
        const IntPoly& g = lifted[j];
        if (mult == 1) {
            out.factors.push_back({PadicPoly(p, n, g), 1, pi.degree(), pi});
        } else if (pi.degree() == 1 && mult == 2) {
            for (auto& f : classify_quadratic(g, p, n, pi)) out.factors.push_back(std::move(f));
        } else if (pi.degree() == 1) {
            out.factors.push_back(classify_eisenstein_like(g, p, n, pi));
        } else {
            throw Error(ErrorKind::UnsupportedFactorization,
                        "repeated residue factor of degree " + std::to_string(pi.degree()));
        }
    }
    for (const auto& f : out.factors) out.precision = std::min(out.precision, f.poly.precision());
    return out;
}

PadicFactorization padic_factor(const IntPoly& h, std::uint64_t p, const ArithConfig& config) {
    int n = config.padic_start;
    while (true) {
        try {
            return padic_factor(h, p, n, config.seed);
        } catch (const InsufficientPrecision&) {
            if (n >= config.padic_cap) throw;
            n = std::min(2 * n, config.padic_cap);
        }
    }
}

bool dedekind_p_maximal(const IntPoly& h, std::uint64_t p) {
    if (h.is_zero() || h.leading() != 1)
        throw Error(ErrorKind::InvalidArgument, "dedekind_p_maximal expects a monic polynomial");
    const ModFactorization fac = factor_mod_p(ModPPoly::from_int(h, p), 0);
    IntPoly rad = IntPoly::constant(1), cof = IntPoly::constant(1);
    ModPPoly rad_p = ModPPoly::constant(p, 1), cof_p = ModPPoly::constant(p, 1);
    for (const auto& f : fac.factors) {
        const IntPoly lift = f.poly.lift();
        rad *= lift;
        rad_p *= f.poly;
        for (int i = 1; i < f.multiplicity; ++i) {
            cof *= lift;
            cof_p *= f.poly;
        }
    }
    const IntPoly diff = rad * cof - h;
    const IntPoly big_f = diff.divexact(to_mpz(p));
    ModPPoly d = gcd(ModPPoly::from_int(big_f, p), rad_p);
    d = gcd(d, cof_p);
    return d.is_one();
}

}  // namespace arecip::arith
