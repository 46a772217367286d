#include "arecip/exact_arith/integer.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "arecip/error.hpp"

namespace arecip::arith {

mpz_class to_mpz(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

std::uint64_t to_u64(const mpz_class& v) {
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
        throw Error(ErrorKind::InvalidArgument, "value does not fit in 64 bits: " + v.get_str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool mr_round(const mpz_class& n, const mpz_class& d, unsigned long s, const mpz_class& a) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const mpz_class nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
    }
    return false;
}

mpz_class pollard_brent(const mpz_class& n, std::uint64_t& budget, std::mt19937_64& rng) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    while (true) {
        mpz_class y = to_mpz(rng()) % n, c = to_mpz(rng()) % (n - 1) + 1;
        const std::uint64_t m = 128;
        mpz_class g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t steps = std::min<std::uint64_t>(m, to_u64(r - k));
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                if (budget < steps) throw Error(ErrorKind::FactorizationTimeout, "Pollard-Brent budget exhausted");
                budget -= steps;
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = (ys * ys + c) % n;
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const mpz_class& n, std::uint64_t& budget, std::mt19937_64& rng, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        split(r, budget, rng, out);
        split(r, budget, rng, out);
        return;
    }
    mpz_class d = pollard_brent(n, budget, rng);
    split(d, budget, rng, out);
    split(n / d, budget, rng, out);
}

}  // namespace

bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // These twelve bases are known to be sufficient below 2^64.
        for (unsigned a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
            if (!mr_round(n, d, s, a)) return false;
        return true;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ mpz_get_ui(n.get_mpz_t()));
    for (int i = 0; i < 64; ++i) {
        mpz_class a = to_mpz(rng()) % (n - 3) + 2;
        if (!mr_round(n, d, s, a)) return false;
    }
    return true;
}

IntegerFactorization factor_integer(const mpz_class& n_in, std::uint64_t budget) {
    if (n_in == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
    IntegerFactorization result;
    result.sign = n_in < 0 ? -1 : 1;
    mpz_class n = abs(n_in);
    std::map<mpz_class, int> found;
    for (std::uint32_t p : small_primes()) {
        if (mpz_cmp_ui(n.get_mpz_t(), std::uint64_t{p} * p) < 0) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            found[mpz_class(p)] += 1;
        }
    }
    if (n != 1) {
        std::mt19937_64 rng(0x5eedULL);
        split(n, budget, rng, found);
    }
    for (auto& [p, e] : found) result.primes.emplace_back(p, e);
    return result;
}

}  // namespace arecip::arith
