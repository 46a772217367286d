#include <random>

#include "arecip/error.hpp"
#include "arecip/exact_arith/int_poly.hpp"
#include "arecip/exact_arith/integer.hpp"
#include "arecip/exact_arith/mod_poly.hpp"
#include "arecip/exact_arith/padic.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arecip;
using namespace arecip::arith;

namespace {

IntPoly random_int_poly(std::mt19937_64& rng, int max_deg, long bound) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-bound, bound);
    std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("parse and print") {
    CHECK(parse_int_poly("3t^2 - t + 5") == IntPoly{5, -1, 3});
    CHECK(parse_int_poly("-t") == IntPoly{0, -1});
    CHECK(parse_int_poly("2*t^3+1") == IntPoly{1, 0, 0, 2});
    CHECK(IntPoly{5, -1, 3}.to_string() == "3t^2 - t + 5");
    CHECK_THROWS_AS(parse_int_poly("3t^"), ParseError);
    CHECK_THROWS_AS(parse_int_poly(""), ParseError);
}

TEST_CASE("content_primitive examples") {
    auto [c1, p1] = content_primitive(IntPoly{0, 4, 6});
    CHECK(c1 == 2);
    CHECK(p1 == IntPoly{0, 2, 3});
    auto [c2, p2] = content_primitive(IntPoly{0, 1});
    CHECK(c2 == 1);
    CHECK(p2 == IntPoly{0, 1});
    auto [c3, p3] = content_primitive(IntPoly{-5});
    CHECK(c3 == -5);
    CHECK(p3 == IntPoly{1});
    CHECK_THROWS_AS(content_primitive(IntPoly{}), Error);
}

TEST_CASE("resultant examples") {
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{-1, 1}) == 2);
    CHECK(resultant(IntPoly{0, 1}, IntPoly{0, 1}) == 0);
    CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    CHECK(resultant(IntPoly{3}, IntPoly{1, 1, 1}) == 9);
}

TEST_CASE("resultant agrees with Sylvester determinant") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        IntPoly a = random_int_poly(rng, 6, 20), b = random_int_poly(rng, 6, 20);
        if (i % 7 == 0) {
            IntPoly common = random_int_poly(rng, 2, 5);
            a *= common;
            b *= common;
        }
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
        // Res(a, b) = (-1)^(deg a deg b) Res(b, a)
        const int sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
        CHECK(resultant(a, b) == sign * resultant(b, a));
    }
}

TEST_CASE("gcd and exact division") {
    IntPoly a = IntPoly{1, 1} * IntPoly{-2, 0, 3};
    IntPoly b = IntPoly{1, 1} * IntPoly{5, 1};
    CHECK(gcd(a, b) == IntPoly{1, 1});
    CHECK(divexact(a, IntPoly{1, 1}) == IntPoly{-2, 0, 3});
    CHECK_THROWS(divexact(a, IntPoly{2, 1}));
    CHECK(IntPoly{1, 2, 3}.reversed() == IntPoly{3, 2, 1});
    CHECK(IntPoly{0, 0, 1}.shifted(1) == IntPoly{1, 2, 1});
}

TEST_CASE("factor_mod_p examples") {
    auto f5 = factor_mod_p(ModPPoly::from_int(IntPoly{1, 0, 1}, 5), 1);
    REQUIRE(f5.factors.size() == 2);
    CHECK(f5.factors[0].poly == ModPPoly(5, {2, 1}));
    CHECK(f5.factors[1].poly == ModPPoly(5, {3, 1}));
    auto f3 = factor_mod_p(ModPPoly::from_int(IntPoly{1, 0, 1}, 3), 1);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].poly == ModPPoly(3, {1, 0, 1}));
    auto f2 = factor_mod_p(ModPPoly::from_int(IntPoly{1, 0, 1}, 2), 1);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].poly == ModPPoly(2, {1, 1}));
    CHECK(f2.factors[0].multiplicity == 2);
    // p-th power layers in characteristic p.
    auto f3b = factor_mod_p(pow(ModPPoly(3, {1, 1}), 7) * ModPPoly(3, {0, 1}), 4);
    REQUIRE(f3b.factors.size() == 2);
    CHECK(f3b.factors[0].poly == ModPPoly(3, {0, 1}));
    CHECK(f3b.factors[1].multiplicity == 7);
}

TEST_CASE("factor_mod_p round trip and irreducibility") {
    std::mt19937_64 rng(2024);
    const u64 primes[] = {2, 3, 5, 7, 101};
    for (u64 p : primes) {
        std::uniform_int_distribution<u64> coef(0, p - 1);
        for (int i = 0; i < 120; ++i) {
            std::uniform_int_distribution<int> deg(1, 8);
            std::vector<u64> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& x : c) x = coef(rng);
            if (c.back() == 0) c.back() = 1;
            ModPPoly q(p, c);
            auto fac = factor_mod_p(q, static_cast<std::uint64_t>(i));
            ModPPoly prod = ModPPoly::constant(p, fac.unit);
            for (const auto& f : fac.factors) {
                CHECK(f.poly.leading() == 1);
                CHECK(is_irreducible(f.poly));
                if (p <= 7) {
                    std::vector<long> small(f.poly.coeffs().begin(), f.poly.coeffs().end());
                    CHECK(oracle::brute_irreducible(small, static_cast<long>(p)));
                }
                prod *= pow(f.poly, static_cast<unsigned>(f.multiplicity));
            }
            CHECK(prod == q);
        }
    }
}

TEST_CASE("factor_integer") {
    auto f = factor_integer(12);
    REQUIRE(f.primes.size() == 2);
    CHECK(f.primes[0] == std::pair<mpz_class, int>(2, 2));
    CHECK(f.primes[1] == std::pair<mpz_class, int>(3, 1));
    auto g = factor_integer(-7);
    CHECK(g.sign == -1);
    REQUIRE(g.primes.size() == 1);
    CHECK(g.primes[0].first == 7);
    CHECK(factor_integer(1).primes.empty());
    CHECK_THROWS(factor_integer(0));

    // Products of primes above the trial-division bound.
    mpz_class p1("1000003"), p2("1000033"), p3("4294967311");
    auto h = factor_integer(p1 * p1 * p2 * p3 * 6);
    mpz_class prod = h.sign;
    for (auto& [q, e] : h.primes) {
        CHECK(is_probable_prime(q));
        for (int i = 0; i < e; ++i) prod *= q;
    }
    CHECK(prod == p1 * p1 * p2 * p3 * 6);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        mpz_class n = to_mpz(rng() >> 20) + 1;
        auto fi = factor_integer(n);
        mpz_class back = 1;
        for (auto& [q, e] : fi.primes) {
            CHECK(is_probable_prime(q));
            for (int k = 0; k < e; ++k) back *= q;
        }
        CHECK(back == n);
    }
    CHECK(is_probable_prime(mpz_class("170141183460469231731687303715884105727")));
    CHECK_FALSE(is_probable_prime(mpz_class("3825123056546413051")));
}

TEST_CASE("padic_factor of t^2+1") {
    const IntPoly h{1, 0, 1};
    auto f5 = padic_factor(h, 5, 20, 1);
    REQUIRE(f5.factors.size() == 2);
    for (auto& f : f5.factors) {
        CHECK(f.e == 1);
        CHECK(f.f == 1);
        CHECK(f.poly.degree() == 1);
    }
    auto f3 = padic_factor(h, 3, 20, 1);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].e == 1);
    CHECK(f3.factors[0].f == 2);
    auto f2 = padic_factor(h, 2, 20, 1);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].e == 2);
    CHECK(f2.factors[0].f == 1);
}

TEST_CASE("padic_factor shapes") {
    struct Case {
        IntPoly h;
        u64 p;
        std::vector<std::pair<int, int>> ef;  // sorted
    };
    const std::vector<Case> cases = {
        {IntPoly{-2, 0, 0, 1}, 2, {{3, 1}}},          // Eisenstein
        {IntPoly{-2, 0, 0, 1}, 3, {{3, 1}}},          // t^3 - 2 = (t+1)^3 mod 3
        {IntPoly{-2, 0, 0, 1}, 5, {{1, 1}, {1, 2}}},  // one cube root of 2 in Z_5
        {IntPoly{-2, 0, 0, 1}, 7, {{1, 3}}},          // 2 is not a cube mod 7
        {IntPoly{-2, 0, 1}, 2, {{2, 1}}},
        {IntPoly{-2, 0, 1}, 7, {{1, 1}, {1, 1}}},
        {IntPoly{-5, 0, 1}, 2, {{1, 2}}},             // Q_2(sqrt 5) unramified
        {IntPoly{-17, 0, 1}, 2, {{1, 1}, {1, 1}}},    // 17 = 1 mod 8
        {IntPoly{-3, 0, 1}, 2, {{2, 1}}},
        {IntPoly{-48, 0, 1}, 2, {{2, 1}}},            // 48 = 16 * 3
        {IntPoly{-68, 0, 1}, 2, {{1, 1}, {1, 1}}},    // 68 = 4 * 17
        {IntPoly{-75, 0, 1}, 5, {{1, 2}}},            // 75 = 25 * 3, 3 non-residue mod 5
        {IntPoly{-100, 0, 1}, 5, {{1, 1}, {1, 1}}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.h.to_string());
        CAPTURE(c.p);
        auto fac = padic_factor(c.h, c.p, ArithConfig{});
        std::vector<std::pair<int, int>> got;
        int total = 0;
        for (auto& f : fac.factors) {
            got.emplace_back(f.e, f.f);
            total += f.e * f.f;
            CHECK(f.poly.degree() == f.e * f.f);
        }
        std::sort(got.begin(), got.end());
        CHECK(got == c.ef);
        CHECK(total == c.h.degree());
        // The product of the factors reproduces h to the reported precision.
        IntPoly prod = IntPoly::constant(1);
        for (auto& f : fac.factors) prod *= f.poly.poly();
        const mpz_class m = prime_power(c.p, fac.precision);
        CHECK(reduce_mod(prod - c.h, m).is_zero());
    }
}

TEST_CASE("padic_factor sum of e*f equals degree on random inputs") {
    std::mt19937_64 rng(99);
    const u64 primes[] = {2, 3, 5, 7, 13};
    int checked = 0, unsupported = 0;
    for (int i = 0; i < 200; ++i) {
        IntPoly h = random_int_poly(rng, 5, 30);
        std::vector<mpz_class> c = h.coeffs();
        c.push_back(1);
        h = IntPoly(c);
        if (h.degree() < 1 || gcd(h, h.derivative()).degree() > 0) continue;
        for (u64 p : primes) {
            try {
                auto fac = padic_factor(h, p, ArithConfig{});
                int total = 0;
                for (auto& f : fac.factors) total += f.e * f.f;
                CHECK(total == h.degree());
                IntPoly prod = IntPoly::constant(1);
                for (auto& f : fac.factors) prod *= f.poly.poly();
                CHECK(reduce_mod(prod - h, prime_power(p, fac.precision)).is_zero());
                ++checked;
            } catch (const Error& e) {
                CAPTURE(h.to_string());
                CAPTURE(p);
                CAPTURE(e.what());
                CHECK(e.kind() == ErrorKind::UnsupportedFactorization);
                ++unsupported;
            }
        }
    }
    CHECK(checked > 5 * unsupported);
}

TEST_CASE("hensel_lift reproduces the product") {
    const IntPoly f{-2, 0, 0, 0, 1};  // t^4 - 2 mod 7 = (t^2-3)(t^2+3)
    ModPPoly g0(7, {4, 0, 1}), h0(7, {3, 0, 1});
    REQUIRE(g0 * h0 == ModPPoly::from_int(f, 7));
    auto [g, h] = hensel_lift(f, g0, h0, 30);
    CHECK(reduce_mod(g * h - f, prime_power(7, 30)).is_zero());
    CHECK(ModPPoly::from_int(g, 7) == g0);
}

TEST_CASE("dedekind_p_maximal") {
    CHECK(dedekind_p_maximal(IntPoly{1, 0, 1}, 2));
    CHECK(dedekind_p_maximal(IntPoly{1, 0, 1}, 5));
    CHECK_FALSE(dedekind_p_maximal(IntPoly{-5, 0, 1}, 2));
    CHECK_FALSE(dedekind_p_maximal(IntPoly{-8, 0, 1}, 2));
    CHECK(dedekind_p_maximal(IntPoly{-2, 0, 0, 1}, 3));
}

TEST_CASE("dedekind criterion is invariant under t -> t + p c") {
    std::mt19937_64 rng(3);
    const u64 primes[] = {2, 3, 5, 7};
    for (int i = 0; i < 150; ++i) {
        IntPoly h = random_int_poly(rng, 4, 25);
        std::vector<mpz_class> c = h.coeffs();
        c.push_back(1);
        h = IntPoly(c);
        if (h.degree() < 1) continue;
        for (u64 p : primes) {
            const long shift = static_cast<long>(p) * (static_cast<long>(rng() % 7) - 3);
            CHECK(dedekind_p_maximal(h, p) == dedekind_p_maximal(h.shifted(shift), p));
        }
    }
}
