#include "arecip/laws/population.hpp"

#include "arecip/exact_arith/mod_poly.hpp"

namespace arecip::laws::population {

using arith::IntPoly;
using surface::ClosedPoint;
using surface::FactoredRationalFunction;

const std::vector<IntPoly>& base_pool() {
    static const std::vector<IntPoly> pool = {IntPoly{0, 1},    IntPoly{-1, 1},   IntPoly{-5, 1}, IntPoly{2, 1},
                                              IntPoly{1, 0, 1}, IntPoly{2, 0, 1}, IntPoly{-1, 2}};
    return pool;
}

namespace {

mpq_class random_unit(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> un(1, 50);
    const long num = un(rng);
    mpq_class u((rng() & 1) ? num : -num, un(rng));
    u.canonicalize();
    return u;
}

}  // namespace

FactoredRationalFunction random_function(std::mt19937_64& rng, const std::vector<IntPoly>& pool, int max_factors) {
    std::uniform_int_distribution<int> ex(-3, 3), count(0, max_factors);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<std::pair<IntPoly, int>> fs;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) fs.emplace_back(pool[pick(rng)], ex(rng));
    return FactoredRationalFunction(random_unit(rng), fs);
}

ClosedPoint random_point(std::mt19937_64& rng, const std::vector<std::uint64_t>& primes,
                         const std::vector<IntPoly>& pool) {
    const std::uint64_t p = primes[rng() % primes.size()];
    std::vector<ClosedPoint> candidates{ClosedPoint::at_infinity(p)};
    for (const auto& b : pool)
        for (const auto& x : surface::points_on_curve(surface::Curve::horizontal(b), p)) candidates.push_back(x);
    candidates.push_back(ClosedPoint::affine(arith::ModPPoly::linear_root(p, rng() % p)));
    return candidates[rng() % candidates.size()];
}

std::pair<FactoredRationalFunction, FactoredRationalFunction> random_horizontal_pair(std::mt19937_64& rng,
                                                                                     const IntPoly& h_in,
                                                                                     const std::vector<IntPoly>& pool) {
    const IntPoly h = surface::normalize_base(h_in).second;
    std::vector<IntPoly> others;
    for (const auto& b : pool)
        if (!(b == h)) others.push_back(b);
    std::uniform_int_distribution<int> ex(-3, 3);
    auto one = [&]() {
        auto fn = random_function(rng, others);
        return fn * FactoredRationalFunction::from_canonical(1, {{h, ex(rng)}});
    };
    auto f = one();
    auto g = one();
    return {std::move(f), std::move(g)};
}

}  // namespace arecip::laws::population
