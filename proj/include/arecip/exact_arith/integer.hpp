#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace arecip::arith {

mpz_class to_mpz(std::uint64_t v);
// Throws InvalidArgument if v is negative or does not fit.
std::uint64_t to_u64(const mpz_class& v);

// Miller-Rabin: deterministic below 2^64, 64 rounds with seeded bases above.
bool is_probable_prime(const mpz_class& n);

struct IntegerFactorization {
    int sign = 1;  // sign of n; the prime list describes |n|
    std::vector<std::pair<mpz_class, int>> primes;  // ascending
};

// Trial division up to 10^6, then Pollard-Brent on remaining cofactors.
// Throws FactorizationTimeout once `budget` Pollard iterations are spent.
IntegerFactorization factor_integer(const mpz_class& n, std::uint64_t budget = 2'000'000);

}  // namespace arecip::arith
