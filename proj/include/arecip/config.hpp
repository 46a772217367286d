#pragma once

#include <cstdint>

namespace arecip {

// Knobs shared by the arithmetic and symbol layers. Everything is explicit;
// nothing reads global state.
struct ArithConfig {
    int padic_start = 20;       // first p-adic precision tried
    int padic_cap = 1280;       // give up above this precision
    std::uint64_t seed = 0x5eed;  // drives Cantor-Zassenhaus splitting
    std::uint64_t factor_budget = 2'000'000;  // Pollard-Brent iterations
};

struct NumericConfig {
    int precision_bits = 128;
    int max_precision_bits = 4096;
    double tolerance = 1e-6;
    int root_max_iterations = 2000;
};

}  // namespace arecip
