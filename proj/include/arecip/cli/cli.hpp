#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arecip/config.hpp"
#include "arecip/error.hpp"
#include "arecip/laws/laws.hpp"
#include "json.hpp"

namespace arecip::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kUnsupported = 3, kInconclusive = 4 };

struct RunConfig {
    ArithConfig arith;
    NumericConfig numeric;
    bool json = false;

    // Throws InvalidArgument on tolerance <= 0, padic_start > padic_cap or
    // nonpositive precision.
    void validate() const;
};

// Precision from ARECIP_PRECISION_BITS when set and valid, else `fallback`.
int default_precision_bits(int fallback = 128);

int exit_code(ErrorKind kind);
int exit_code(laws::Verdict verdict);

// Reals are rendered as {"value": "<decimal>", "bits": <precision>}.
nlohmann::ordered_json real_json(const num::BigFloat& x);
nlohmann::ordered_json config_json(const RunConfig& config);
// Fields law, items[{place, branch, value, log_base}], exact_sum,
// numeric_sum, verdict, reason, config.
nlohmann::ordered_json report_json(const laws::LawReport& report, const RunConfig& config);
std::string report_text(const laws::LawReport& report);

struct SuiteResult {
    std::string name;
    int cases = 0;
    int passed = 0;
    int inconclusive = 0;
    int failed = 0;
    std::vector<std::string> failures;  // first few, for diagnostics
};

// Seeded property suites: point-law, vertical-law, horizontal-law, oracle,
// group-law, pairing-reciprocity, pairing-scaling, gamma-sequence; `cases`
// instances each.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, int cases, const RunConfig& config);
nlohmann::ordered_json selftest_json(const std::vector<SuiteResult>& results, std::uint64_t seed, int cases);

}  // namespace arecip::cli
