#include <cstdlib>

#include "arecip/cli/cli.hpp"
#include "doctest.h"

using namespace arecip;

TEST_CASE("run config validation") {
    cli::RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.numeric.tolerance = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = {};
    cfg.arith.padic_start = cfg.arith.padic_cap + 1;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("precision from the environment") {
    setenv("ARECIP_PRECISION_BITS", "256", 1);
    CHECK(cli::default_precision_bits() == 256);
    setenv("ARECIP_PRECISION_BITS", "abc", 1);
    CHECK(cli::default_precision_bits() == 128);
    unsetenv("ARECIP_PRECISION_BITS");
    CHECK(cli::default_precision_bits(64) == 64);
}

TEST_CASE("exit codes") {
    CHECK(cli::exit_code(laws::Verdict::Pass) == 0);
    CHECK(cli::exit_code(laws::Verdict::Fail) == 1);
    CHECK(cli::exit_code(laws::Verdict::Inconclusive) == 4);
    CHECK(cli::exit_code(ErrorKind::Parse) == 2);
    CHECK(cli::exit_code(ErrorKind::UnsupportedFactorization) == 3);
    CHECK(cli::exit_code(ErrorKind::InsufficientPrecision) == 4);
}

TEST_CASE("structured report schema") {
    const auto r = laws::verify_horizontal_law(arith::IntPoly{1, 0, 1}, surface::parse_function("1 * (t^2+1)^1"),
                                               surface::parse_function("1 * (t-1)^1"));
    const auto j = cli::report_json(r, cli::RunConfig{});
    for (const char* key : {"law", "items", "exact_sum", "numeric_sum", "verdict", "config"}) CHECK(j.contains(key));
    REQUIRE(j["items"].size() == 2);
    for (const auto& item : j["items"])
        for (const char* key : {"place", "branch", "value", "log_base"}) CHECK(item.contains(key));
    CHECK(j["items"][0]["log_base"] == 2);
    CHECK(j["items"][1]["log_base"].is_null());
    CHECK(j["items"][1]["value"]["bits"] == 128);
    CHECK(j["exact_sum"][0]["coefficient"] == 1);
    CHECK(j["verdict"] == "pass");
    CHECK(cli::report_json(r, cli::RunConfig{}).dump() == j.dump());

    const auto v = laws::verify_vertical_law(5, surface::parse_function("5"), surface::parse_function("1 * (t^2+2)^1"));
    const auto jv = cli::report_json(v, cli::RunConfig{});
    CHECK(jv["exact_sum"] == 0);
    CHECK(jv["numeric_sum"].is_null());
}

TEST_CASE("selftest suites") {
    const auto results = cli::run_selftest(3, 10, cli::RunConfig{});
    REQUIRE(results.size() == 8);
    for (const auto& r : results) {
        CAPTURE(r.name);
        CHECK(r.failed == 0);
        CHECK(r.passed + r.inconclusive == 10);
    }
    CHECK(cli::selftest_json(results, 3, 10).dump() == cli::selftest_json(cli::run_selftest(3, 10, {}), 3, 10).dump());
}
