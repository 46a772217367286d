#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "arecip/centext/instances.hpp"
#include "arecip/cli/cli.hpp"
#include "arecip/laws/population.hpp"

namespace arecip::cli {

namespace {

enum class Outcome { Pass, Fail, Inconclusive };

struct CaseResult {
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

constexpr std::size_t kMaxFailures = 5;

SuiteResult run_suite(const std::string& name, int cases, std::uint64_t seed,
                      const std::function<CaseResult(std::mt19937_64&, int)>& body) {
    SuiteResult r;
    r.name = name;
    r.cases = cases;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        CaseResult c;
        try {
            c = body(rng, i);
        } catch (const Error& e) {
            c = CaseResult{Outcome::Fail, std::string(to_string(e.kind())) + ": " + e.what()};
        }
        switch (c.outcome) {
            case Outcome::Pass:
                ++r.passed;
                break;
            case Outcome::Inconclusive:
                ++r.inconclusive;
                break;
            case Outcome::Fail:
                ++r.failed;
                if (r.failures.size() < kMaxFailures) r.failures.push_back("case " + std::to_string(i) + ": " + c.detail);
                break;
        }
    }
    return r;
}

CaseResult from_report(const laws::LawReport& report, const std::string& what) {
    switch (report.verdict) {
        case laws::Verdict::Pass:
            return {};
        case laws::Verdict::Inconclusive:
            return {Outcome::Inconclusive, report.reason};
        case laws::Verdict::Fail:
            break;
    }
    return {Outcome::Fail, what + ": " + report.reason};
}

CaseResult check(bool ok, const std::string& what) { return ok ? CaseResult{} : CaseResult{Outcome::Fail, what}; }

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, int cases, const RunConfig& config) {
    using namespace centext;
    namespace pop = laws::population;
    std::vector<SuiteResult> out;
    // Each suite gets its own stream so adding cases to one does not shift
    // the others.
    std::seed_seq seq{seed};
    std::vector<std::uint64_t> seeds(8);
    seq.generate(seeds.begin(), seeds.end());

    symbols::BranchCache cache(config.arith);
    out.push_back(run_suite("point-law", cases, seeds[0], [&](std::mt19937_64& rng, int) {
        const auto f = pop::random_function(rng), g = pop::random_function(rng);
        const auto x = pop::random_point(rng, {2, 3, 5, 7, 11, 13});
        return from_report(laws::verify_point_law(x, f, g, config.arith, &cache),
                           x.to_string() + " f=" + f.to_string() + " g=" + g.to_string());
    }));
    out.push_back(run_suite("vertical-law", cases, seeds[1], [&](std::mt19937_64& rng, int i) {
        static const std::uint64_t primes[] = {2, 3, 5, 7, 101};
        const std::uint64_t p = primes[i % 5];
        const auto f = pop::random_function(rng), g = pop::random_function(rng);
        return from_report(laws::verify_vertical_law(p, f, g, config.arith),
                           "p=" + std::to_string(p) + " f=" + f.to_string() + " g=" + g.to_string());
    }));
    out.push_back(run_suite("horizontal-law", cases, seeds[2], [&](std::mt19937_64& rng, int i) {
        static const std::vector<arith::IntPoly> curves = {arith::IntPoly{0, 1}, arith::IntPoly{-2, 1},
                                                           arith::IntPoly{1, 0, 1}, arith::IntPoly{-2, 0, 1},
                                                           arith::IntPoly{-2, 0, 0, 1}};
        const auto& h = curves[static_cast<std::size_t>(i) % curves.size()];
        const auto [f, g] = pop::random_horizontal_pair(rng, h);
        return from_report(laws::verify_horizontal_law(h, f, g, config.arith, config.numeric, &cache),
                           "h=" + h.to_string() + " f=" + f.to_string() + " g=" + g.to_string());
    }));
    out.push_back(run_suite("oracle", cases, seeds[3], [&](std::mt19937_64& rng, int) {
        const LaurentPoly f = instances::random_laurent(rng, -2, 5, 4), g = instances::random_laurent(rng, -2, 5, 4);
        const double oracle = nu_arch_oracle(f, g).to_double();
        const double closed = nu_arch_closed_form(f, g).to_double();
        return check(std::fabs(oracle - closed) <= 1e-9, "f=" + f.to_string() + " g=" + g.to_string());
    }));
    out.push_back(run_suite("group-law", cases, seeds[4], [&](std::mt19937_64& rng, int i) {
        const auto t = instances::random_group_triple(rng, i % 2 == 1);
        const ArGLElement e = central(t.u.g, t.a);
        const ArGLElement c = central(t.u.g, t.a, t.c);
        const ArGLElement uinv = group_inverse(t.u);
        const ArGLElement left = group_mul(t.u, uinv), right = group_mul(uinv, t.u);
        const bool ok = same_element(group_mul(group_mul(t.u, t.v), t.w), group_mul(t.u, group_mul(t.v, t.w))) &&
                        same_element(group_mul(e, t.u), t.u) && same_element(group_mul(t.u, e), t.u) &&
                        same_element(left, e) && same_element(right, e) &&
                        same_element(group_mul(c, t.v), group_mul(t.v, c));
        return check(ok, "group axioms");
    }));
    out.push_back(run_suite("pairing-reciprocity", cases, seeds[5], [&](std::mt19937_64& rng, int i) {
        const auto inst = instances::random_pairing_instance(rng, i % 2 == 1);
        const auto r = prop_b_check(inst.g, inst.h, inst.a, inst.b);
        return check(r.pass, "lhs=" + r.lhs.to_string() + " rhs=" + r.rhs.to_string());
    }));
    out.push_back(run_suite("pairing-scaling", cases, seeds[6], [&](std::mt19937_64& rng, int i) {
        const auto inst = instances::random_pairing_instance(rng, i % 2 == 1);
        std::uniform_int_distribution<long> d(1, 40);
        mpq_class sa(d(rng), d(rng)), sb(-d(rng), d(rng));
        sa.canonicalize();
        sb.canonicalize();
        const RootScalar base = commutator_pairing(inst.g, inst.h, inst.a);
        const RootScalar scaled = commutator_pairing(inst.g, inst.h, inst.a, RootScalar(sa), RootScalar(sb));
        const long double rel = std::fabs(scaled.to_long_double() / base.to_long_double() - 1);
        return check(rel <= 1e-12L, "pairing changed under rescaling: " + base.to_string() + " vs " + scaled.to_string());
    }));
    out.push_back(run_suite("gamma-sequence", cases, seeds[7], [&](std::mt19937_64& rng, int) {
        const auto s = instances::random_exact_sequence(rng);
        const long double base = gamma_sequence(s);
        long double spread = 0;
        for (int k = 0; k < 5; ++k) spread = std::max(spread, std::fabs(gamma_sequence(s, &rng) - base));
        return check(spread <= 1e-12L * base, "gamma moved under re-randomization");
    }));
    return out;
}

nlohmann::ordered_json selftest_json(const std::vector<SuiteResult>& results, std::uint64_t seed, int cases) {
    nlohmann::ordered_json j;
    j["seed"] = seed;
    j["cases"] = cases;
    j["suites"] = nlohmann::ordered_json::array();
    bool ok = true;
    for (const auto& r : results) {
        j["suites"].push_back({{"name", r.name},
                               {"cases", r.cases},
                               {"passed", r.passed},
                               {"inconclusive", r.inconclusive},
                               {"failed", r.failed},
                               {"failures", r.failures}});
        ok = ok && r.failed == 0;
    }
    j["verdict"] = ok ? "pass" : "fail";
    return j;
}

}  // namespace arecip::cli
