#include <cstdlib>
#include <sstream>

#include "arecip/cli/cli.hpp"

namespace arecip::cli {

void RunConfig::validate() const {
    if (!(numeric.tolerance > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    if (arith.padic_start <= 0 || arith.padic_start > arith.padic_cap)
        throw Error(ErrorKind::InvalidArgument, "p-adic precision start must be positive and at most the cap");
    if (numeric.precision_bits < 16 || numeric.precision_bits > numeric.max_precision_bits)
        throw Error(ErrorKind::InvalidArgument, "precision bits must lie in [16, max precision]");
}

int default_precision_bits(int fallback) {
    const char* env = std::getenv("ARECIP_PRECISION_BITS");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 16 || v > 1 << 16) return fallback;
    return static_cast<int>(v);
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnsupportedFactorization:
            return kUnsupported;
        case ErrorKind::InsufficientPrecision:
        case ErrorKind::FactorizationTimeout:
        case ErrorKind::RootFindingDivergence:
            return kInconclusive;
        default:
            return kUsage;
    }
}

int exit_code(laws::Verdict verdict) {
    switch (verdict) {
        case laws::Verdict::Pass:
            return kPass;
        case laws::Verdict::Fail:
            return kFail;
        case laws::Verdict::Inconclusive:
            return kInconclusive;
    }
    return kFail;
}

nlohmann::ordered_json real_json(const num::BigFloat& x) {
    nlohmann::ordered_json j;
    j["value"] = x.to_string(25);
    j["bits"] = x.precision();
    return j;
}

nlohmann::ordered_json config_json(const RunConfig& config) {
    nlohmann::ordered_json j;
    j["padic_start"] = config.arith.padic_start;
    j["padic_cap"] = config.arith.padic_cap;
    j["factor_budget"] = config.arith.factor_budget;
    j["split_seed"] = config.arith.seed;
    j["precision_bits"] = config.numeric.precision_bits;
    j["max_precision_bits"] = config.numeric.max_precision_bits;
    j["tolerance"] = config.numeric.tolerance;
    j["root_max_iterations"] = config.numeric.root_max_iterations;
    return j;
}

nlohmann::ordered_json report_json(const laws::LawReport& report, const RunConfig& config) {
    nlohmann::ordered_json j;
    j["law"] = laws::to_string(report.law);
    j["items"] = nlohmann::ordered_json::array();
    for (const auto& it : report.items) {
        nlohmann::ordered_json item;
        item["place"] = it.place;
        item["branch"] = it.branch;
        if (it.numeric)
            item["value"] = real_json(*it.numeric);
        else
            item["value"] = it.value;
        item["log_base"] = it.log_base ? nlohmann::ordered_json(*it.log_base) : nlohmann::ordered_json(nullptr);
        j["items"].push_back(std::move(item));
    }
    if (report.law == laws::Law::Horizontal) {
        // Exact finite part: integer coefficients of log p.
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [p, c] : report.log_coefficients)
            if (c != 0) terms.push_back({{"log_base", p}, {"coefficient", c}});
        j["exact_sum"] = terms;
    } else {
        j["exact_sum"] = report.exact_sum;
    }
    j["numeric_sum"] = report.numeric_sum ? real_json(*report.numeric_sum) : nlohmann::ordered_json(nullptr);
    j["verdict"] = laws::to_string(report.verdict);
    j["reason"] = report.reason;
    RunConfig effective = config;
    effective.arith = report.arith;
    effective.numeric = report.numeric;
    j["config"] = config_json(effective);
    return j;
}

std::string report_text(const laws::LawReport& report) {
    std::ostringstream out;
    out << "law: " << laws::to_string(report.law) << "\n";
    for (const auto& it : report.items) {
        out << "  " << it.place << " | " << it.branch << " | ";
        if (it.numeric)
            out << it.numeric->to_string(20) << " [" << it.numeric->precision() << " bits]";
        else
            out << it.value;
        if (it.log_base) out << " * log " << *it.log_base;
        out << "\n";
    }
    if (report.law == laws::Law::Horizontal) {
        out << "exact part:";
        bool any = false;
        for (const auto& [p, c] : report.log_coefficients) {
            if (c == 0) continue;
            out << " " << (c < 0 ? "-" : "+") << " " << std::labs(c) << " log " << p;
            any = true;
        }
        out << (any ? "\n" : " 0\n");
    } else {
        out << "exact sum: " << report.exact_sum << "\n";
    }
    if (report.numeric_sum)
        out << "numeric sum: " << report.numeric_sum->to_string(20) << " [" << report.numeric_sum->precision()
            << " bits]\n";
    out << "verdict: " << laws::to_string(report.verdict);
    if (!report.reason.empty()) out << " (" << report.reason << ")";
    out << "\n";
    return out.str();
}

}  // namespace arecip::cli
