#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "arecip/centext/group.hpp"
#include "arecip/centext/laurent.hpp"
#include "arecip/cli/cli.hpp"
#include "arecip/surface/embeddings.hpp"
#include "arecip/symbols/symbols.hpp"

using namespace arecip;
using nlohmann::ordered_json;

namespace {

struct Inputs {
    std::string curve, point, f, g, window;
    std::optional<std::size_t> embedding;
    std::uint64_t prime = 0;
    std::uint64_t selftest_seed = 42;
    int cases = 100;
};

void emit(const cli::RunConfig& cfg, const ordered_json& j, const std::string& text) {
    if (cfg.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int verdict_exit(const laws::LawReport& r) {
    const std::string unsupported = to_string(ErrorKind::UnsupportedFactorization);
    if (r.verdict == laws::Verdict::Inconclusive && r.reason.rfind(unsupported, 0) == 0) return cli::kUnsupported;
    return cli::exit_code(r.verdict);
}

int cmd_symbol(const cli::RunConfig& cfg, const Inputs& in) {
    const surface::Curve c = surface::parse_curve(in.curve);
    const auto f = surface::parse_function(in.f), g = surface::parse_function(in.g);
    ordered_json j;
    j["command"] = "symbol";
    j["curve"] = c.to_string();
    j["f"] = f.to_string();
    j["g"] = g.to_string();
    if (in.embedding) {
        if (c.kind != surface::Curve::Kind::Horizontal)
            throw Error(ErrorKind::InvalidArgument, "--embedding needs a horizontal curve");
        const auto pt = surface::embeddings(c.h, cfg.numeric);
        if (*in.embedding >= pt.roots.size())
            throw Error(ErrorKind::InvalidArgument, "embedding index out of range; curve has " +
                                                        std::to_string(pt.roots.size()) + " embeddings");
        const auto& z = pt.roots[*in.embedding];
        const num::BigFloat v = symbols::archimedean_symbol(f, g, pt, *in.embedding);
        j["embedding"] = {{"index", *in.embedding}, {"re", cli::real_json(z.re)}, {"im", cli::real_json(z.im)}};
        j["value"] = cli::real_json(v);
        j["config"] = cli::config_json(cfg);
        emit(cfg, j,
             "curve " + c.to_string() + ", embedding " + std::to_string(*in.embedding) + " (" + z.re.to_string(12) +
                 " + " + z.im.to_string(12) + " i)\nsymbol: " + v.to_string(20) + " [" +
                 std::to_string(v.precision()) + " bits]\n");
        return cli::kPass;
    }
    const surface::ClosedPoint x = surface::parse_point(in.point);
    const auto terms = symbols::curve_point_symbol_terms(c, x, f, g, cfg.arith);
    const long value = symbols::curve_point_symbol(c, x, f, g, cfg.arith);
    j["point"] = x.to_string();
    j["items"] = ordered_json::array();
    std::string text = "curve " + c.to_string() + ", point " + x.to_string() + "\n";
    for (const auto& t : terms) {
        j["items"].push_back({{"branch", t.label}, {"value", t.value}});
        text += "  " + t.label + " | " + std::to_string(t.value) + "\n";
    }
    j["value"] = value;
    j["config"] = cli::config_json(cfg);
    emit(cfg, j, text + "symbol: " + std::to_string(value) + "\n");
    return cli::kPass;
}

int emit_report(const cli::RunConfig& cfg, const laws::LawReport& r) {
    emit(cfg, cli::report_json(r, cfg), cli::report_text(r));
    return verdict_exit(r);
}

int cmd_verify_point(const cli::RunConfig& cfg, const Inputs& in) {
    return emit_report(cfg, laws::verify_point_law(surface::parse_point(in.point), surface::parse_function(in.f),
                                                   surface::parse_function(in.g), cfg.arith));
}

int cmd_verify_vertical(const cli::RunConfig& cfg, const Inputs& in) {
    return emit_report(cfg, laws::verify_vertical_law(in.prime, surface::parse_function(in.f),
                                                      surface::parse_function(in.g), cfg.arith));
}

int cmd_verify_horizontal(const cli::RunConfig& cfg, const Inputs& in) {
    const surface::Curve c = surface::parse_curve(in.curve);
    if (c.kind != surface::Curve::Kind::Horizontal)
        throw Error(ErrorKind::InvalidArgument, "horizontal law needs a curve H:<polynomial>");
    return emit_report(cfg, laws::verify_horizontal_law(c.h, surface::parse_function(in.f),
                                                        surface::parse_function(in.g), cfg.arith, cfg.numeric));
}

std::optional<centext::Window> parse_window(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError(0, "window must be LOW,HIGH");
    try {
        std::size_t used = 0;
        const int low = std::stoi(s.substr(0, comma), &used);
        if (used != comma) throw ParseError(used, "bad window bound");
        const std::string rest = s.substr(comma + 1);
        const int high = std::stoi(rest, &used);
        if (used != rest.size()) throw ParseError(comma + 1 + used, "bad window bound");
        if (high < low) throw Error(ErrorKind::InvalidArgument, "window high must be >= low");
        return centext::Window{low, high};
    } catch (const std::logic_error&) {
        throw ParseError(0, "window must be LOW,HIGH");
    }
}

int cmd_pairing(const cli::RunConfig& cfg, const Inputs& in) {
    const auto f = centext::parse_laurent(in.f), g = centext::parse_laurent(in.g);
    const auto window = parse_window(in.window);
    const int bits = cfg.numeric.precision_bits;
    const centext::Window used = window.value_or(centext::minimal_window(f, g));
    const num::BigFloat oracle = centext::nu_arch_oracle(f, g, window, bits);
    const num::BigFloat closed = centext::nu_arch_closed_form(f, g, bits);
    const num::BigFloat diff = num::abs(oracle - closed);
    const bool ok = diff.to_double() <= 1e-9;
    ordered_json j;
    j["command"] = "pairing";
    j["f"] = f.to_string();
    j["g"] = g.to_string();
    j["window"] = {used.low, used.high};
    j["oracle"] = cli::real_json(oracle);
    j["closed_form"] = cli::real_json(closed);
    j["difference"] = cli::real_json(diff);
    j["verdict"] = ok ? "pass" : "fail";
    j["config"] = cli::config_json(cfg);
    emit(cfg, j,
         "window [" + std::to_string(used.low) + ", " + std::to_string(used.high) + "]\noracle:      " +
             oracle.to_string(20) + "\nclosed form: " + closed.to_string(20) + "\ndifference:  " +
             diff.to_string(5) + " [" + std::to_string(bits) + " bits]\n");
    return ok ? cli::kPass : cli::kFail;
}

int cmd_selftest(const cli::RunConfig& cfg, const Inputs& in) {
    if (in.cases < 0) throw Error(ErrorKind::InvalidArgument, "--cases must be nonnegative");
    const auto results = cli::run_selftest(in.selftest_seed, in.cases, cfg);
    const ordered_json j = cli::selftest_json(results, in.selftest_seed, in.cases);
    std::string text;
    bool ok = true;
    for (const auto& r : results) {
        if (!text.empty()) text += ", ";
        text += r.name + " " + std::to_string(r.passed + r.inconclusive) + "/" + std::to_string(r.cases);
        if (r.inconclusive) text += " (" + std::to_string(r.inconclusive) + " inconclusive)";
        ok = ok && r.failed == 0;
    }
    text += "\n";
    for (const auto& r : results)
        for (const auto& msg : r.failures) text += r.name + " failure: " + msg + "\n";
    emit(cfg, j, text);
    return ok ? cli::kPass : cli::kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reciprocity symbols and laws on P^1 over Z, and the arithmetic central extension calculus"};
    app.require_subcommand(1);
    cli::RunConfig cfg;
    cfg.numeric.precision_bits = cli::default_precision_bits(cfg.numeric.precision_bits);
    Inputs in;

    app.add_flag("--json", cfg.json, "Emit a single structured JSON document");
    app.add_option("--bits", cfg.numeric.precision_bits, "Real precision in bits (default from ARECIP_PRECISION_BITS)");
    app.add_option("--tolerance", cfg.numeric.tolerance, "Archimedean tolerance for the horizontal law");
    app.add_option("--padic-start", cfg.arith.padic_start, "Initial p-adic precision");
    app.add_option("--padic-cap", cfg.arith.padic_cap, "Maximum p-adic precision");
    app.add_option("--split-seed", cfg.arith.seed, "Seed for equal-degree splitting");
    app.add_option("--factor-budget", cfg.arith.factor_budget, "Pollard-Brent iteration budget");

    auto* symbol = app.add_subcommand("symbol", "Symbol of (f, g) at a point of a curve or at an embedding");
    symbol->add_option("--curve", in.curve, "Curve: V:p, H:<polynomial> or INF")->required();
    auto* sp = symbol->add_option("--point", in.point, "Closed point p:<polynomial> or p:inf");
    auto* se = symbol->add_option("--embedding", in.embedding, "Complex embedding index of a horizontal curve");
    sp->excludes(se);
    symbol->add_option("--f", in.f, "Factored rational function")->required();
    symbol->add_option("--g", in.g, "Factored rational function")->required();

    auto* verify = app.add_subcommand("verify", "Verify a reciprocity law");
    verify->require_subcommand(1);
    auto* vp = verify->add_subcommand("point", "Sum over curves through a closed point");
    vp->add_option("--point", in.point, "Closed point")->required();
    auto* vv = verify->add_subcommand("vertical", "Sum over points of a vertical fiber");
    vv->add_option("--prime", in.prime, "Prime p")->required();
    auto* vh = verify->add_subcommand("horizontal", "Finite and archimedean sum along a horizontal curve");
    vh->add_option("--curve", in.curve, "Horizontal curve H:<polynomial>")->required();
    for (auto* sub : {vp, vv, vh}) {
        sub->add_option("--f", in.f, "Factored rational function")->required();
        sub->add_option("--g", in.g, "Factored rational function")->required();
    }

    auto* pairing = app.add_subcommand("pairing", "Window commutator pairing against the closed formula");
    pairing->add_option("--f", in.f, "Laurent polynomial in t")->required();
    pairing->add_option("--g", in.g, "Laurent polynomial in t")->required();
    pairing->add_option("--window", in.window, "Window LOW,HIGH of exponents");

    auto* selftest = app.add_subcommand("selftest", "Run the seeded property suites");
    selftest->add_option("--seed", in.selftest_seed, "Suite seed");
    selftest->add_option("--cases", in.cases, "Cases per suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kUsage;
    }

    try {
        cfg.validate();
        if (symbol->parsed()) {
            if (in.point.empty() && !in.embedding)
                throw Error(ErrorKind::InvalidArgument, "symbol needs --point or --embedding");
            return cmd_symbol(cfg, in);
        }
        if (vp->parsed()) return cmd_verify_point(cfg, in);
        if (vv->parsed()) return cmd_verify_vertical(cfg, in);
        if (vh->parsed()) return cmd_verify_horizontal(cfg, in);
        if (pairing->parsed()) return cmd_pairing(cfg, in);
        if (selftest->parsed()) return cmd_selftest(cfg, in);
    } catch (const WindowTooSmall& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "; try --window " << e.min_low() << ","
                  << e.min_high() << "\n";
        return cli::exit_code(e.kind());
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return cli::exit_code(e.kind());
    }
    return cli::kUsage;
}
