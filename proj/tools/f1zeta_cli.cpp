#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "f1zeta/arith.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/euler.hpp"
#include "f1zeta/numeric.hpp"
#include "f1zeta/poly.hpp"
#include "f1zeta/scheme.hpp"
#include "f1zeta/scheme_spec.hpp"
#include "f1zeta/toric.hpp"
#include "f1zeta/verify.hpp"
#include "f1zeta/zeta.hpp"

using json = nlohmann::json;

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 pole or singular factor, 70 internal invariant failure.

int sign_of(const f1zeta::BigInt& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

std::string sign_text(const f1zeta::BigInt& v) {
    const int s = sign_of(v);
    return s < 0 ? "-" : (s > 0 ? "+" : "0");
}

std::string deg_text(const std::optional<int>& deg) {
    return deg ? std::to_string(*deg) : "-inf";
}

std::string err_text(double err) {
    // Pure rounding noise prints as a stable floor instead of volatile digits.
    if (err < 1e-12) return "< 1e-12";
    return f1zeta::fmt10(err);
}

int cmd_kappa(std::int64_t a, std::int64_t n_max, const std::string& format) {
    if (n_max < 1 || n_max > 1'000'000) {
        std::cerr << "error: n_max must lie in [1, 10^6]\n";
        return 2;
    }
    const auto table = f1zeta::kappa_table(a, n_max);
    if (format == "json") {
        json rows = json::array();
        for (std::int64_t n = 1; n <= n_max; ++n)
            rows.push_back({{"n", n},
                            {"kappa", table[static_cast<std::size_t>(n)].get_str()},
                            {"sign", sign_text(table[static_cast<std::size_t>(n)])}});
        std::cout << json{{"a", a}, {"n_max", n_max}, {"rows", rows}}.dump() << "\n";
        return 0;
    }
    const char sep = (format == "csv") ? ',' : ' ';
    std::cout << "n" << sep << "kappa" << sep << "sign\n";
    for (std::int64_t n = 1; n <= n_max; ++n)
        std::cout << n << sep << table[static_cast<std::size_t>(n)].get_str() << sep
                  << sign_text(table[static_cast<std::size_t>(n)]) << "\n";
    return 0;
}

int cmd_counting(const std::string& spec, const std::string& format) {
    const f1zeta::SchemePoints x = f1zeta::parse_scheme_spec(spec);
    const f1zeta::IntPolynomial n = f1zeta::counting_function(x);
    const f1zeta::BigInt chi = f1zeta::euler_characteristic(x);
    if (format == "json") {
        json doc{{"scheme", spec}, {"N", n.to_string()}, {"chi_abs", chi.get_str()}};
        if (n.degree())
            doc["deg"] = *n.degree();
        else
            doc["deg"] = nullptr;
        std::cout << doc.dump() << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "field,value\nscheme," << spec << "\nN," << n.to_string() << "\nchi_abs,"
                  << chi.get_str() << "\ndeg," << deg_text(n.degree()) << "\n";
        return 0;
    }
    std::cout << "scheme = " << spec << "\n";
    std::cout << "N(t) = " << n.to_string() << "\n";
    std::cout << "chi_abs = " << chi.get_str() << "\n";
    std::cout << "deg = " << deg_text(n.degree()) << "\n";
    return 0;
}

int cmd_zeta(const std::string& spec, const std::string& s_text, const std::string& format) {
    const f1zeta::SchemePoints x = f1zeta::parse_scheme_spec(spec);
    const f1zeta::ZetaMultiset via_tensor = f1zeta::absolute_zeta(x);
    const f1zeta::ZetaMultiset via_poly = f1zeta::zeta_from_counting(f1zeta::counting_function(x));
    const bool agree = via_tensor == via_poly;

    if (!s_text.empty()) {
        const std::complex<double> s = f1zeta::parse_complex(s_text);
        const std::complex<double> value = f1zeta::evaluate(via_poly, s);
        if (format == "json") {
            std::cout << json{{"scheme", spec},
                              {"s", {{"re", s.real()}, {"im", s.imag()}}},
                              {"value", {{"re", value.real()}, {"im", value.imag()}}},
                              {"agreement", agree}}
                             .dump()
                      << "\n";
            return 0;
        }
        if (format == "csv") {
            std::cout << "field,value\nscheme," << spec << "\ns," << f1zeta::fmt10(s) << "\nvalue,"
                      << f1zeta::fmt10(value) << "\nagreement," << (agree ? "ok" : "MISMATCH") << "\n";
            return agree ? 0 : 70;
        }
        std::cout << "scheme = " << spec << "\n";
        std::cout << "zeta(" << f1zeta::fmt10(s) << ") = " << f1zeta::fmt10(value) << "\n";
        std::cout << "agreement = " << (agree ? "ok" : "MISMATCH") << "\n";
        return agree ? 0 : 70;
    }

    if (format == "json") {
        json factors = json::array();
        for (const auto& [loc, mult] : via_poly.entries())
            factors.push_back({{"re", f1zeta::to_string(loc.re)},
                               {"im", f1zeta::to_string(loc.im)},
                               {"mult", mult.get_str()}});
        std::cout << json{{"scheme", spec}, {"factors", factors}, {"agreement", agree}}.dump() << "\n";
        return agree ? 0 : 70;
    }
    if (format == "csv") {
        std::cout << "re,im,mult\n";
        for (const auto& [loc, mult] : via_poly.entries())
            std::cout << f1zeta::to_string(loc.re) << ',' << f1zeta::to_string(loc.im) << ','
                      << mult.get_str() << "\n";
        return agree ? 0 : 70;
    }
    std::cout << "scheme = " << spec << "\n";
    std::cout << "zeta = " << f1zeta::to_string(via_poly) << "\n";
    std::cout << "agreement = " << (agree ? "ok" : "MISMATCH") << "\n";
    return agree ? 0 : 70;
}

int cmd_euler(const std::string& spec, const std::string& s_text, int truncate, double tol,
              const std::string& trace_path, const std::string& format) {
    const f1zeta::SchemePoints x = f1zeta::parse_scheme_spec(spec);
    const std::complex<double> s = f1zeta::parse_complex(s_text);
    if (s == 0.0) {
        std::cerr << "error: s must be nonzero\n";
        return 2;
    }
    f1zeta::EulerTraceOptions options;
    options.tol = tol;
    const f1zeta::EulerTrace trace = f1zeta::euler_trace(x, s, truncate, options);
    const std::complex<double> final = trace.partials.back();
    const double abs_err = trace.target_valid ? std::abs(final - trace.target)
                                              : std::numeric_limits<double>::quiet_NaN();

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) {
            std::cerr << "error: cannot write trace file '" << trace_path << "'\n";
            return 2;
        }
        f1zeta::write_trace_csv(out, trace);
    }

    if (format == "json") {
        json doc{{"scheme", spec},
                 {"s", {{"re", s.real()}, {"im", s.imag()}}},
                 {"truncation", trace.truncation},
                 {"verdict", f1zeta::to_string(trace.verdict)},
                 {"tol", trace.tol},
                 {"final_partial", {{"re", final.real()}, {"im", final.imag()}}},
                 {"tail_sum", trace.tail_sum}};
        if (trace.target_valid) {
            doc["closed_form"] = {{"re", trace.target.real()}, {"im", trace.target.imag()}};
            doc["abs_error"] = abs_err;
        } else {
            doc["closed_form"] = nullptr;
        }
        std::cout << doc.dump() << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "field,value\nscheme," << spec << "\ns," << f1zeta::fmt10(s) << "\ntruncation,"
                  << trace.truncation << "\nverdict," << f1zeta::to_string(trace.verdict) << "\ntol,"
                  << f1zeta::fmt10(trace.tol) << "\nfinal_partial," << f1zeta::fmt10(final)
                  << "\nclosed_form," << (trace.target_valid ? f1zeta::fmt10(trace.target) : "pole")
                  << "\nabs_error," << (trace.target_valid ? err_text(abs_err) : "n/a") << "\n";
        return 0;
    }
    std::cout << "scheme = " << spec << "\n";
    std::cout << "s = " << f1zeta::fmt10(s) << "\n";
    std::cout << "truncation = " << trace.truncation << "\n";
    if (trace.verdict == f1zeta::Verdict::converged)
        std::cout << "verdict = converged (tol " << f1zeta::fmt10(trace.tol) << ")\n";
    else
        std::cout << "verdict = " << f1zeta::to_string(trace.verdict) << "\n";
    std::cout << "final_partial = " << f1zeta::fmt10(final) << "\n";
    std::cout << "closed_form = " << (trace.target_valid ? f1zeta::fmt10(trace.target) : "pole") << "\n";
    std::cout << "abs_error = " << (trace.target_valid ? err_text(abs_err) : "n/a") << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    const f1zeta::SuiteResult result = f1zeta::run_suite(suite, seed);
    if (result.pass()) {
        std::cout << "suite " << result.suite << ": pass (" << result.checks << " checks)\n";
        return 0;
    }
    std::cout << "suite " << result.suite << ": FAIL (" << result.failures.size() << " of "
              << result.checks << " checks)\n";
    for (const auto& f : result.failures) std::cout << "  " << f << "\n";
    return 1;
}

int cmd_fan_info(const std::string& path, bool strict, const std::string& format) {
    const f1zeta::Fan fan = f1zeta::load_fan_file(path);
    const auto census = f1zeta::dimension_census(fan);
    const f1zeta::IntPolynomial n = f1zeta::counting_function_fan(fan);
    const f1zeta::SchemePoints x = f1zeta::fan_to_scheme_points(fan);
    const f1zeta::BigInt chi = f1zeta::euler_characteristic(x);

    f1zeta::FanAxiomReport axiom{f1zeta::FanAxiomStatus::unverified, ""};
    if (strict) {
        axiom = f1zeta::verify_fan_axiom(fan);
        if (axiom.status != f1zeta::FanAxiomStatus::verified) {
            std::cerr << "error: strict fan verification "
                      << (axiom.status == f1zeta::FanAxiomStatus::violated ? "failed" : "unavailable")
                      << ": " << axiom.detail << "\n";
            return 2;
        }
    }

    if (format == "json") {
        json doc{{"fan", json::parse(f1zeta::fan_to_json(fan))},
                 {"path", path},
                 {"census", census},
                 {"N", n.to_string()},
                 {"chi_abs", chi.get_str()}};
        if (n.degree())
            doc["deg"] = *n.degree();
        else
            doc["deg"] = nullptr;
        if (strict) doc["fan_axiom"] = "verified";
        std::cout << doc.dump() << "\n";
        return 0;
    }
    if (format == "csv") {
        std::cout << "field,value\nfan," << path << "\nambient_rank," << fan.ambient_rank << "\nrays,"
                  << fan.rays.size() << "\ncones," << fan.cones.size() << "\ncensus,";
        for (std::size_t k = 0; k < census.size(); ++k) std::cout << (k ? " " : "") << census[k];
        std::cout << "\nN," << n.to_string() << "\nchi_abs," << chi.get_str() << "\ndeg,"
                  << deg_text(n.degree()) << "\n";
        if (strict) std::cout << "fan_axiom,verified\n";
        return 0;
    }
    std::cout << "fan = " << path << "\n";
    std::cout << "ambient_rank = " << fan.ambient_rank << "\n";
    std::cout << "rays = " << fan.rays.size() << "\n";
    std::cout << "cones = " << fan.cones.size() << "\n";
    std::cout << "census = [";
    for (std::size_t k = 0; k < census.size(); ++k) std::cout << (k ? ", " : "") << census[k];
    std::cout << "]\n";
    std::cout << "N(t) = " << n.to_string() << "\n";
    std::cout << "chi_abs = " << chi.get_str() << "\n";
    std::cout << "deg = " << deg_text(n.degree()) << "\n";
    if (strict) std::cout << "fan_axiom = verified\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting polynomials, absolute zeta functions and truncated absolute Euler "
                 "products for finite rank-multiset schemes"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand too

    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));

    auto* kappa_cmd = app.add_subcommand("kappa", "Tabulate kappa_a(n) with signs");
    std::int64_t kappa_a = 0, kappa_n = 10;
    kappa_cmd->add_option("-a,--a", kappa_a, "Base parameter a")->required();
    kappa_cmd->add_option("-n,--n-max", kappa_n, "Largest index n")->required();

    auto* counting_cmd = app.add_subcommand("counting", "Counting polynomial N(t), chi_abs and degree");
    std::string counting_spec;
    counting_cmd->add_option("spec", counting_spec, "affine:r | torus:r | p1 | fan:<path> | ranks:[...]")
        ->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "Factored zeta function, or its value at s");
    std::string zeta_spec, zeta_s;
    zeta_cmd->add_option("spec", zeta_spec, "Scheme spec")->required();
    zeta_cmd->add_option("--s", zeta_s, "Evaluate at s (RE or RE,IM) instead of printing factors");

    auto* euler_cmd = app.add_subcommand("euler", "Truncated absolute Euler product at s");
    std::string euler_spec, euler_s, euler_trace_path;
    int euler_truncate = 150;
    double euler_tol = 1e-8;
    euler_cmd->add_option("spec", euler_spec, "Scheme spec")->required();
    euler_cmd->add_option("--s", euler_s, "Evaluation point (RE or RE,IM)")->required();
    euler_cmd->add_option("--truncate", euler_truncate, "Number of factors (default 150)");
    euler_cmd->add_option("--tol", euler_tol, "Relative convergence tolerance (default 1e-8)");
    euler_cmd->add_option("--trace", euler_trace_path, "Write the per-factor CSV trace to this path");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string verify_suite;
    std::uint64_t verify_seed = 0;
    verify_cmd->add_option("suite", verify_suite, "table1 | moebius | lyndon | tensor | points | limit")
        ->required()
        ->check(CLI::IsMember(f1zeta::suite_names()));
    verify_cmd->add_option("--seed", verify_seed, "Seed for randomized checks (default 0)");

    auto* fan_cmd = app.add_subcommand("fan-info", "Parse a fan file and describe its scheme");
    std::string fan_path;
    bool fan_strict = false;
    fan_cmd->add_option("path", fan_path, "Fan JSON file")->required();
    fan_cmd->add_flag("--strict", fan_strict, "Exactly verify the fan axiom (ambient rank <= 2)");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(kappa_cmd)) return cmd_kappa(kappa_a, kappa_n, format);
        if (app.got_subcommand(counting_cmd)) return cmd_counting(counting_spec, format);
        if (app.got_subcommand(zeta_cmd)) return cmd_zeta(zeta_spec, zeta_s, format);
        if (app.got_subcommand(euler_cmd))
            return cmd_euler(euler_spec, euler_s, euler_truncate, euler_tol, euler_trace_path, format);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_suite, verify_seed);
        if (app.got_subcommand(fan_cmd)) return cmd_fan_info(fan_path, fan_strict, format);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const f1zeta::pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
