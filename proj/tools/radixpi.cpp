// radixpi: nested-radical pi computation, golden-ratio identity checks, and
// rule-and-compass construction simulation. See README.md for the command
// reference; exit codes are 0 ok, 1 verification failure, 2 unknown formula,
// 3 digits over cap, 4 I/O failure.

#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radixpi/catalog.hpp"
#include "radixpi/engine.hpp"
#include "radixpi/geometry.hpp"
#include "radixpi/refpi.hpp"

using nlohmann::json;
using namespace radixpi;

namespace {

enum class Format { plain, csv, jsonl };

Format parse_format(const std::string& f) {
    if (f == "plain") return Format::plain;
    if (f == "csv") return Format::csv;
    if (f == "json-lines") return Format::jsonl;
    throw CLI::ValidationError("--format", "expected plain, csv or json-lines");
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

long digit_cap_from_env() {
    const char* env = std::getenv("RADIXPI_MAX_DIGITS");
    if (env == nullptr) return engine::kDefaultDigitCap;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) return engine::kDefaultDigitCap;
    return v;
}

int cmd_compute(const std::string& formula, long digits, long cap, Format format) {
    const FormulaSpec& spec = catalog::get_formula(formula);
    double t0 = omp_get_wtime();
    engine::ComputeResult res = engine::compute_pi(spec, digits, cap);
    double ms = (omp_get_wtime() - t0) * 1000.0;
    switch (format) {
        case Format::plain:
            std::cout << res.digits << "\n";
            std::cout << "iterations: " << res.iterations << "\n";
            std::cout << "precision-bits: " << res.precision_bits << "\n";
            std::cout << "wall-ms: " << ms << "\n";
            break;
        case Format::csv:
            std::cout << "digits,iterations,precision_bits\n";
            std::cout << res.digits << "," << res.iterations << "," << res.precision_bits << "\n";
            break;
        case Format::jsonl: {
            json j{{"digits", res.digits},
                   {"iterations", res.iterations},
                   {"precision_bits", res.precision_bits}};
            std::cout << j.dump() << "\n";
            break;
        }
    }
    return 0;
}

int cmd_converge(const std::string& formula, long k_max, long precision, Format format) {
    const FormulaSpec& spec = catalog::get_formula(formula);
    RealContext ctx(precision);
    auto rows = engine::convergence_table(spec, k_max, ctx);
    bool with_limit = (spec.id == "eq17");
    Real mu = spec.mu_real(ctx);

    auto estimate_str = [](const ConvergenceRecord& r) { return r.estimate.to_fixed(25); };
    auto error_str = [](const ConvergenceRecord& r) { return r.abs_error.to_sci(12); };
    auto ratio_str = [](const ConvergenceRecord& r) {
        return r.error_ratio ? r.error_ratio->to_fixed(10) : std::string();
    };

    if (format == Format::csv || format == Format::plain) {
        std::string header = "k,roots,estimate,abs_error,error_ratio";
        if (with_limit) header += ",limit";
        std::cout << header << "\n";
        for (const auto& r : rows) {
            std::cout << r.k << "," << (r.k + spec.root_offset) << "," << estimate_str(r) << ","
                      << error_str(r) << "," << ratio_str(r);
            if (with_limit) std::cout << "," << (r.estimate / mu).to_fixed(15);
            std::cout << "\n";
        }
    } else {
        for (const auto& r : rows) {
            json j{{"k", r.k},
                   {"roots", r.k + spec.root_offset},
                   {"estimate", estimate_str(r)},
                   {"abs_error", error_str(r)}};
            j["error_ratio"] = r.error_ratio ? json(ratio_str(r)) : json(nullptr);
            if (with_limit) j["limit"] = (r.estimate / mu).to_fixed(15);
            std::cout << j.dump() << "\n";
        }
    }
    return 0;
}

int report_identities(const std::vector<catalog::IdentityResult>& results, Format format) {
    size_t failed = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        switch (format) {
            case Format::plain:
                std::cout << "[" << r.suite << "] " << r.id << ": " << r.statement << " ... "
                          << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
                break;
            case Format::csv:
                std::cout << r.suite << "," << r.id << "," << csv_escape(r.statement) << ","
                          << (r.pass ? "yes" : "no") << "," << csv_escape(r.detail) << "\n";
                break;
            case Format::jsonl: {
                json j{{"suite", r.suite},
                       {"id", r.id},
                       {"statement", r.statement},
                       {"pass", r.pass},
                       {"detail", r.detail}};
                std::cout << j.dump() << "\n";
                break;
            }
        }
    }
    if (format == Format::plain) {
        std::cout << "verified " << results.size() << " identities: " << (results.size() - failed)
                  << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

int cmd_verify(long precision, bool self_test_negative, Format format) {
    RealContext ctx(precision);
    std::vector<catalog::IdentityResult> all = catalog::verify_exact_identities(self_test_negative);
    for (auto& r : catalog::verify_numeric_identities(ctx)) all.push_back(std::move(r));
    for (auto& r : geom::verify_figure2_relations(ctx)) all.push_back(std::move(r));
    if (format == Format::csv) std::cout << "suite,id,statement,pass,detail\n";
    return report_identities(all, format);
}

int cmd_series(const std::string& which, long terms, long digits, long precision, Format format) {
    RealContext ctx(precision);
    Real sum = (which == "chan") ? catalog::series_chan(terms, ctx)
                                 : catalog::series_cloitre(terms, ctx);
    Real target = (which == "chan") ? ctx.pi() : ctx.pi().sqr() / 50ul;
    std::string target_name = (which == "chan") ? "pi" : "pi^2/50";
    Real deviation = (sum - target).abs();
    bool matches = deviation < Real::from_string("1e-10", ctx.precision_bits());
    size_t nd = static_cast<size_t>(digits);

    switch (format) {
        case Format::plain:
            std::cout << "series: " << which << "\n";
            std::cout << "terms: " << terms << "\n";
            std::cout << "sum: " << sum.to_fixed(nd) << "\n";
            std::cout << "target (" << target_name << "): " << target.to_fixed(nd) << "\n";
            std::cout << "abs-deviation: " << deviation.to_sci(nd) << "\n";
            std::cout << "matches-target: " << (matches ? "yes" : "no") << "\n";
            if (!matches) {
                std::cout << "apparent-limit: " << sum.to_fixed(nd) << "\n";
            }
            break;
        case Format::csv:
            std::cout << "series,terms,sum,target,abs_deviation,matches_target\n";
            std::cout << which << "," << terms << "," << sum.to_fixed(nd) << ","
                      << target.to_fixed(nd) << "," << deviation.to_sci(nd) << ","
                      << (matches ? "yes" : "no") << "\n";
            break;
        case Format::jsonl: {
            json j{{"series", which},          {"terms", terms},
                   {"sum", sum.to_fixed(nd)},  {"target", target.to_fixed(nd)},
                   {"target_name", target_name}, {"abs_deviation", deviation.to_sci(nd)},
                   {"matches_target", matches}};
            if (!matches) j["apparent_limit"] = sum.to_fixed(nd);
            std::cout << j.dump() << "\n";
            break;
        }
    }
    return 0;
}

int cmd_construct(const std::string& which, long precision, const std::string& emit,
                  Format format) {
    RealContext ctx(precision);
    geom::ConstructionTrace trace =
        (which == "dixon") ? geom::run_dixon(ctx) : geom::run_pi_rectangle(ctx);

    Real area(8);
    Real err(8);
    for (const auto& [name, value] : trace.finals()) {
        if (name == "area") area = value;
        if (name == "area_error_vs_pi") err = value;
    }
    bool claim = err < Real::from_string("5e-5", ctx.precision_bits());

    switch (format) {
        case Format::plain:
            std::cout << trace.to_text();
            std::cout << "area: " << area.to_fixed(20) << "\n";
            std::cout << "abs-error-vs-pi: " << err.to_sci(12) << "\n";
            std::cout << "claim-err-lt-5e-5: " << (claim ? "yes" : "no") << "\n";
            break;
        case Format::csv:
            std::cout << "key,value\n";
            for (const auto& [name, value] : trace.finals()) {
                std::cout << name << "," << value.to_fixed(20) << "\n";
            }
            std::cout << "claim-err-lt-5e-5," << (claim ? "yes" : "no") << "\n";
            break;
        case Format::jsonl: {
            for (const auto& s : trace.steps()) {
                json j{{"step", s.index}, {"op", s.op}, {"inputs", s.inputs},
                       {"outputs", s.outputs}};
                if (!s.coords.empty()) j["coords"] = s.coords;
                if (!s.warning.empty()) j["warning"] = s.warning;
                std::cout << j.dump() << "\n";
            }
            json j{{"construction", which},
                   {"area", area.to_fixed(20)},
                   {"abs_error_vs_pi", err.to_sci(12)},
                   {"claim_err_lt_5e_5", claim}};
            std::cout << j.dump() << "\n";
            break;
        }
    }
    if (!emit.empty()) {
        geom::write_svg(trace, emit);
        if (format == Format::plain) std::cout << "diagram: " << emit << "\n";
    }
    return 0;
}

int cmd_list(Format format) {
    if (format == Format::jsonl) {
        for (const auto& spec : catalog::all_formulas()) {
            json j{{"formula", spec.id},      {"mu", spec.mu_text},
                   {"alpha", spec.alpha_text}, {"l1", spec.l1_text},
                   {"root_offset", spec.root_offset}, {"tag", spec.tag}};
            if (spec.l1_sq_exact) j["l1_sq"] = to_string(*spec.l1_sq_exact);
            if (!spec.note.empty()) j["note"] = spec.note;
            std::cout << j.dump() << "\n";
        }
    } else {
        std::cout << catalog::registry_export();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pi from nested golden-ratio radicals: computation, identity "
                 "verification, series cross-checks, constructions"};
    app.require_subcommand(1);

    std::string format_name = "plain";

    auto* compute = app.add_subcommand("compute", "compute pi digits through a formula");
    std::string c_formula;
    long c_digits = 10;
    long c_cap = digit_cap_from_env();
    compute->add_option("--formula", c_formula, "formula id (see `list`)")->required();
    compute->add_option("--digits", c_digits, "significant digits")->required()
        ->check(CLI::Range(1l, engine::kHardDigitLimit));
    compute->add_option("--max-digits", c_cap, "digit cap (default RADIXPI_MAX_DIGITS or 20000)");
    compute->add_option("--format", format_name, "plain|csv|json-lines");

    auto* converge = app.add_subcommand("converge", "per-iteration convergence table");
    std::string v_formula;
    long v_kmax = 20;
    long v_precision = 256;
    converge->add_option("--formula", v_formula, "formula id")->required();
    converge->add_option("--kmax", v_kmax, "last iteration index")->check(CLI::Range(0l, 10000l));
    converge->add_option("--precision", v_precision, "working precision in bits")
        ->check(CLI::Range(8l, 1000000l));
    converge->add_option("--format", format_name, "plain|csv|json-lines");

    auto* verify = app.add_subcommand("verify", "verify the exact, numeric and figure relations");
    long y_precision = 256;
    bool y_negative = false;
    verify->add_option("--precision", y_precision, "working precision in bits (>= 192)")
        ->check(CLI::Range(192l, 1000000l));
    verify->add_flag("--self-test-negative", y_negative,
                     "inject a deliberately false identity (must fail)");
    verify->add_option("--format", format_name, "plain|csv|json-lines");

    auto* series = app.add_subcommand("series", "evaluate a cross-check series as printed");
    std::string s_which;
    long s_terms = 40;
    long s_digits = 30;
    long s_precision = 256;
    series->add_option("which", s_which, "chan or cloitre")->required()
        ->check(CLI::IsMember({"chan", "cloitre"}));
    series->add_option("--terms", s_terms, "number of terms")->check(CLI::Range(1l, 1000000l));
    series->add_option("--digits", s_digits, "printed digits")->check(CLI::Range(1l, 1000l));
    series->add_option("--precision", s_precision, "working precision in bits")
        ->check(CLI::Range(64l, 1000000l));
    series->add_option("--format", format_name, "plain|csv|json-lines");

    auto* construct = app.add_subcommand("construct", "run a rule-and-compass construction");
    std::string t_which;
    long t_precision = 128;
    std::string t_emit;
    construct->add_option("which", t_which, "dixon or pi-rectangle")->required()
        ->check(CLI::IsMember({"dixon", "pi-rectangle"}));
    construct->add_option("--precision", t_precision, "working precision in bits (>= 128)")
        ->check(CLI::Range(128l, 1000000l));
    construct->add_option("--emit", t_emit, "write an SVG diagram to this path");
    construct->add_option("--format", format_name, "plain|csv|json-lines");

    auto* list = app.add_subcommand("list", "export the formula registry");
    list->add_option("--format", format_name, "plain|csv|json-lines");

    CLI11_PARSE(app, argc, argv);

    try {
        Format format = parse_format(format_name);
        if (compute->parsed()) return cmd_compute(c_formula, c_digits, c_cap, format);
        if (converge->parsed()) return cmd_converge(v_formula, v_kmax, v_precision, format);
        if (verify->parsed()) return cmd_verify(y_precision, y_negative, format);
        if (series->parsed()) return cmd_series(s_which, s_terms, s_digits, s_precision, format);
        if (construct->parsed()) return cmd_construct(t_which, t_precision, t_emit, format);
        if (list->parsed()) return cmd_list(format);
    } catch (const catalog::UnknownFormulaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const engine::DigitCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const geom::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 105;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
