// Command-line surface: compute eigenvalue sequences, run the claim
// verification suites, and execute the sequence-approximation pipeline.
//
// Exit codes: 0 success, 1 verification failure, 2 validation failure,
// 3 quadrature accuracy failure, 4 infeasible configuration.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fockseq/errors.hpp"
#include "fockseq/io.hpp"
#include "fockseq/verify.hpp"

namespace {

using namespace fockseq;

void write_or_print(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

int cmd_gamma(const std::string &symbol_path, std::int64_t max_n, bool closed_form,
              const std::string &out_path, double tol) {
    SymbolSpec spec = load_symbol_file(symbol_path);
    EigenSequence seq;
    if (closed_form) {
        seq.values.resize(static_cast<std::size_t>(max_n) + 1);
        for (std::int64_t n = 0; n <= max_n; ++n) {
            ClosedValue v;
            if (spec.kind_name() == "cosine") {
                v = gamma_closed_cosine(n);
            } else if (spec.kind_name() == "indicator") {
                const auto &ind = std::get<IndicatorSymbol>(spec.node());
                v = gamma_closed_indicator(ind.alpha, ind.beta, n);
            } else if (spec.kind_name() == "exp-complex" &&
                       std::abs(std::get<ExpComplexSymbol>(spec.node()).lambda -
                                exp83_lambda()) < 1e-15) {
                v = gamma_closed_exp83(n);
            } else {
                throw validation_error("kind: no closed form for symbol kind '" +
                                       spec.kind_name() + "'");
            }
            seq.values[static_cast<std::size_t>(n)] = v.value;
        }
        write_or_print(gamma_csv(seq, false), out_path);
        return 0;
    }
    seq = gamma_prefix(spec, max_n);
    write_or_print(gamma_csv(seq, true), out_path);
    for (double e : seq.err)
        if (!(e <= tol)) {
            std::cerr << "gamma: quadrature error estimate " << e
                      << " exceeds tolerance " << tol << "\n";
            return 3;
        }
    return 0;
}

int cmd_verify(const std::string &suite, std::int64_t max_n, const std::string &report) {
    VerifyOptions opt;
    if (suite != "all") {
        opt.kappa = suite == "kappa";
        opt.convoluzation = suite == "convoluzation";
        opt.stirling = suite == "stirling";
        opt.asymptotic = suite == "asymptotic";
        if (!(opt.kappa || opt.convoluzation || opt.stirling || opt.asymptotic))
            throw validation_error("suite: unknown suite '" + suite + "'");
    }
    if (max_n > 0) {
        opt.max_n_kappa = max_n;
        opt.max_n_convoluzation = max_n;
        opt.max_n_stirling = max_n;
        opt.max_n_asymptotic = max_n;
    }
    auto entries = run_verify(opt);
    for (const auto &e : entries)
        std::cout << (e.pass ? "[pass] " : "[FAIL] ") << e.suite << ": " << e.claim
                  << " (bound " << e.bound << ", measured " << e.measured << ")\n";
    if (!report.empty()) write_or_print(verify_report_json(entries), report);
    return verify_all_pass(entries) ? 0 : 1;
}

int cmd_approx(const std::string &target, double omega, std::int64_t check_to,
               const std::string &out_symbol, const std::string &report_path,
               double eps) {
    TargetSequence sigma;
    std::int64_t need =
        static_cast<std::int64_t>((120.0 + 40.0) * (120.0 + 40.0)) + 2;
    if (target.size() > 4 && target.substr(target.size() - 4) == ".csv") {
        sigma = load_target_csv(target);
    } else {
        sigma = named_target(target, need);
    }
    ApproxOptions opt;
    opt.grid.omega = omega;
    opt.check_to = check_to;
    ApproxResult res = approximate_sequence(sigma, opt);
    if (!out_symbol.empty()) save_symbol_file(res.symbol, out_symbol);
    std::string rep = approx_report_json(res.report);
    std::cout << rep;
    if (!report_path.empty()) write_or_print(rep, report_path);
    if (!res.report.feasible) return 4;
    if (eps > 0.0 && !(res.report.total_sup_error_estimate <= eps)) return 4;
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"eigenvalue sequences of radial Toeplitz operators on the Fock space"};
    app.require_subcommand(1);

    auto *g = app.add_subcommand("gamma", "compute an eigenvalue sequence as CSV");
    std::string g_symbol, g_out;
    std::int64_t g_max_n = 100;
    bool g_closed = false;
    double g_tol = 1e-6;
    g->add_option("--symbol", g_symbol, "symbol spec file (JSON)")->required();
    g->add_option("--max-n", g_max_n, "largest index")->check(CLI::NonNegativeNumber);
    g->add_flag("--closed-form", g_closed, "use the closed form for named families");
    g->add_option("--out", g_out, "output CSV path (stdout when omitted)");
    g->add_option("--tol", g_tol, "per-entry error tolerance (exit 3 beyond)");

    auto *v = app.add_subcommand("verify", "run the claim verification suites");
    std::string v_suite = "all", v_report;
    std::int64_t v_max_n = 0;
    v->add_option("--suite", v_suite, "kappa|convoluzation|stirling|asymptotic|all");
    v->add_option("--max-n", v_max_n, "sweep limit override");
    v->add_option("--report", v_report, "write the JSON report here");

    auto *a = app.add_subcommand("approx", "approximate a target sequence by an "
                                           "eigenvalue sequence");
    std::string a_target, a_out_symbol, a_report;
    double a_omega = 8.0, a_eps = 0.0;
    std::int64_t a_check = 5000;
    a->add_option("--target", a_target,
                  "named target (cos-sqrt, exp-i-sqrt, constant, alternating, "
                  "gamma-of:<spec-file>) or CSV path")
        ->required();
    a->add_option("--bandwidth", a_omega, "deconvolution band cutoff (<= 12)");
    a->add_option("--check-to", a_check, "largest index measured");
    a->add_option("--out-symbol", a_out_symbol, "write the synthesized symbol here");
    a->add_option("--report", a_report, "write the JSON report here");
    a->add_option("--eps", a_eps, "exit 4 unless the measured error is <= eps");

    CLI11_PARSE(app, argc, argv);

    try {
        if (g->parsed()) return cmd_gamma(g_symbol, g_max_n, g_closed, g_out, g_tol);
        if (v->parsed()) return cmd_verify(v_suite, v_max_n, v_report);
        if (a->parsed())
            return cmd_approx(a_target, a_omega, a_check, a_out_symbol, a_report, a_eps);
    } catch (const fockseq::validation_error &e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const fockseq::accuracy_error &e) {
        std::cerr << "accuracy error: " << e.what() << "\n";
        return 3;
    } catch (const fockseq::infeasible_error &e) {
        std::cerr << "infeasible configuration: " << e.what() << "\n";
        return 4;
    } catch (const fockseq::growth_error &e) {
        std::cerr << "growth error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
