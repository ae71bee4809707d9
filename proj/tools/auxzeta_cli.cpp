// auxzeta: evaluate R(s) for Re s < 0, R'(-2n), and certify that the trivial
// zeros are simple.
//
// Exit codes: 0 all checks pass, 1 usage or domain error, 2 verification failure.

#include "auxzeta/bounds.hpp"
#include "auxzeta/report.hpp"
#include "auxzeta/siegel.hpp"
#include "auxzeta/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

namespace {

using namespace auxzeta;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int default_workers() {
    if (const char *env = std::getenv("AUX_ZETA_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w >= 1)
                return w;
        } catch (const std::exception &) {
        }
        throw UsageError("AUX_ZETA_WORKERS must be a positive integer");
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

QuadratureConfig config_with(double tol) {
    QuadratureConfig cfg;
    if (tol > 0.0)
        cfg.rel_tol = tol;
    else if (tol != 0.0)
        throw UsageError("--tol must be positive");
    return cfg;
}

void print_kv(const char *key, const std::string &value) { std::printf("%-24s %s\n", key, value.c_str()); }
void print_kv(const char *key, double value) { print_kv(key, format_number(value)); }
void print_kv(const char *key, bool value) { print_kv(key, std::string(value ? "true" : "false")); }

int cmd_eval_r(double sigma, double t, double tol) {
    const RLeftResult r = eval_R_left({sigma, t}, config_with(tol));
    print_kv("sigma", sigma);
    print_kv("t", t);
    print_kv("re", r.value.real());
    print_kv("im", r.value.imag());
    print_kv("abs", std::abs(r.value));
    print_kv("error_estimate", r.error_estimate());
    print_kv("converged", r.integral.converged);
    return r.integral.converged ? kExitOk : kExitVerification;
}

int cmd_derivative(int n, double tol) {
    const QuadratureConfig cfg = config_with(tol);
    const QuadratureResult in = compute_I_n(n, cfg);
    const LogComplex d = rprime_from_I(n, in.value);
    print_kv("n", std::to_string(n));
    print_kv("log_modulus", d.log_modulus);
    print_kv("argument", d.argument);
    print_kv("re_I_n", in.value.real());
    print_kv("im_I_n", in.value.imag());
    print_kv("I_n_error_estimate", in.error_estimate);
    print_kv("converged", in.converged);
    return in.converged && !d.is_zero() ? kExitOk : kExitVerification;
}

int cmd_certify(int n_start, int n_end, double tol, const std::string &json_path, int workers) {
    if (n_start < 1 || n_end < n_start)
        throw UsageError("empty or invalid n range: need 1 <= n-start <= n-end");
    const QuadratureConfig cfg = config_with(tol);
    const LemmaConstants lemma = compute_lemma_constants(cfg);
    const std::vector<SweepRecord> records = sweep_parallel(n_start, n_end, cfg, lemma, workers);
    const std::string doc = dump_json(certify_json(n_start, n_end, records, lemma));
    const bool ok = all_verified(records);

    if (json_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out)
            throw UsageError("cannot open " + json_path + " for writing");
        out << doc;
        int failures = 0;
        for (const SweepRecord &r : records) {
            if (!r.certificate.verified) {
                ++failures;
                std::printf("n=%d FAILED: %s\n", r.n, r.certificate.failure.c_str());
            }
        }
        std::printf("certified %d of %d trivial zeros (n = %d..%d)\n",
                    static_cast<int>(records.size()) - failures, static_cast<int>(records.size()),
                    n_start, n_end);
    }
    return ok ? kExitOk : kExitVerification;
}

int cmd_bounds(int n, double tol) {
    const QuadratureConfig cfg = config_with(tol);
    const BoundReport br = bound_report(n);
    print_kv("n", std::to_string(n));
    print_kv("lemma_applies", br.lemma_applies);
    print_kv("A_lower", br.A_lower);
    print_kv("B_upper", br.B_upper);
    print_kv("C_upper", br.C_upper);
    print_kv("margin_lower", br.margin_lower);

    const LemmaConstants k = compute_lemma_constants(cfg);
    print_kv("constant_A", k.constant_A);
    print_kv("sinh_envelope_constant", k.sinh_constant);
    if (!br.lemma_applies)
        return kExitOk;

    const BoundB b = bound_B_from(n, k.b_gaussian, k.b_first_piece);
    const BoundC c = bound_C_from(n, k.c_integral);
    const EnvelopeReport env = check_weight_envelopes(n);
    print_kv("B_term1", b.term1);
    print_kv("B_term1_cap", b.term1_cap);
    print_kv("B_term2", b.term2);
    print_kv("B_total", b.total);
    print_kv("B_slack", b.slack());
    print_kv("C_bound", c.value);
    print_kv("envelopes_pass", env.passed());

    const bool ok = k.converged && k.a_holds() && k.sinh_holds() && b.holds() && c.holds() &&
                    env.passed() && br.margin_lower > 0.0;
    print_kv("all_lemmas_hold", ok);
    return ok ? kExitOk : kExitVerification;
}

int cmd_table(int n_max, const std::string &format_name, const std::string &out_path, double tol,
              int workers) {
    if (n_max < 1)
        throw UsageError("--n-max must be at least 1");
    const TableFormat format = parse_table_format(format_name);
    const QuadratureConfig cfg = config_with(tol);
    const LemmaConstants lemma = compute_lemma_constants(cfg);
    const std::vector<SweepRecord> records = sweep_parallel(1, n_max, cfg, lemma, workers);

    if (out_path.empty()) {
        write_table(std::cout, records, format);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw UsageError("cannot open " + out_path + " for writing");
        write_table(out, records, format);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Riemann auxiliary function R(s): trivial-zero evaluation and certification"};
    app.require_subcommand(1);

    double sigma = 0.0;
    double t = 0.0;
    double tol = 0.0;
    int n = 0;
    int n_start = 0;
    int n_end = -1;
    int n_max = 0;
    int workers = 0;
    std::string json_path;
    std::string out_path;
    std::string format = "csv";

    auto *eval_r = app.add_subcommand("eval-r", "Evaluate R(s) for Re s < 0");
    eval_r->add_option("--sigma", sigma, "Re s (must be negative)")->required();
    eval_r->add_option("--t", t, "Im s")->required();
    eval_r->add_option("--tol", tol, "relative quadrature tolerance");

    auto *derivative = app.add_subcommand("derivative", "R'(-2n) in log-modulus/argument form");
    derivative->add_option("--n", n, "trivial-zero index")->required();
    derivative->add_option("--tol", tol, "relative quadrature tolerance");

    auto *certify = app.add_subcommand("certify", "Certify Re I_n > 0 over a range of n");
    certify->add_option("--n-start", n_start, "first n")->required();
    certify->add_option("--n-end", n_end, "last n")->required();
    certify->add_option("--tol", tol, "relative quadrature tolerance");
    certify->add_option("--json", json_path, "write the JSON report here instead of stdout");
    certify->add_option("--workers", workers, "worker threads (default: AUX_ZETA_WORKERS)");

    auto *bounds = app.add_subcommand("bounds", "Lemma bounds and constants at one n");
    bounds->add_option("--n", n, "trivial-zero index")->required();
    bounds->add_option("--tol", tol, "relative quadrature tolerance");

    auto *table = app.add_subcommand("table", "Per-n table of I_n, bounds and R'(-2n)");
    table->add_option("--n-max", n_max, "largest n")->required();
    table->add_option("--format", format, "csv, json or text")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    table->add_option("--out", out_path, "output file (default: stdout)");
    table->add_option("--tol", tol, "relative quadrature tolerance");
    table->add_option("--workers", workers, "worker threads (default: AUX_ZETA_WORKERS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const int pool = workers > 0 ? workers : default_workers();
        if (*eval_r)
            return cmd_eval_r(sigma, t, tol);
        if (*derivative)
            return cmd_derivative(n, tol);
        if (*certify)
            return cmd_certify(n_start, n_end, tol, json_path, pool);
        if (*bounds)
            return cmd_bounds(n, tol);
        if (*table)
            return cmd_table(n_max, format, out_path, tol, pool);
    } catch (const UsageError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const DomainError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerification;
    }
    return kExitUsage;
}
