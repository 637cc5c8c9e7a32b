// atanpoly: generate arctan polynomials, evaluate derivatives of arctan by
// several routes, and run the identity suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "atanpoly/deriv.hpp"
#include "atanpoly/oracle.hpp"
#include "atanpoly/qseq.hpp"
#include "atanpoly/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace atanpoly;
using ojson = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::string format;  // empty: per-command default
    std::string out;
};

std::string format_or(const GlobalOptions& g, const std::string& fallback) {
    const std::string f = g.format.empty() ? fallback : g.format;
    if (f != "json" && f != "csv" && f != "text") throw UsageError("unknown format '" + f + "'");
    return f;
}

std::vector<std::string> to_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& c : v) out.push_back(c.str());
    return out;
}

void cmd_coeffs(std::ostream& os, unsigned n_max, const std::string& format) {
    if (format == "text") throw UsageError("coeffs supports --format json or csv");
    const QSequence q = gen_recurrence(n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        std::vector<BigInt> coeffs(n + 1);
        for (unsigned i = 0; i <= n; ++i) coeffs[i] = q[n].coeff(i);
        if (format == "json") {
            ojson row;
            row["n"] = n;
            row["coeffs"] = to_strings(coeffs);
            row["alpha_row"] = to_strings(alpha_row(q[n], n));
            os << row.dump() << '\n';
        } else {
            os << n;
            for (const auto& c : coeffs) os << ',' << c.str();
            os << '\n';
        }
    }
}

/// Decimal rendering of a ScaledValue that may lie far outside the double range.
std::string format_scaled(const ScaledValue& v) {
    if (v.sign == 0) return "0";
    const double d = v.to_double();
    if (std::isfinite(d) && d != 0.0) return format_double(d);
    const double log10v = v.log_magnitude / std::log(10.0);
    const double e10 = std::floor(log10v);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.15ge%+.0f", v.sign < 0 ? "-" : "", std::pow(10.0, log10v - e10), e10);
    return buf;
}

void cmd_eval(std::ostream& os, unsigned n, const std::string& x_text, const std::string& route_name, bool full,
              const std::string& format) {
    if (n < 1) throw UsageError("order must be >= 1");
    const auto route = parse_route(route_name);
    if (!route) throw UsageError("unknown route '" + route_name + "'");
    Rational x;
    try {
        x = parse_rational(x_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const double xd = to_double(x);
    if (!std::isfinite(xd)) throw UsageError("evaluation point out of double range");

    const NormalizedDerivative g = eval_normalized(n, x, *route);
    const std::string g_text = *route == Route::ExactRational ? to_string(std::get<Rational>(g.value))
                                                              : format_double(g.as_double());
    std::optional<ScaledValue> scaled;
    if (full) scaled = eval_full(n, xd);

    if (format == "json") {
        ojson out;
        out["n"] = n;
        out["x"] = to_string(x);
        out["route"] = std::string(to_string(*route));
        out["g"] = g_text;
        if (scaled) {
            out["full"] = {{"sign", scaled->sign},
                           {"log_magnitude", format_double(scaled->log_magnitude)},
                           {"mantissa", format_double(scaled->mantissa)},
                           {"binary_exponent", scaled->binary_exponent},
                           {"value", format_scaled(*scaled)}};
        }
        os << out.dump() << '\n';
    } else if (format == "csv") {
        os << "n,x,route,g" << (scaled ? ",full" : "") << '\n';
        os << n << ',' << to_string(x) << ',' << to_string(*route) << ',' << g_text;
        if (scaled) os << ',' << format_scaled(*scaled);
        os << '\n';
    } else {
        os << g_text << '\n';
        if (scaled) os << format_scaled(*scaled) << '\n';
    }
}

int cmd_verify(std::ostream& os, unsigned n_max, const std::string& grid, bool selftest, const std::string& format) {
    if (n_max < 2) throw UsageError("verify needs n_max >= 2");
    VerifyOptions opts;
    opts.n_max = n_max;
    opts.inject_fault = selftest;
    if (!grid.empty()) {
        try {
            opts.grid = parse_grid(grid);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    const auto results = Verifier(opts).run_all();
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (format == "json") {
        ojson out = ojson::array();
        for (const auto& r : results) {
            out.push_back({{"suite", r.name},
                           {"passed", r.passed},
                           {"checks", r.checks},
                           {"worst_error", format_double(r.worst_error)},
                           {"detail", r.detail}});
        }
        os << out.dump() << '\n';
    } else if (format == "csv") {
        os << "suite,passed,checks,worst_error\n";
        for (const auto& r : results) {
            os << r.name << ',' << (r.passed ? "pass" : "FAIL") << ',' << r.checks << ',' << format_double(r.worst_error)
               << '\n';
        }
    } else {
        for (const auto& r : results) {
            os << (r.passed ? "PASS " : "FAIL ") << r.name << "  checks=" << r.checks
               << "  worst_error=" << format_double(r.worst_error);
            if (!r.passed) os << "  first failure: " << r.detail;
            os << '\n';
        }
        os << (all ? "all suites passed" : "verification FAILED") << (selftest ? " (fault injected)" : "") << '\n';
    }
    return all ? exit_ok : exit_failed;
}

std::vector<unsigned> parse_orders(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 1 || v > 100000) throw std::invalid_argument("");
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw UsageError("bad order '" + item + "' in --n (orders must be >= 1)");
        }
    }
    if (out.empty()) throw UsageError("--n needs at least one order");
    return out;
}

/// Rows sorted by (n, x); each row has one line per route.  Timings are
/// wall-clock per route, averaged over `reps` evaluations with the
/// polynomial tables already built.
void cmd_bench(std::ostream& os, const std::string& orders, const std::string& grid_text, unsigned reps) {
    if (reps < 1) throw UsageError("--reps must be >= 1");
    std::vector<unsigned> ns = parse_orders(orders);
    std::sort(ns.begin(), ns.end());
    std::vector<Rational> grid;
    try {
        grid = parse_grid(grid_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::sort(grid.begin(), grid.end());
    const DerivativeEvaluator ev(ns.back());
    using clock = std::chrono::steady_clock;

    os << "n,x,route,value,rel_err,ns_per_eval\n";
    for (const unsigned n : ns) {
        for (const auto& xr : grid) {
            const double x = to_double(xr);
            const Rational exact = exact_g(n, xr);
            for (const Route route : all_routes) {
                double value = 0.0;
                volatile double sink = 0.0;
                const auto start = clock::now();
                if (route == Route::ExactRational) {
                    Rational v;
                    for (unsigned i = 0; i < reps; ++i) v = ev.exact(n, xr);
                    value = to_double(v);
                } else {
                    for (unsigned i = 0; i < reps; ++i) sink = ev.evaluate(n, x, route);
                    value = sink;
                }
                const auto elapsed = std::chrono::duration<double, std::nano>(clock::now() - start).count();
                const double err = route == Route::ExactRational ? 0.0 : relative_error(value, exact);
                os << n << ',' << format_double(x) << ',' << to_string(route) << ',' << format_double(value) << ','
                   << format_double(err) << ',' << format_double(elapsed / reps) << '\n';
            }
        }
    }
}

void cmd_maclaurin(std::ostream& os, unsigned k_max, const std::string& format) {
    std::vector<std::string> coeffs;
    for (unsigned k = 0; k <= k_max; ++k) coeffs.push_back(to_string(maclaurin_coeff(k)));
    if (format == "json") {
        os << ojson(coeffs).dump() << '\n';
    } else {
        for (unsigned k = 0; k <= k_max; ++k) os << k << ',' << coeffs[k] << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arctan polynomials and higher derivatives of arctan"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format: json | csv (eval and verify also accept text)");
    app.add_option("--out", global.out, "Write output to this path instead of stdout");

    unsigned coeffs_n = 0;
    auto* coeffs = app.add_subcommand("coeffs", "Coefficients of q_0 .. q_N and the alpha triangle rows");
    coeffs->add_option("n_max", coeffs_n, "Highest index N")->required();

    unsigned eval_n = 1;
    std::string eval_x;
    std::string eval_route = "exact";
    bool eval_full_flag = false;
    auto* eval = app.add_subcommand("eval", "Evaluate g_n(x) = arctan^(n)(x)/(n-1)!");
    eval->add_option("n", eval_n, "Derivative order (>= 1)")->required();
    eval->add_option("x", eval_x, "Point: integer, decimal or p/q")->required();
    eval->add_option("--route", eval_route, "exact | horner | cheb | trig | pf");
    eval->add_flag("--full", eval_full_flag, "Also print arctan^(n)(x) itself");

    unsigned verify_n = 64;
    std::string verify_grid;
    bool verify_selftest = false;
    auto* verify = app.add_subcommand("verify", "Run every identity suite up to n_max");
    verify->add_option("n_max", verify_n, "Highest order checked (>= 2)");
    verify->add_option("--grid", verify_grid, "Pointwise grid lo:hi:count (replaces the default grids)");
    verify->add_flag("--selftest", verify_selftest, "Corrupt one coefficient; the run must fail");

    std::string bench_n;
    std::string bench_grid = "-2:2:5";
    unsigned bench_reps = 100;
    auto* bench = app.add_subcommand("bench", "Per-route values, errors and timings as CSV");
    bench->add_option("--n", bench_n, "Comma-separated orders")->required();
    bench->add_option("--grid", bench_grid, "Grid lo:hi:count");
    bench->add_option("--reps", bench_reps, "Evaluations per timing");

    unsigned maclaurin_k = 0;
    auto* maclaurin = app.add_subcommand("maclaurin", "Maclaurin coefficients of arctan, indices 0 .. K");
    maclaurin->add_option("k_max", maclaurin_k, "Highest index K")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        std::ofstream file;
        if (!global.out.empty()) {
            file.open(global.out);
            if (!file) throw UsageError("cannot open '" + global.out + "' for writing");
        }
        std::ostream& os = global.out.empty() ? std::cout : file;

        int code = exit_ok;
        if (*coeffs) {
            cmd_coeffs(os, coeffs_n, format_or(global, "json"));
        } else if (*eval) {
            cmd_eval(os, eval_n, eval_x, eval_route, eval_full_flag, format_or(global, "text"));
        } else if (*verify) {
            code = cmd_verify(os, verify_n, verify_grid, verify_selftest, format_or(global, "text"));
        } else if (*bench) {
            if (format_or(global, "csv") != "csv") throw UsageError("bench only emits csv");
            cmd_bench(os, bench_n, bench_grid, bench_reps);
        } else if (*maclaurin) {
            cmd_maclaurin(os, maclaurin_k, format_or(global, "json"));
        }
        os.flush();
        return code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
