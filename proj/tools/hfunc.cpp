#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hfunc/closed_form.hpp"
#include "hfunc/compare.hpp"
#include "hfunc/errors.hpp"
#include "hfunc/integral_solver.hpp"
#include "hfunc/moments.hpp"
#include "hfunc/quadrature.hpp"
#include "hfunc/series_solution.hpp"
#include "hfunc/verify.hpp"

namespace {

void emit_error(const char* code, const std::string& message) {
    std::string esc;
    esc.reserve(message.size());
    for (char c : message) {
        if (c == '"' || c == '\\') esc += '\\';
        if (c == '\n') {
            esc += "\\n";
            continue;
        }
        esc += c;
    }
    std::fprintf(stderr, "{\"error\":\"%s\",\"message\":\"%s\"}\n", code,
                 esc.c_str());
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const hfunc::domain_error& e) {
        emit_error("domain", e.what());
        return 2;
    } catch (const hfunc::convergence_error& e) {
        emit_error("convergence", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}

// "start:stop:step" (inclusive, snapped to kill accumulation drift) or a
// comma-separated list.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        char extra = 0;
        if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step,
                        &extra) != 3 ||
            !(step > 0) || stop < start)
            throw hfunc::domain_error("grid spec must be start:stop:step "
                                      "with positive step: " + spec);
        for (int i = 0;; ++i) {
            const double v =
                std::round((start + i * step) * 1e10) / 1e10;
            if (v > stop + step * 1e-9) break;
            out.push_back(v);
        }
    } else {
        std::istringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                out.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw hfunc::domain_error("bad grid value: " + tok);
            }
        }
    }
    if (out.empty())
        throw hfunc::domain_error("empty grid spec: " + spec);
    return out;
}

hfunc::MethodSelection parse_methods(const std::string& spec) {
    if (spec == "all") return {true, true, true};
    hfunc::MethodSelection m{false, false, false};
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "closed")
            m.closed = true;
        else if (tok == "series")
            m.series = true;
        else if (tok == "oracle")
            m.oracle = true;
        else
            throw hfunc::domain_error("unknown method: " + tok);
    }
    if (!m.closed && !m.series && !m.oracle)
        throw hfunc::domain_error("no methods selected");
    return m;
}

struct Options {
    hfunc::RunConfig config;
    double mu = 0;
    double omega = 0;
    std::string mus = "0:1:0.05";
    std::string omegas = "0.1:1:0.1";
    std::string method = "all";
    std::string format = "table";
    int precision = 5;
    bool with_chr = false;
    std::string output;
    int n_moments = 5;
};

void add_config_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--quad-order", o.config.quad_order,
                    "Gauss-Legendre order for the solver grid");
    cmd->add_option("--tol", o.config.fp_tol,
                    "fixed-point convergence tolerance");
    cmd->add_option("--max-iter", o.config.max_iter,
                    "fixed-point sweep limit");
    cmd->add_option("--series-n", o.config.series_n,
                    "series truncation N (coefficients through A_2N)");
}

hfunc::SolveOptions solve_options(const hfunc::RunConfig& c) {
    hfunc::SolveOptions s;
    s.tol = c.fp_tol;
    s.max_iter = c.max_iter;
    s.exec = c.exec;
    return s;
}

class OutputSink {
  public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw hfunc::domain_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

int cmd_eval(const Options& o, bool precision_given) {
    o.config.validate();
    const hfunc::EvalPoint point(o.mu, o.omega);
    auto print = [&](const char* label, double v, bool lone) {
        char buf[64];
        if (precision_given)
            std::snprintf(buf, sizeof buf, "%.*f", o.precision, v);
        else
            std::snprintf(buf, sizeof buf, "%#.6g", v);
        if (lone)
            std::printf("%s\n", buf);
        else
            std::printf("%-8s %s\n", label, buf);
    };
    const bool all = o.method == "all";
    if (o.method == "closed" || all)
        print("closed", hfunc::h_closed(point, o.config.hyp_tol), !all);
    if (o.method == "series" || all) {
        const hfunc::CoefficientSet cs =
            hfunc::compute_coefficients(o.omega, 2 * o.config.series_n);
        print("series", hfunc::h_series(point, cs, o.config.hyp_tol), !all);
    }
    if (o.method == "oracle" || all) {
        const hfunc::HGrid grid = hfunc::solve_grid(
            o.omega, hfunc::gauss_legendre_unit(o.config.quad_order),
            solve_options(o.config));
        print("oracle", hfunc::h_oracle(o.mu, grid), !all);
    }
    return 0;
}

int cmd_table(const Options& o) {
    const auto rows = hfunc::comparison_table(
        parse_grid(o.mus), parse_grid(o.omegas), parse_methods(o.method),
        o.config, o.with_chr);
    OutputSink sink(o.output);
    if (o.format == "csv")
        hfunc::write_csv(sink.stream(), rows, o.precision);
    else if (o.format == "json")
        hfunc::write_json(sink.stream(), rows, o.precision);
    else
        hfunc::write_table(sink.stream(), rows, o.precision);
    return 0;
}

int cmd_compare(const Options& o) {
    OutputSink sink(o.output);
    std::ostream& out = sink.stream();
    const auto stats = hfunc::discrepancy_stats(o.config);
    out << "closed form vs integral-equation oracle, mu = 0.05(0.05)1.00\n";
    out << " omega   mean rel    max rel   at mu\n";
    char buf[128];
    for (const auto& st : stats) {
        std::snprintf(buf, sizeof buf, "  %4.1f   %8.4f%%  %8.4f%%   %4.2f\n",
                      st.omega, 100 * st.mean_rel, 100 * st.max_rel,
                      st.worst_mu);
        out << buf;
    }
    out << "\nmoment discrepancies (closed forms vs recurrence vs oracle "
           "quadrature)\n";
    out << " omega   a1 closed     a1 quad   a2 printed    a2 recur     "
           "a2 quad\n";
    const hfunc::QuadratureRule rule =
        hfunc::gauss_legendre_unit(o.config.quad_order);
    for (int k = 1; k <= 10; ++k) {
        const double om = 0.1 * k;
        const hfunc::HGrid grid =
            hfunc::solve_grid(om, rule, solve_options(o.config));
        std::snprintf(buf, sizeof buf,
                      "  %4.1f   %9.6f   %9.6f   %9.6f   %9.6f   %9.6f\n", om,
                      hfunc::alpha_closed(1, om),
                      hfunc::alpha_quadrature(1, grid),
                      hfunc::alpha_closed(2, om),
                      hfunc::alpha_recurrence(om, 2).alphas[2],
                      hfunc::alpha_quadrature(2, grid));
        out << buf;
    }
    return 0;
}

int cmd_moments(const Options& o) {
    o.config.validate();
    if (o.n_moments < 0 || o.n_moments > 64)
        throw hfunc::domain_error("--n must lie in [0,64]");
    OutputSink sink(o.output);
    std::ostream& out = sink.stream();
    const hfunc::MomentVector rec =
        hfunc::alpha_recurrence(o.omega, o.n_moments);
    const hfunc::HGrid grid = hfunc::solve_grid(
        o.omega, hfunc::gauss_legendre_unit(o.config.quad_order),
        solve_options(o.config));
    out << "moments of H at omega = " << o.omega
        << " (closed forms exist for n <= 2; the n = 2 printed form is "
           "informational)\n";
    out << "  n   recurrence      closed        quadrature\n";
    char buf[128];
    for (int n = 0; n <= o.n_moments; ++n) {
        std::string closed = "      -     ";
        if (n <= 2) {
            std::snprintf(buf, sizeof buf, "%12.9f",
                          hfunc::alpha_closed(n, o.omega));
            closed = buf;
        }
        std::snprintf(buf, sizeof buf, "%3d  %12.9f  %s  %12.9f\n", n,
                      rec.alphas[n], closed.c_str(),
                      hfunc::alpha_quadrature(n, grid));
        out << buf;
    }
    return 0;
}

int cmd_coeffs(const Options& o) {
    o.config.validate();
    const hfunc::CoefficientSet cs =
        hfunc::compute_coefficients(o.omega, 2 * o.config.series_n);
    OutputSink sink(o.output);
    std::ostream& out = sink.stream();
    out << "even series coefficients at omega = " << o.omega
        << " (odd ones vanish identically)\n";
    char buf[96];
    for (std::size_t i = 0; i < cs.a_even.size(); ++i) {
        std::snprintf(buf, sizeof buf, "  A_%-2zu = %+.15e\n", 2 * i,
                      cs.a_even[i]);
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "  order-matching residual: %.3e\n",
                  cs.matching_residual);
    out << buf;
    return 0;
}

int cmd_verify(const Options& o) {
    std::ostringstream diag;
    const auto results = hfunc::run_verification(o.config, &diag);
    int failed = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        std::printf("%s  %-34s value=%.3e  bound=%.3e%s%s%s\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.value,
                    r.bound, r.detail.empty() ? "" : "  (",
                    r.detail.c_str(), r.detail.empty() ? "" : ")");
    }
    std::printf("%zu checks, %d failed\n", results.size(), failed);
    std::fputs(diag.str().c_str(), stdout);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chandrasekhar H-function for isotropic scattering: "
                 "closed-form, series, and integral-equation methods"};
    app.require_subcommand(1);
    Options o;

    CLI::App* eval = app.add_subcommand(
        "eval", "evaluate H(mu, omega) by one or all methods");
    eval->add_option("--mu", o.mu, "direction cosine")->required();
    eval->add_option("--omega", o.omega, "single-scattering albedo")
        ->required();
    eval->add_option("--method", o.method, "closed|series|oracle|all")
        ->check(CLI::IsMember({"closed", "series", "oracle", "all"}));
    eval->add_option("--precision", o.precision,
                     "fixed decimal places (default: 6 significant digits)");
    add_config_flags(eval, o);

    CLI::App* table = app.add_subcommand(
        "table", "method-comparison table over a mu x omega grid");
    table->add_option("--mus", o.mus, "mu grid, start:stop:step or list");
    table->add_option("--omegas", o.omegas,
                      "omega grid, start:stop:step or list");
    table->add_option("--methods,--method", o.method,
                      "comma list of closed,series,oracle or all");
    table->add_option("--format", o.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    table->add_option("--precision", o.precision, "printed decimal places");
    table->add_flag("--chr", o.with_chr,
                    "join the bundled tabulated reference column");
    table->add_option("--output", o.output, "write to a file instead of "
                                            "stdout");
    add_config_flags(table, o);

    CLI::App* compare = app.add_subcommand(
        "compare", "per-omega discrepancy statistics between methods");
    compare->add_option("--output", o.output, "write to a file");
    add_config_flags(compare, o);

    CLI::App* moments = app.add_subcommand(
        "moments", "moment table at one omega, all three sources");
    moments->add_option("--omega", o.omega, "single-scattering albedo")
        ->required();
    moments->add_option("--n", o.n_moments, "highest moment order");
    moments->add_option("--output", o.output, "write to a file");
    add_config_flags(moments, o);

    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "even series coefficients A_0..A_2N at one omega");
    coeffs->add_option("--omega", o.omega, "single-scattering albedo")
        ->required();
    coeffs->add_option("--output", o.output, "write to a file");
    add_config_flags(coeffs, o);

    CLI::App* verify = app.add_subcommand(
        "verify", "run every asserted invariant; nonzero exit on failure");
    add_config_flags(verify, o);

    CLI11_PARSE(app, argc, argv);

    return run_guarded([&]() -> int {
        if (eval->parsed())
            return cmd_eval(o, eval->count("--precision") > 0);
        if (table->parsed()) return cmd_table(o);
        if (compare->parsed()) return cmd_compare(o);
        if (moments->parsed()) return cmd_moments(o);
        if (coeffs->parsed()) return cmd_coeffs(o);
        if (verify->parsed()) return cmd_verify(o);
        return 1;
    });
}
