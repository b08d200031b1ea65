#include "hfunc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hfunc/closed_form.hpp"
#include "hfunc/errors.hpp"
#include "hfunc/hyp2f1.hpp"
#include "hfunc/identities.hpp"
#include "hfunc/integral_solver.hpp"
#include "hfunc/legendre.hpp"
#include "hfunc/moments.hpp"
#include "hfunc/quadrature.hpp"
#include "hfunc/reference_table.hpp"
#include "hfunc/series_solution.hpp"

namespace hfunc {

namespace {

void add(std::vector<CheckResult>& out, std::string name, double value,
         double bound, std::string detail = "") {
    CheckResult r;
    r.name = std::move(name);
    r.pass = value <= bound;
    r.value = value;
    r.bound = bound;
    r.detail = std::move(detail);
    out.push_back(std::move(r));
}

void diag_line(std::ostream* diag, const std::string& line) {
    if (diag) *diag << "[diag] " << line << '\n';
}

std::string fmt(const char* format, ...)
    __attribute__((format(printf, 1, 2)));

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

std::vector<CheckResult> run_verification(const RunConfig& config,
                                          std::ostream* diag) {
    config.validate();
    std::vector<CheckResult> out;

    const QuadratureRule rule = gauss_legendre_unit(config.quad_order);
    const QuadratureRule rule2d = gauss_legendre_unit(64);
    SolveOptions sopt;
    sopt.tol = config.fp_tol;
    sopt.max_iter = config.max_iter;
    sopt.exec = config.exec;

    // ---- quadrature ----
    {
        double wsum = 0.0;
        for (double w : rule.weights) wsum += w;
        add(out, "quadrature_weight_sum", std::abs(wsum - 1.0), 1e-14);

        double worst = 0.0;
        const int kmax = std::min(19, 2 * config.quad_order - 1);
        for (int k = 0; k <= kmax; ++k) {
            double acc = 0.0;
            for (int i = 0; i < rule.order; ++i)
                acc += rule.weights[i] * std::pow(rule.nodes[i], k);
            worst = std::max(worst, std::abs(acc - 1.0 / (k + 1)));
        }
        add(out, "quadrature_polynomial_exactness", worst, 1e-14,
            fmt("monomials through degree %d", kmax));
    }

    // ---- shifted Legendre polynomials and second-kind functions ----
    {
        double worst = 0.0;
        for (double x : {0.0, 0.25, 0.7, 1.0}) {
            worst = std::max(worst, std::abs(shifted_legendre_p(0, x) - 1.0));
            worst = std::max(
                worst, std::abs(shifted_legendre_p(1, x) - (2 * x - 1)));
            worst = std::max(worst, std::abs(shifted_legendre_p(2, x) -
                                             (6 * x * x - 6 * x + 1)));
            worst = std::max(
                worst, std::abs(shifted_legendre_p(3, x) -
                                (20 * x * x * x - 30 * x * x + 12 * x - 1)));
        }
        add(out, "legendre_p_closed", worst, 1e-13);

        worst = 0.0;
        for (double mu : {0.3, 0.5, 2.0}) {
            const double x = 2 * mu + 1;
            const double lg = 0.5 * std::log((x + 1) / (x - 1));
            worst = std::max(worst,
                             std::abs(shifted_legendre_q(0, mu) - lg));
            worst = std::max(
                worst, std::abs(shifted_legendre_q(1, mu) - (x * lg - 1)));
            worst = std::max(
                worst, std::abs(shifted_legendre_q(2, mu) -
                                (0.5 * (3 * x * x - 1) * lg - 1.5 * x)));
        }
        add(out, "legendre_q_closed", worst, 1e-12,
            "orders 0-2 against logarithmic closed forms");
    }

    // ---- Gauss hypergeometric function ----
    {
        double worst = 0.0;
        for (double z : {-0.5, -1.5, -30.0}) {
            const double f = hyp2f1({1.0, 1.0, 2.0, z}, config.hyp_tol);
            worst = std::max(worst, std::abs(f + std::log1p(-z) / z));
        }
        add(out, "hyp2f1_log_identity", worst, 1e-12,
            "2F1(1,1;2;z) = -ln(1-z)/z across both evaluation regions");

        double f = hyp2f1({0.7, 1.5, 1.5, -2.0}, config.hyp_tol);
        add(out, "hyp2f1_binomial_identity",
            std::abs(f - std::pow(3.0, -0.7)), 1e-12,
            "2F1(a,b;b;z) = (1-z)^-a");

        const Hyp2F1Params p{1.8535533905932737, 0.8535533905932737,
                             1.7071067811865476, -2.0};
        const double dh = 1e-5;
        auto at = [&](double z) {
            return hyp2f1({p.a, p.b, p.c, z}, config.hyp_tol);
        };
        const double d1 = (at(p.z + dh) - at(p.z - dh)) / (2 * dh);
        const double d2 = (at(p.z + dh / 2) - at(p.z - dh / 2)) / dh;
        const double fd = (4 * d2 - d1) / 3;
        add(out, "hyp2f1_derivative_consistency",
            rel(hyp2f1_derivative(p, config.hyp_tol), fd), 1e-6,
            "contiguous-parameter derivative vs finite differences");
    }

    const std::vector<double> mu_grid9 = {0.1, 0.2, 0.3, 0.4, 0.5,
                                          0.6, 0.7, 0.8, 0.9};
    const std::vector<double> om_grid3 = {0.3, 0.6, 0.9};

    // ---- closed form self-consistency ----
    {
        double worst = 0.0;
        for (double om : om_grid3)
            for (double mu : mu_grid9)
                worst = std::max(
                    worst, std::abs(ode_residual(EvalPoint(mu, om), 0.0,
                                                 config.hyp_tol)));
        add(out, "closed_ode_residual", worst, 1e-5,
            "linearizing-ODE residual, relative, 27-point grid");

        worst = 0.0;
        for (double om : om_grid3)
            for (double mu : mu_grid9) {
                const EvalPoint pt(mu, om);
                const double via_z0 =
                    1.0 /
                    (1.0 - 0.5 * om * mu * z0_closed(pt, config.hyp_tol));
                worst = std::max(
                    worst, std::abs(h_closed(pt, config.hyp_tol) - via_z0));
            }
        add(out, "closed_algebraic_link", worst, 1e-12,
            "H vs its reconstruction from Z0");

        worst = 0.0;
        for (double om : {0.3, 0.9})
            worst = std::max(
                worst,
                std::abs(h_closed(EvalPoint(0.0, om), config.hyp_tol) - 1.0));
        add(out, "closed_limit_mu_zero", worst, 0.0, "H(0, omega) = 1 exact");

        worst = 0.0;
        for (double om : {0.25, 0.5, 0.75}) {
            const double lim = 1.0 / std::sqrt(1.0 - om);
            worst = std::max(
                worst, std::abs(h_closed(EvalPoint(1e4, om), config.hyp_tol) -
                                lim));
        }
        add(out, "closed_limit_large_mu", worst, 1e-3,
            "H(1e4, omega) vs 1/sqrt(1-omega)");

        worst = 0.0;
        for (double om : om_grid3)
            for (double mu : {0.2, 0.5, 0.9}) {
                const double h = 1e-5 * mu;
                auto g_at = [&](double m) {
                    return g_value(EvalPoint(m, om), config.hyp_tol).g;
                };
                const double d1 = (g_at(mu + h) - g_at(mu - h)) / (2 * h);
                const double d2 =
                    (g_at(mu + h / 2) - g_at(mu - h / 2)) / h;
                const double fd = (4 * d2 - d1) / 3;
                worst = std::max(
                    worst,
                    rel(g_value(EvalPoint(mu, om), config.hyp_tol).dg_dmu,
                        fd));
            }
        add(out, "closed_g_derivative", worst, 1e-6,
            "analytic dG/dmu vs Richardson finite differences");
    }

    // ---- solver properties ----
    std::vector<HGrid> grids;
    grids.reserve(10);
    for (int k = 1; k <= 10; ++k)
        grids.push_back(solve_grid(0.1 * k, rule, sopt));
    auto grid_at = [&](double om) -> const HGrid& {
        return grids[static_cast<int>(std::lround(om * 10)) - 1];
    };

    {
        double worst = -1.0;
        for (double om : {0.5, 1.0}) {
            const HGrid& g = grid_at(om);
            for (int i = 0; i < g.rule.order; ++i) {
                worst = std::max(worst, 1.0 - g.h_values[i]);
                if (i > 0)
                    worst =
                        std::max(worst, g.h_values[i - 1] - g.h_values[i]);
            }
        }
        add(out, "solver_feasibility", worst, 0.0,
            "node values >= 1 and increasing in mu");

        worst = 0.0;
        double worst_moment = 0.0;
        for (const HGrid& g : grids) {
            worst = std::max(worst, product_form_residual(g));
            worst_moment =
                std::max(worst_moment, std::abs(alpha_quadrature(0, g) -
                                                alpha_closed(0, g.omega)));
        }
        add(out, "solver_product_residual", worst, 1e-9,
            "original product-form residual at the nodes, all omega");
        add(out, "solver_zeroth_moment", worst_moment, 1e-10,
            "quadrature zeroth moment vs (2/omega)(1-sqrt(1-omega))");

        const int refined_order = std::min(2 * config.quad_order, 512);
        if (refined_order > config.quad_order) {
            const QuadratureRule fine = gauss_legendre_unit(refined_order);
            const HGrid gf = solve_grid(1.0, fine, sopt);
            worst = 0.0;
            for (double mu : {0.1, 0.5, 0.9})
                worst = std::max(worst, std::abs(h_oracle(mu, grid_at(1.0)) -
                                                 h_oracle(mu, gf)));
            add(out, "solver_refinement", worst, 1e-8,
                fmt("conservative case, order %d vs %d", config.quad_order,
                    refined_order));
        }

        add(out, "solver_conservative_endpoint",
            std::abs(h_oracle(1.0, grid_at(1.0)) - 2.90780), 5e-4,
            "H(1,1) vs the tabulated 2.90780");
    }

    // ---- reference-table reproduction ----
    {
        double worst_closed = 0.0;
        double worst_ratio = 0.0;
        std::string worst_cell;
        for (std::size_t i = 0; i < reference_table_size(); ++i) {
            const ReferenceCell& c = reference_table()[i];
            worst_closed = std::max(
                worst_closed,
                std::abs(h_closed(EvalPoint(c.mu, c.omega), config.hyp_tol) -
                         c.closed));
            const double oracle = h_oracle(c.mu, grid_at(c.omega));
            // The tabulated values carry five decimals through omega = 0.7
            // and four decimals for omega >= 0.8; the (0.05, 0.9) entry is
            // additionally off by 2.2e-4 against a high-precision evaluation
            // of the defining equation, so it gets a wider allowance.
            double bound = c.omega > 0.95 ? 5e-4 : 2e-4;
            if (c.omega > 0.85 && c.omega < 0.95 && c.mu == 0.05)
                bound = 3e-4;
            const double ratio = std::abs(oracle - c.chr) / bound;
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst_cell = fmt("mu=%.2f omega=%.1f |diff|=%.2e allowed=%.0e",
                                 c.mu, c.omega, std::abs(oracle - c.chr),
                                 bound);
            }
        }
        add(out, "reference_closed_agreement", worst_closed, 1e-4,
            "closed form vs the bundled closed-method column, 210 cells");
        add(out, "reference_chr_agreement", worst_ratio, 1.0,
            "per-cell |oracle - CHR|/allowance; worst " + worst_cell);
    }

    // ---- moments ----
    {
        double worst = 0.0;
        for (int k = 1; k <= 50; ++k) {
            const double om = k / 50.0;
            const MomentVector mv = alpha_recurrence(om, 2);
            worst = std::max(worst,
                             std::abs(mv.alphas[0] - alpha_closed(0, om)));
            worst = std::max(worst,
                             std::abs(mv.alphas[1] - alpha_closed(1, om)));
        }
        add(out, "moment_recurrence_closed", worst, 1e-12,
            "recurrence vs closed alpha_0, alpha_1 at 50 omega samples");

        const MomentVector m0 = alpha_recurrence(0.0, 10);
        worst = 0.0;
        for (int n = 0; n <= 10; ++n)
            worst = std::max(worst,
                             std::abs(m0.alphas[n] - 1.0 / (n + 1)));
        add(out, "moment_absorbing_exact", worst, 0.0,
            "omega = 0 gives alpha_n = 1/(n+1) exactly");

        worst = 0.0;
        for (int k = 1; k <= 9; ++k)
            worst = std::max(
                worst, std::abs(alpha_quadrature(0, grid_at(0.1 * k)) -
                                alpha_closed(0, 0.1 * k)));
        add(out, "moment_quadrature_alpha0", worst, 1e-6,
            "oracle quadrature vs closed zeroth moment, omega <= 0.9");

        const MomentVector m1 = alpha_recurrence(1.0, 4);
        const double exact[5] = {2.0, 1.0, 0.625, 0.4375, 0.3291015625};
        worst = 0.0;
        for (int n = 0; n <= 4; ++n)
            worst = std::max(worst, std::abs(m1.alphas[n] - exact[n]));
        add(out, "moment_conservative_vector", worst, 1e-10,
            "omega = 1 moments against the hand-unrolled recurrence");
    }

    // ---- series coefficients ----
    {
        double worst_root = 0.0, worst_closed = 0.0, worst_bridge_even = 0.0;
        for (int k = 1; k <= 10; ++k) {
            const double om = 0.1 * k;
            const CoefficientSet cs = compute_coefficients(om, 10);
            const double a0 = cs.a_even[0];
            worst_root = std::max(
                worst_root, std::abs(om / 4.0 * a0 * a0 - a0 + 1.0));
            const double d = om * a0 - 6.0;
            const double a2c = (a0 - 1.0) / d;
            const double a4c = (9.0 * (1.0 - a0) + om * a0 + 2.25 * om) /
                               (d * d * (om * a0 - 10.0));
            worst_closed =
                std::max(worst_closed, std::abs(cs.a_even[1] - a2c));
            worst_closed =
                std::max(worst_closed, std::abs(cs.a_even[2] - a4c));
            const MomentVector mv = alpha_recurrence(om, 12);
            for (int n = 0; n <= 6; n += 2)
                worst_bridge_even = std::max(
                    worst_bridge_even,
                    std::abs(legendre_coeff_from_moments(n, mv) -
                             cs.a_even[n / 2]));
        }
        add(out, "coeff_quadratic_root", worst_root, 1e-12,
            "A0 satisfies its defining quadratic");
        add(out, "coeff_low_order_closed", worst_closed, 1e-10,
            "sequential A2, A4 vs their closed forms, all omega");
        add(out, "coeff_even_moment_bridge", worst_bridge_even, 1e-9,
            "even coefficients vs the moment projection of H");

        const CoefficientSet c1 = compute_coefficients(1.0, 4);
        const double worst_cons =
            std::max(std::abs(c1.a_even[1] + 0.25),
                     std::abs(c1.a_even[2] - 19.0 / 512.0));
        add(out, "coeff_conservative_values", worst_cons, 1e-10,
            "A2(1) = -1/4 and A4(1) = 19/512");

        double worst_odd = 0.0, worst_bridge_odd = 0.0;
        for (double om : {0.3, 0.7, 1.0}) {
            const std::vector<double> full =
                compute_coefficients_full(om, 9);
            for (int n = 1; n <= 9; n += 2)
                worst_odd = std::max(worst_odd, std::abs(full[n]));
            const MomentVector mv = alpha_recurrence(om, 12);
            for (int n = 1; n <= 7; n += 2)
                worst_bridge_odd =
                    std::max(worst_bridge_odd,
                             std::abs(legendre_coeff_from_moments(n, mv)));
        }
        add(out, "coeff_odd_vanish_matching", worst_odd, 1e-10,
            "odd unknowns solved explicitly all come out zero");
        add(out, "coeff_odd_vanish_moment_bridge", worst_bridge_odd, 1e-10,
            "odd Legendre projections of H vanish");
    }

    // ---- series solution vs closed form ----
    {
        double worst_residual = 0.0, worst_agree = 0.0;
        for (int k = 1; k <= 10; ++k) {
            const double om = 0.1 * k;
            const CoefficientSet cs =
                compute_coefficients(om, 2 * config.series_n);
            worst_residual = std::max(worst_residual, cs.matching_residual);
            for (int m = 1; m <= 20; ++m) {
                const double mu = 0.05 * m;
                const EvalPoint pt(mu, om);
                worst_agree =
                    std::max(worst_agree,
                             std::abs(h_series(pt, cs, config.hyp_tol) -
                                      h_closed(pt, config.hyp_tol)));
            }
        }
        add(out, "series_matching_residual", worst_residual, 1e-10,
            "worst order-matching residual, all omega");
        add(out, "series_method_agreement", worst_agree, 1e-3,
            fmt("|h_series(N=%d) - h_closed| over the evaluation grid",
                config.series_n));
    }

    // ---- integral identities ----
    {
        double worst_asserted = 0.0;
        double worst_riccati_rel = 0.0;
        for (double om : om_grid3) {
            for (double mu : mu_grid9) {
                const IdentityReport rep =
                    run_identities(mu, grid_at(om), rule2d);
                for (const auto& name : rep.asserted)
                    worst_asserted =
                        std::max(worst_asserted,
                                 std::abs(rep.residuals.at(name)));
                const double z0c =
                    z0_closed(EvalPoint(mu, om), config.hyp_tol);
                const double scale =
                    om / 4.0 * z0c * z0c + 1.0 / (mu * (1.0 + mu));
                worst_riccati_rel = std::max(
                    worst_riccati_rel,
                    std::abs(rep.residuals.at("z0_riccati_closed")) / scale);
            }
        }
        add(out, "identity_asserted_residuals", worst_asserted, 1e-6,
            "five integration/symmetry identities, oracle H, 27-point grid");
        add(out, "identity_closed_riccati", worst_riccati_rel, 1e-5,
            "first-order form residual with closed-form Z0, relative");

        // Antisymmetry and the sum rule hold for any positive sampler.
        std::vector<std::function<double(double)>> samplers;
        samplers.emplace_back([](double) { return 1.0; });
        samplers.emplace_back(
            [&](double x) { return h_oracle(x, grid_at(0.6)); });
        samplers.emplace_back(
            [](double x) { return 1.0 + 3.0 * x * x + x * x * x; });
        double worst_anti = 0.0, worst_sum = 0.0;
        for (const auto& h : samplers)
            for (double mu : {0.37, 1.0}) {
                const TensorIntegrals t = tensor_integrals(mu, h, rule2d);
                worst_anti =
                    std::max(worst_anti, std::abs(t.z1a - t.z1b));
                worst_sum = std::max(
                    worst_sum, std::abs(t.i10 + t.i11 - t.z0 * t.z0));
            }
        add(out, "identity_antisymmetry_universal", worst_anti, 1e-10,
            "z1 ordering difference for three unrelated samplers");
        add(out, "identity_sum_rule_universal", worst_sum, 1e-9,
            "i10 + i11 = z0^2 for three unrelated samplers");
    }

    // ---- discrepancy statistics ----
    {
        const std::vector<DiscrepancyStats> stats =
            discrepancy_stats(config);
        add(out, "discrepancy_small_omega", stats.front().mean_rel, 5e-4,
            "mean closed-vs-oracle relative difference at omega = 0.1");

        const double cons = stats.back().mean_rel;
        CheckResult window;
        window.name = "discrepancy_conservative_window";
        window.value = cons;
        window.bound = 0.10;
        window.pass = cons >= 0.05 && cons <= 0.10;
        window.detail = "conservative-case mean must land in [5%, 10%]";
        out.push_back(window);

        const double worst_cell =
            rel(h_closed(EvalPoint(1.0, 1.0), config.hyp_tol),
                h_oracle(1.0, grid_at(1.0)));
        add(out, "discrepancy_worst_cell", std::abs(worst_cell - 0.0965),
            0.002, fmt("cell (1,1) shows %.4f, expected 0.0965 +- 0.002",
                       worst_cell));
    }

    // ---- non-gating diagnostics ----
    if (diag) {
        diag_line(diag,
                  "derivative-form identity residuals with oracle input "
                  "(reported, not asserted):");
        for (double om : {0.5, 1.0})
            for (double mu : {0.3, 0.5, 0.8}) {
                const IdentityReport rep =
                    run_identities(mu, grid_at(om), rule2d);
                diag_line(
                    diag,
                    fmt("  omega=%.1f mu=%.1f  z1_derivative=%+.3e  "
                        "z0_riccati=%+.3e  h_riccati=%+.3e",
                        om, mu, rep.residuals.at("z1_derivative"),
                        rep.residuals.at("z0_riccati"),
                        rep.residuals.at("h_riccati")));
            }
        diag_line(diag,
                  "printed second-moment closed form vs recurrence "
                  "(informational):");
        for (double om : {0.2, 0.6, 1.0})
            diag_line(diag,
                      fmt("  omega=%.1f  printed=%.6f  recurrence=%.6f", om,
                          alpha_closed(2, om),
                          alpha_recurrence(om, 2).alphas[2]));
        diag_line(diag,
                  fmt("conservative first moment: closed=%.7f  oracle "
                      "quadrature=%.7f (the gap mirrors the table "
                      "discrepancy)",
                      alpha_closed(1, 1.0),
                      alpha_quadrature(1, grid_at(1.0))));
        diag_line(diag, "series truncation ladder at (0.5, 1.0):");
        for (int n = 1; n <= 5; ++n) {
            const CoefficientSet cs = compute_coefficients(1.0, 2 * n);
            const EvalPoint pt(0.5, 1.0);
            diag_line(diag,
                      fmt("  N=%d  |h_series - h_closed| = %.2e", n,
                          std::abs(h_series(pt, cs, config.hyp_tol) -
                                   h_closed(pt, config.hyp_tol))));
        }
    }

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace hfunc
