#include "hfunc/integral_solver.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hfunc/errors.hpp"

namespace hfunc {

namespace {

// One Jacobi sweep of the division form. Independent across nodes; each
// node's quadrature sum stays an ordered serial loop so serial and parallel
// execution produce identical bits.
void sweep(double omega, const QuadratureRule& r, const std::vector<double>& h,
           std::vector<double>& out, exec_policy exec) {
    const int n = r.order;
    parallel_for(exec, n, [&](std::int64_t i) {
        double z = 0.0;
        for (int j = 0; j < n; ++j)
            z += r.weights[j] * h[j] / (r.nodes[i] + r.nodes[j]);
        out[i] = 1.0 / (1.0 - 0.5 * omega * r.nodes[i] * z);
    });
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void project_moment(double alpha0, const QuadratureRule& r,
                    std::vector<double>& h) {
    double a = 0.0;
    for (int j = 0; j < r.order; ++j) a += r.weights[j] * h[j];
    const double scale = alpha0 / a;
    for (double& v : h) v *= scale;
}

void check_solution(const HGrid& g, double tol) {
    for (std::size_t i = 0; i < g.h_values.size(); ++i) {
        if (!(g.h_values[i] >= 1.0 - 1e-12))
            throw convergence_error("solve_grid: converged iterate dropped "
                                    "below 1");
        if (i > 0 && g.omega > 0.0 &&
            g.h_values[i] < g.h_values[i - 1] - tol)
            throw convergence_error("solve_grid: converged iterate is not "
                                    "increasing in mu");
    }
}

} // namespace

HGrid solve_grid(double omega, const QuadratureRule& rule,
                 const SolveOptions& options) {
    if (!(omega >= 0.0) || !(omega <= 1.0))
        throw domain_error("solve_grid: omega must lie in [0,1]");
    if (rule.order < 8)
        throw domain_error("solve_grid: rule order must be >= 8");
    if (!(options.tol >= 1e-14))
        throw domain_error("solve_grid: tol must be >= 1e-14");
    if (options.max_iter < 1)
        throw domain_error("solve_grid: max_iter must be >= 1");

    HGrid grid;
    grid.omega = omega;
    grid.rule = rule;
    grid.h_values.assign(rule.order, 1.0);
    if (omega == 0.0) return grid; // the equation collapses to H = 1

    const double alpha0 =
        2.0 / omega * (1.0 - std::sqrt(1.0 - omega));
    auto proj = [&](std::vector<double>& h) {
        if (options.moment_projection) project_moment(alpha0, rule, h);
    };

    std::vector<double> h = grid.h_values;
    std::vector<double> h1(rule.order), h2(rule.order);
    long it = 0;
    double upd = 1.0;
    while (it < options.max_iter) {
        if (options.aitken) {
            // Two plain sweeps, then a node-wise delta^2 extrapolation from
            // the triple (h, h1, h2); the cycle restarts from the
            // extrapolated state.
            sweep(omega, rule, h, h1, options.exec);
            proj(h1);
            ++it;
            sweep(omega, rule, h1, h2, options.exec);
            proj(h2);
            ++it;
            upd = max_abs_diff(h2, h1);
            if (upd < options.tol) {
                grid.h_values = h2;
                grid.iterations = it;
                grid.final_update = upd;
                check_solution(grid, options.tol);
                return grid;
            }
            for (int i = 0; i < rule.order; ++i) {
                const double den = h2[i] - 2.0 * h1[i] + h[i];
                double acc = h2[i];
                if (std::abs(den) > 1e-13 * std::abs(h2[i])) {
                    const double d = h1[i] - h[i];
                    acc = h[i] - d * d / den;
                }
                // reject extrapolations outside the feasible region H >= 1
                h[i] = (std::isfinite(acc) && acc >= 1.0) ? acc : h2[i];
            }
            proj(h);
        } else {
            sweep(omega, rule, h, h1, options.exec);
            proj(h1);
            ++it;
            upd = max_abs_diff(h1, h);
            h.swap(h1);
            if (upd < options.tol) {
                grid.h_values = h;
                grid.iterations = it;
                grid.final_update = upd;
                check_solution(grid, options.tol);
                return grid;
            }
        }
    }
    convergence_error err("solve_grid: max_iter exhausted", it, upd);
    err.last_iterate = std::move(h);
    throw err;
}

HGrid solve_grid(double omega, const QuadratureRule& rule, double tol,
                 long max_iter) {
    SolveOptions opt;
    opt.tol = tol;
    opt.max_iter = max_iter;
    return solve_grid(omega, rule, opt);
}

double h_oracle(double mu, const HGrid& grid) {
    if (!(mu >= 0.0))
        throw domain_error("h_oracle: mu must be >= 0");
    if (mu == 0.0 || grid.omega == 0.0) return 1.0;
    const double den = 1.0 - 0.5 * grid.omega * mu * z0_oracle(mu, grid);
    if (den <= 0.0)
        throw pole_error("h_oracle: extension denominator is not positive "
                         "(mu outside the representable range)");
    return 1.0 / den;
}

double z0_oracle(double mu, const HGrid& grid) {
    if (!(mu > 0.0))
        throw domain_error("z0_oracle: mu must be positive");
    double z = 0.0;
    for (int j = 0; j < grid.rule.order; ++j)
        z += grid.rule.weights[j] * grid.h_values[j] /
             (mu + grid.rule.nodes[j]);
    return z;
}

double product_form_residual(const HGrid& grid) {
    double worst = 0.0;
    for (int i = 0; i < grid.rule.order; ++i) {
        const double mu = grid.rule.nodes[i];
        const double hi = grid.h_values[i];
        const double z = z0_oracle(mu, grid);
        worst = std::max(worst,
                         std::abs(hi - 1.0 - 0.5 * grid.omega * mu * hi * z));
    }
    return worst;
}

} // namespace hfunc
