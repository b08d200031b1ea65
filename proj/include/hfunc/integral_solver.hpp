#pragma once

#include <vector>

#include "hfunc/parallel.hpp"
#include "hfunc/quadrature.hpp"

namespace hfunc {

struct SolveOptions {
    double tol = 1e-12;
    long max_iter = 100000;
    // Node-wise Aitken delta^2 extrapolation applied every third sweep.
    bool aitken = true;
    // Rescale each iterate so that sum(w_i h_i) equals the exact zeroth
    // moment (2/omega)(1 - sqrt(1-omega)). Summing the discretized equation
    // against the weights shows the discrete solution satisfies exactly the
    // same quadratic as the continuum moment, so this projection is exact at
    // the fixed point; it removes the neutral slow mode that otherwise makes
    // omega = 1 converge like 1/n.
    bool moment_projection = true;
    exec_policy exec = exec_policy::parallel;
};

// Converged solution of the defining nonlinear integral equation at the
// nodes of one quadrature rule, for one omega.
struct HGrid {
    double omega = 0;
    QuadratureRule rule;
    std::vector<double> h_values;
    long iterations = 0;
    double final_update = 0;
};

// Solve H(mu_i) = 1 / (1 - (omega mu_i / 2) sum_j w_j H(mu_j)/(mu_i + mu_j))
// by fixed-point iteration from H = 1 (a contraction for omega < 1; the
// conservative case relies on the options above). Throws convergence_error
// carrying the last iterate when max_iter is exhausted.
// Preconditions: omega in [0,1], rule order >= 8, tol >= 1e-14, max_iter >= 1.
HGrid solve_grid(double omega, const QuadratureRule& rule,
                 const SolveOptions& options = {});
HGrid solve_grid(double omega, const QuadratureRule& rule, double tol,
                 long max_iter);

// Off-node evaluation by the natural extension formula of the discretized
// equation; exact 1 at mu = 0.
double h_oracle(double mu, const HGrid& grid);

// Quadrature value of int_0^1 H(t)/(mu+t) dt over the converged grid.
double z0_oracle(double mu, const HGrid& grid);

// Max over nodes of |H_i - 1 - (omega mu_i / 2) H_i sum_j w_j H_j/(mu_i+mu_j)|,
// i.e. the residual of the original product form. Converged grids leave this
// within a small multiple of the solve tolerance.
double product_form_residual(const HGrid& grid);

} // namespace hfunc
