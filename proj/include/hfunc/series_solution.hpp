#pragma once

#include <vector>

#include "hfunc/closed_form.hpp"

namespace hfunc {

// Even shifted-Legendre coefficients A_0, A_2, ..., A_2N of the series
// representation Z0(mu) = 2 sum_n (2n+1)(-1)^n Q_n(2mu+1) A_n, where the odd
// coefficients vanish identically.
struct CoefficientSet {
    double omega = 0;
    std::vector<double> a_even; // A_0, A_2, ..., A_{2*truncation_n}
    int truncation_n = 0;       // N
    double matching_residual = 0;
};

// Generate the coefficients by substituting the Q-series into the first-order
// differential form of the equation and matching powers of 1/mu:
//   - the 1/mu^2 order gives the quadratic (omega/4) A0^2 - A0 + 1 = 0,
//     whose "-" root (2/omega)(1 - sqrt(1-omega)) is the physical branch
//     (the "+" root diverges as omega -> 0 while H = 1 forces A0(0) = 1);
//   - each higher order is linear in the newest coefficient given the lower
//     ones and is solved in sequence.
// The expansion coefficients of Q_n(2mu+1) in powers of 1/mu are built in
// exact rational arithmetic. matching_residual records the worst residual of
// every processed order, including the odd orders that must self-satisfy.
// n_max is the highest coefficient index: even, <= 10.
CoefficientSet compute_coefficients(double omega, int n_max);

// Same matching procedure but with the odd coefficients kept as unknowns and
// solved for; used to verify that they all come out zero. Returns
// A_0, A_1, ..., A_n_max.
std::vector<double> compute_coefficients_full(double omega, int n_max);

// Truncated series value of Z0 at mu > 0.
double z0_series(const EvalPoint& point, const CoefficientSet& coeffs,
                 double tol = 1e-12);

// H recovered from the truncated series: H = 1/(1 - (omega mu/2) Z0), with
// the exact special cases at mu = 0 and omega = 0. A non-positive
// denominator (insufficient truncation order) raises pole_error.
double h_series(const EvalPoint& point, const CoefficientSet& coeffs,
                double tol = 1e-12);

} // namespace hfunc
