#pragma once

#include <vector>

#include "hfunc/integral_solver.hpp"

namespace hfunc {

enum class moment_source { closed_form, recurrence, quadrature };

struct MomentVector {
    double omega = 0;
    std::vector<double> alphas; // alpha_0 .. alpha_n_max
    moment_source source = moment_source::recurrence;
    int n_max = 0;
};

// Closed moment parameters of the closed-form solution family:
//   alpha_0 = (2/omega)(1 - s),  alpha_1 = 1/(1+s),  s = sqrt(1-omega),
// with the omega -> 0 limits (1 and 1/2) hard-coded. n = 2 evaluates the
// published expression (3omega - 8(1-s)) / (4(4 - 6omega + (omega-6)s));
// note it is informational only: it agrees with the recurrence at omega = 1
// but tends to 0 instead of 1/3 as omega -> 0. The recurrence is normative
// for n >= 2.
//
// Caution: only alpha_0 equals the integral mu^n H(mu) dmu of the actual
// solution. For n >= 1 these are the large-mu expansion coefficients of the
// closed family's transform; they drift away from the quadrature moments of
// the solved H as omega grows (at omega = 1 the true first moment is
// 2/sqrt(3), not the family value 1). The compare subcommand tabulates the
// gap.
double alpha_closed(int n, double omega);

// alpha_n for n >= 1 from the quadratic recurrence
//   4(n+1) alpha_n = 4 + omega sum_{m=0..n} alpha_m alpha_{n-m},
// solved for the newest moment; the divisor is 4(n + s) > 0. Seeded with the
// closed-form alpha_0. n_max <= 64.
MomentVector alpha_recurrence(double omega, int n_max);

// Gauss quadrature of mu^n H(mu) over a converged oracle grid.
double alpha_quadrature(int n, const HGrid& grid);

// The n-th shifted-Legendre coefficient of H expressed through moments:
//   A_n = sum_k c_{n,k} alpha_k  with  P_n(2x-1) = sum_k c_{n,k} x^k,
//   c_{n,k} = (-1)^(n+k) binom(n,k) binom(n+k,k).
// The binomials are exact in doubles for n <= 20 (enforced).
double legendre_coeff_from_moments(int n, const MomentVector& moments);

} // namespace hfunc
