#pragma once

namespace hfunc {

// P_n(2x-1) on [0,1] by the three-term recurrence. n <= 64.
double shifted_legendre_p(int n, double x);

// Q_n(2mu+1), the second-kind Legendre function at the shifted argument
// x = 2mu+1 > 1, evaluated by its descending series
//   Q_n(x) = 2^n sum_k (n+k)!(n+2k)! / (k!(2n+2k+1)!) x^-(n+2k+1).
// Terms are accumulated until the next one drops below tol times the running
// sum; exceeding max_terms raises convergence_error with the partial sum
// (happens only as mu -> 0, where x -> 1).
double shifted_legendre_q(int n, double mu, double tol = 1e-12,
                          long max_terms = 1000000);

} // namespace hfunc
