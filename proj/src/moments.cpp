#include "hfunc/moments.hpp"

#include <cmath>

#include "hfunc/errors.hpp"

namespace hfunc {

double alpha_closed(int n, double omega) {
    if (!(omega >= 0.0) || !(omega <= 1.0))
        throw domain_error("alpha_closed: omega must lie in [0,1]");
    const double s = std::sqrt(1.0 - omega);
    switch (n) {
    case 0:
        return omega == 0.0 ? 1.0 : 2.0 / omega * (1.0 - s);
    case 1:
        return 1.0 / (1.0 + s);
    case 2:
        // published expression, informational: see header
        return (3.0 * omega - 8.0 * (1.0 - s)) /
               (4.0 * (4.0 - 6.0 * omega + (omega - 6.0) * s));
    default:
        throw domain_error("alpha_closed: only n in {0,1,2} has a closed form "
                           "here; use alpha_recurrence");
    }
}

MomentVector alpha_recurrence(double omega, int n_max) {
    if (!(omega >= 0.0) || !(omega <= 1.0))
        throw domain_error("alpha_recurrence: omega must lie in [0,1]");
    if (n_max < 0 || n_max > 64)
        throw domain_error("alpha_recurrence: n_max must lie in [0,64]");

    MomentVector mv;
    mv.omega = omega;
    mv.source = moment_source::recurrence;
    mv.n_max = n_max;
    mv.alphas.reserve(n_max + 1);
    const double s = std::sqrt(1.0 - omega);
    mv.alphas.push_back(alpha_closed(0, omega));
    for (int n = 1; n <= n_max; ++n) {
        // 4(n+1) a_n = 4 + omega sum_{m=0..n} a_m a_{n-m}; isolating a_n
        // leaves the divisor 4(n+1) - 2 omega a_0 = 4(n+s) > 0.
        double cross = 0.0;
        for (int m = 1; m < n; ++m) cross += mv.alphas[m] * mv.alphas[n - m];
        mv.alphas.push_back((4.0 + omega * cross) / (4.0 * (n + s)));
    }
    return mv;
}

double alpha_quadrature(int n, const HGrid& grid) {
    if (n < 0) throw domain_error("alpha_quadrature: n must be >= 0");
    double acc = 0.0;
    for (int j = 0; j < grid.rule.order; ++j)
        acc += grid.rule.weights[j] * std::pow(grid.rule.nodes[j], n) *
               grid.h_values[j];
    return acc;
}

double legendre_coeff_from_moments(int n, const MomentVector& moments) {
    if (n < 0 || n > 20)
        throw domain_error("legendre_coeff_from_moments: n must lie in "
                           "[0,20] (binomials stay exact in doubles)");
    if (moments.n_max < n)
        throw domain_error("legendre_coeff_from_moments: moment vector too "
                           "short");
    // P_n(2x-1) = sum_k (-1)^(n+k) binom(n,k) binom(n+k,k) x^k
    double acc = 0.0;
    double bin_nk = 1.0;   // binom(n,k)
    double bin_nkk = 1.0;  // binom(n+k,k)
    for (int k = 0; k <= n; ++k) {
        const double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
        acc += sign * bin_nk * bin_nkk * moments.alphas[k];
        bin_nk *= static_cast<double>(n - k) / (k + 1.0);
        bin_nkk *= static_cast<double>(n + k + 1) / (k + 1.0);
    }
    return acc;
}

} // namespace hfunc
