#include "hfunc/series_solution.hpp"

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hfunc/errors.hpp"
#include "hfunc/legendre.hpp"

namespace hfunc {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
    cpp_int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

cpp_int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Coefficient of x^{-(n+2k+1)} in the large-x expansion of Q_n(x):
// 2^n (n+k)! (n+2k)! / (k! (2n+2k+1)!).
cpp_rational q_coeff(int n, int k) {
    cpp_int num = (cpp_int(1) << n) * factorial(n + k) * factorial(n + 2 * k);
    cpp_int den = factorial(k) * factorial(2 * n + 2 * k + 1);
    return cpp_rational(num, den);
}

// b[n][j]: coefficient of mu^{-j} in Q_n(2mu+1). Substituting
// x = 2mu+1 into the Q_n series and re-expanding each x^{-m} binomially
// gives, for m = n+2k+1 <= j,
//   x^{-m} = sum_j (-1)^{j-m} binom(j-1, j-m) (2mu)^{-j},
// all of it exact in rationals.
std::vector<std::vector<cpp_rational>> b_table(int nmax, int jmax) {
    std::vector<std::vector<cpp_rational>> b(
        nmax + 1, std::vector<cpp_rational>(jmax + 1, cpp_rational(0)));
    for (int n = 0; n <= nmax; ++n) {
        for (int j = 1; j <= jmax; ++j) {
            cpp_rational tot = 0;
            for (int k = 0; n + 2 * k + 1 <= j; ++k) {
                const int m = n + 2 * k + 1;
                cpp_rational term = q_coeff(n, k) * binomial(j - 1, j - m);
                if ((j - m) % 2 != 0) term = -term;
                tot += term;
            }
            b[n][j] = tot / cpp_rational(cpp_int(1) << j);
        }
    }
    return b;
}

// Sequential order-matching in powers of 1/mu. z_j is the mu^{-j}
// coefficient of Z0; the first-order form of the governing equation gives,
// at each order m >= 2,
//   E_m = -(m-1) z_{m-1} + (omega/4) sum_{i=1}^{m-1} z_i z_{m-i} - (-1)^{m-1} = 0.
// m = 2 reproduces the quadratic for A0; every later order is linear in the
// newest coefficient because kap[n][j] = 0 for j <= n.
struct Matcher {
    double omega = 0;
    int nmax = 0;
    bool even_only = true;
    std::vector<std::vector<double>> kap; // kap[n][j] = 2(2n+1)(-1)^n b[n][j]
    std::vector<double> a;                // coefficients, zero until solved

    double zj(int j) const {
        double acc = 0.0;
        const int step = even_only ? 2 : 1;
        for (int n = 0; n <= nmax && n < j; n += step) acc += kap[n][j] * a[n];
        return acc;
    }

    double residual(int m) const {
        double quad = 0.0;
        for (int i = 1; i < m; ++i) quad += zj(i) * zj(m - i);
        const double sign = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^(m-1)
        return -(m - 1) * zj(m - 1) + omega / 4.0 * quad - sign;
    }
};

double run_matching(double omega, int n_max, bool even_only,
                    std::vector<double>& a_out) {
    Matcher mt;
    mt.omega = omega;
    mt.nmax = n_max;
    mt.even_only = even_only;
    const int jmax = n_max + 2;

    const auto bt = b_table(n_max, jmax);
    mt.kap.assign(n_max + 1, std::vector<double>(jmax + 1, 0.0));
    for (int n = 0; n <= n_max; ++n)
        for (int j = 0; j <= jmax; ++j) {
            const double v = 2.0 * (2 * n + 1) * bt[n][j].convert_to<double>();
            mt.kap[n][j] = (n % 2 == 0) ? v : -v;
        }

    mt.a.assign(n_max + 1, 0.0);
    mt.a[0] = omega == 0.0 ? 1.0 : 2.0 / omega * (1.0 - std::sqrt(1.0 - omega));

    double worst = 0.0;
    for (int m = 2; m <= jmax; ++m) {
        const int idx = m - 2; // newest coefficient this order can determine
        const bool solve =
            idx >= 1 && idx <= n_max && (!even_only || idx % 2 == 0);
        if (solve) {
            mt.a[idx] = 0.0;
            const double c0 = mt.residual(m);
            mt.a[idx] = 1.0;
            const double c1 = mt.residual(m) - c0;
            if (c1 == 0.0)
                throw convergence_error(
                    "order matching: singular linear condition");
            mt.a[idx] = -c0 / c1;
        }
        // Orders that introduce no unknown (the A0 quadratic itself, and the
        // odd orders in even-only mode) must self-satisfy; track the worst.
        worst = std::max(worst, std::abs(mt.residual(m)));
    }
    a_out = std::move(mt.a);
    return worst;
}

} // namespace

CoefficientSet compute_coefficients(double omega, int n_max) {
    if (!(omega >= 0.0) || !(omega <= 1.0))
        throw domain_error("compute_coefficients: omega must lie in [0,1]");
    if (n_max < 0 || n_max > 10 || n_max % 2 != 0)
        throw domain_error(
            "compute_coefficients: n_max must be even and lie in [0,10]");

    std::vector<double> a;
    const double worst = run_matching(omega, n_max, true, a);

    CoefficientSet cs;
    cs.omega = omega;
    cs.truncation_n = n_max / 2;
    cs.matching_residual = worst;
    cs.a_even.reserve(static_cast<std::size_t>(n_max / 2) + 1);
    for (int n = 0; n <= n_max; n += 2) cs.a_even.push_back(a[n]);
    return cs;
}

std::vector<double> compute_coefficients_full(double omega, int n_max) {
    if (!(omega >= 0.0) || !(omega <= 1.0))
        throw domain_error(
            "compute_coefficients_full: omega must lie in [0,1]");
    if (n_max < 0 || n_max > 10)
        throw domain_error(
            "compute_coefficients_full: n_max must lie in [0,10]");
    std::vector<double> a;
    run_matching(omega, n_max, false, a);
    return a;
}

double z0_series(const EvalPoint& point, const CoefficientSet& coeffs,
                 double tol) {
    if (!(point.mu > 0.0))
        throw domain_error("z0_series: mu must be positive");
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs.a_even.size(); ++i) {
        const int n = 2 * static_cast<int>(i);
        acc += (2 * n + 1) * shifted_legendre_q(n, point.mu, tol) *
               coeffs.a_even[i];
    }
    return 2.0 * acc;
}

double h_series(const EvalPoint& point, const CoefficientSet& coeffs,
                double tol) {
    if (coeffs.omega != point.omega)
        throw domain_error(
            "h_series: coefficient set was built for a different omega");
    if (point.mu == 0.0 || point.omega == 0.0) return 1.0;
    const double z0 = z0_series(point, coeffs, tol);
    const double den = 1.0 - point.omega * point.mu / 2.0 * z0;
    if (den <= 0.0)
        throw pole_error("h_series: truncated-series denominator is not "
                         "positive; increase the truncation order");
    return 1.0 / den;
}

} // namespace hfunc
