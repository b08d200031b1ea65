#include "hfunc/legendre.hpp"

#include <cmath>
#include <numbers>

#include "hfunc/errors.hpp"

namespace hfunc {

double shifted_legendre_p(int n, double x) {
    if (n < 0 || n > 64)
        throw domain_error("shifted_legendre_p: n must lie in [0,64]");
    if (!(x >= 0.0) || !(x <= 1.0))
        throw domain_error("shifted_legendre_p: x must lie in [0,1]");
    const double t = 2.0 * x - 1.0;
    if (n == 0) return 1.0;
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double shifted_legendre_q(int n, double mu, double tol, long max_terms) {
    if (n < 0 || n > 64)
        throw domain_error("shifted_legendre_q: n must lie in [0,64]");
    if (!(mu > 0.0))
        throw domain_error("shifted_legendre_q: mu must be positive");
    if (!(tol >= 1e-15))
        throw domain_error("shifted_legendre_q: tol must be >= 1e-15");

    const double x = 2.0 * mu + 1.0;
    const double xm2 = 1.0 / (x * x);
    // leading term: 2^n n! n! / (2n+1)! * x^-(n+1), via lgamma to dodge
    // factorial overflow for larger n
    double term = std::exp(n * std::numbers::ln2 + 2.0 * std::lgamma(n + 1.0) -
                           std::lgamma(2.0 * n + 2.0) -
                           (n + 1.0) * std::log(x));
    double sum = term;
    for (long k = 1; k <= max_terms; ++k) {
        // ratio of successive series coefficients:
        //   (n+k)(n+2k)(n+2k-1) / (k (2n+2k+1)(2n+2k))
        const double kk = static_cast<double>(k);
        term *= (n + kk) * (n + 2 * kk) * (n + 2 * kk - 1.0) /
                (kk * (2 * n + 2 * kk + 1.0) * (2 * n + 2 * kk)) * xm2;
        sum += term;
        if (term <= tol * sum) return sum;
    }
    convergence_error err("shifted_legendre_q: series cap hit (mu too small)",
                          max_terms, term);
    err.partial = sum;
    throw err;
}

} // namespace hfunc
