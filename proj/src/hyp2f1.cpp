#include "hfunc/hyp2f1.hpp"

#include <cmath>

#include "hfunc/errors.hpp"

namespace hfunc {
namespace detail {

namespace {
constexpr long kMaxTerms = 1000000;

bool bad_c(double c) {
    // zero or negative integer
    return c <= 0.0 && c == std::floor(c);
}
} // namespace

double gauss_series(double a, double b, double c, double z, double tol,
                    long max_terms) {
    if (bad_c(c)) throw domain_error("hyp2f1: c is zero or a negative integer");
    if (z == 0.0) return 1.0;
    // Termination is tail-aware: the geometric tail of the series is bounded
    // by term/(1-|z|), so stop once term <= tol*|sum|*(1-|z|).
    const double safety = std::abs(z) < 1.0 ? 1.0 - std::abs(z) : 0.5;
    double term = 1.0, sum = 1.0;
    for (long n = 0; n < max_terms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= tol * std::abs(sum) * safety) return sum;
    }
    convergence_error err("hyp2f1: series cap hit", max_terms, std::abs(term));
    err.partial = sum;
    throw err;
}

double pfaff(double a, double b, double c, double z, double tol,
             long max_terms) {
    // 2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1))
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * gauss_series(a, c - b, c, w, tol, max_terms);
}

} // namespace detail

double hyp2f1(const Hyp2F1Params& p, double tol) {
    if (!(p.z <= 0.0))
        throw domain_error("hyp2f1: this artifact only supports z <= 0");
    if (!(tol > 0.0)) throw domain_error("hyp2f1: tol must be positive");
    if (p.z > -1.0) return detail::gauss_series(p.a, p.b, p.c, p.z, tol,
                                                detail::kMaxTerms);
    return detail::pfaff(p.a, p.b, p.c, p.z, tol, detail::kMaxTerms);
}

double hyp2f1_derivative(const Hyp2F1Params& p, double tol) {
    Hyp2F1Params up{p.a + 1.0, p.b + 1.0, p.c + 1.0, p.z};
    return p.a * p.b / p.c * hyp2f1(up, tol);
}

} // namespace hfunc
