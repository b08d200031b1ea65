#include "hfunc/closed_form.hpp"

#include <cmath>

#include "hfunc/hyp2f1.hpp"

namespace hfunc {

GValue g_value(const EvalPoint& point, double tol) {
    if (point.omega == 0.0)
        throw domain_error("g_value: omega = 0 is degenerate; H is exactly 1 "
                           "there and is special-cased by callers");
    if (point.mu < closed_form_min_mu)
        throw domain_error("g_value: mu below the closed-form floor 1e-3");

    const double mu = point.mu;
    const double s = point.s;
    const double a = 1.5 + 0.5 * s;
    const double b = 0.5 + 0.5 * s;
    const double c = 1.0 + s;
    const double z = -1.0 / mu;

    const double f = hyp2f1({a, b, c, z}, tol);
    const double fp = hyp2f1_derivative({a, b, c, z}, tol);

    // G = mu^p (1+mu) F(-1/mu) with p = -(1+s)/2; product rule plus the
    // chain factor d(-1/mu)/dmu = 1/mu^2.
    const double p = -0.5 * (1.0 + s);
    const double mup = std::pow(mu, p);
    const double g = mup * (1.0 + mu) * f;
    const double dg = p * std::pow(mu, p - 1.0) * (1.0 + mu) * f + mup * f +
                      mup * (1.0 + mu) * fp / (mu * mu);
    return GValue{g, dg, mu, point.omega};
}

double h_closed(const EvalPoint& point, double tol) {
    if (point.mu == 0.0 || point.omega == 0.0) return 1.0;
    const GValue gv = g_value(point, tol);
    const double den = gv.g - 2.0 * point.mu * gv.dg_dmu;
    if (std::abs(den) <= 1e-13 * std::abs(gv.g))
        throw pole_error("h_closed: vanishing denominator G - 2 mu G'");
    return gv.g / den;
}

double z0_closed(const EvalPoint& point, double tol) {
    if (!(point.mu > 0.0))
        throw domain_error("z0_closed: mu must be positive");
    if (!(point.omega > 0.0))
        throw domain_error("z0_closed: omega must be positive");
    const GValue gv = g_value(point, tol);
    return 4.0 * gv.dg_dmu / (point.omega * gv.g);
}

double ode_residual(const EvalPoint& point, double h_step, double tol) {
    if (point.omega == 0.0) return 0.0; // G'' and the coefficient both vanish
    const double mu = point.mu;
    const double h = h_step > 0.0 ? h_step : 5e-3 * mu;
    if (!(mu > 2.0 * h))
        throw domain_error("ode_residual: mu must exceed 2*h_step");

    // Central second difference at steps h and h/2 with one Richardson step.
    // The extrapolation matters: series evaluation noise in G is amplified by
    // 1/h^2, so a small bare step cannot reach the 1e-5 target on its own.
    auto g_at = [&](double m) { return g_value(EvalPoint(m, point.omega), tol).g; };
    const double g0 = g_at(mu);
    const double d1 = (g_at(mu + h) - 2.0 * g0 + g_at(mu - h)) / (h * h);
    const double hh = h / 2.0;
    const double d2 = (g_at(mu + hh) - 2.0 * g0 + g_at(mu - hh)) / (hh * hh);
    const double second = (4.0 * d2 - d1) / 3.0;
    const double coeff = point.omega / (4.0 * mu * (1.0 + mu));
    return (second + coeff * g0) / (std::abs(g0) * coeff);
}

} // namespace hfunc
