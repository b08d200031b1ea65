#pragma once

#include <cmath>

#include "hfunc/errors.hpp"

namespace hfunc {

// A validated (mu, omega) evaluation point. mu >= 0 with the physical domain
// [0,1]; larger mu is allowed for limit checks only. omega in [0,1]. The
// derived s = sqrt(1-omega) rides along since every formula uses it.
struct EvalPoint {
    double mu;
    double omega;
    double s;

    EvalPoint(double mu_, double omega_) : mu(mu_), omega(omega_) {
        if (!(mu >= 0.0) || !std::isfinite(mu))
            throw domain_error("EvalPoint: mu must be finite and >= 0");
        if (!(omega >= 0.0) || !(omega <= 1.0))
            throw domain_error("EvalPoint: omega must lie in [0,1]");
        s = std::sqrt(1.0 - omega);
    }
};

// G and its analytic mu-derivative at one point.
struct GValue {
    double g;
    double dg_dmu;
    double mu;
    double omega;
};

// Closed-form evaluation refuses mu below this floor: the transformed
// hypergeometric argument 1/(1+mu) approaches 1 and the series degrades.
// H at mu = 0 is pinned to 1 upstream, so nothing of value is lost.
inline constexpr double closed_form_min_mu = 1e-3;

// The positive solution of the linearizing second-order ODE
//   G'' + omega/(4 mu (1+mu)) G = 0,
//   G(mu) = mu^(-(1+s)/2) (1+mu) 2F1((3+s)/2, (1+s)/2; 1+s; -1/mu),
// together with its derivative assembled by the product and chain rules
// (d/dmu of the argument -1/mu is 1/mu^2). The overall multiplicative
// constant is fixed to 1; it cancels in every ratio built from G.
// Requires mu >= closed_form_min_mu and omega > 0.
GValue g_value(const EvalPoint& point, double tol = 1e-12);

// H from the log-derivative of G: H = G / (G - 2 mu G'). The exact special
// cases H(0, omega) = 1 and H(mu, 0) = 1 bypass G entirely.
double h_closed(const EvalPoint& point, double tol = 1e-12);

// Z0 = (4 / (omega G)) G'. Algebraically linked to h_closed through
// H = 1 / (1 - (omega mu / 2) Z0).
double z0_closed(const EvalPoint& point, double tol = 1e-12);

// Residual of the linearizing ODE at one point, with G'' estimated by a
// Richardson-refined central difference of base step h_step (default 5e-3*mu
// when h_step <= 0). Returned relative to the natural scale
// |G| * omega/(4 mu (1+mu)).
double ode_residual(const EvalPoint& point, double h_step = 0.0,
                    double tol = 1e-12);

} // namespace hfunc
