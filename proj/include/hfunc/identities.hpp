#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "hfunc/integral_solver.hpp"

namespace hfunc {

// Residuals of the integral and differential identities satisfied (or, for
// the differential ones, claimed) by H. Keys:
//   log_link        Z0 - ln(1+1/mu) - (omega/2) Z1
//   pair_antisym    difference of the two orderings of the Z1 double integral
//   half_square_mu  mu'-weighted triple-denominator integral minus Z0^2/2
//   half_square_eta eta-weighted variant of the same
//   z1_split        Z1 - (mu/2) Z0^2 - Z2
//   z1_derivative   d(Z1)/dmu + Z0^2/2                  (diagnostic)
//   z0_riccati      d(Z0)/dmu + (omega/4) Z0^2 + 1/(mu(1+mu))   (diagnostic)
//   h_riccati       dH/dmu - (1/(2mu) - omega/(2(1+mu))) H^2 + 1/(2mu)
//                                                       (diagnostic)
// The first five hold for the exact solution of the integral equation by
// integration and symmetry alone and are asserted against the oracle. The
// three derivative forms are reported only: with oracle input they measure a
// derivation step whose validity the method discrepancy calls into question,
// and with closed-form input (keys suffixed "_closed") they are ~0 by
// construction.
struct IdentityReport {
    double mu = 0;
    double omega = 0;
    std::map<std::string, double> residuals;
    std::set<std::string> asserted;
};

// Every 1D/2D quadrature the identity checks need, evaluated in one pass
// against an arbitrary positive sampler h. The antisymmetry (z1a = z1b) and
// the sum rule (i10 + i11 = z0^2) hold for ANY h, not just solutions, and
// are tested that way.
struct TensorIntegrals {
    double z0 = 0;  // sum w h/(mu+x)
    double z1a = 0; // mu'-weighted double integral
    double z1b = 0; // eta-weighted double integral
    double i10 = 0; // mu'-weighted triple-denominator integral
    double i11 = 0; // eta-weighted triple-denominator integral
    double z2 = 0;  // mu' eta-weighted triple-denominator integral
};

TensorIntegrals tensor_integrals(double mu,
                                 const std::function<double(double)>& h,
                                 const QuadratureRule& rule);

// The two orderings of the Z1 double integral
//   int int mu' H(mu')H(eta) / ((mu+mu')(eta+mu')) dmu' deta   and
//   int int eta H(mu')H(eta) / ((mu+eta)(eta+mu')) dmu' deta,
// evaluated by tensor-product quadrature with H sampled through the oracle
// extension. Equal for the exact H; their difference is pair_antisym.
std::pair<double, double> z1_quadrature(double mu, const HGrid& grid,
                                        const QuadratureRule& rule);

// Z2 = int int eta mu' H(mu')H(eta) / ((mu+mu')(mu+eta)(eta+mu')) dmu' deta.
double z2_quadrature(double mu, const HGrid& grid, const QuadratureRule& rule);

// Full identity report at one (mu, omega). rule is the 1D base of the tensor
// product (64 points is ample for the smooth integrands). fd_step <= 0 means
// 1e-4*mu; derivatives use central differences refined by one Richardson
// step. Closed-form diagnostic inputs come from the analytic closed-form
// objects (Z1 via the log-link inversion).
IdentityReport run_identities(double mu, const HGrid& grid,
                              const QuadratureRule& rule, double fd_step = 0.0);

} // namespace hfunc
