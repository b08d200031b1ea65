#pragma once

namespace hfunc {

// Parameters of the Gauss hypergeometric function 2F1(a,b;c;z). This library
// only needs z <= 0; c must not be zero or a negative integer. The family
// that actually occurs downstream is a = 3/2 + s/2, b = 1/2 + s/2, c = 1 + s
// with s = sqrt(1-omega), for which a - b = 1 exactly.
struct Hyp2F1Params {
    double a, b, c, z;
};

// Evaluate 2F1 at z <= 0. For -1 < z <= 0 the defining series is summed
// directly; for z <= -1 the Pfaff transformation
//   2F1(a,b;c;z) = (1-z)^-a 2F1(a, c-b; c; z/(z-1))
// maps the argument into (0,1). The 1/z connection formula is deliberately
// not used: a - b = 1 in the target family makes it degenerate.
double hyp2f1(const Hyp2F1Params& p, double tol = 1e-12);

// d/dz 2F1(a,b;c;z) via the contiguous identity
//   d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z).
double hyp2f1_derivative(const Hyp2F1Params& p, double tol = 1e-12);

namespace detail {
// Direct power series, valid for |z| < 1. Exposed for the transformation
// consistency tests.
double gauss_series(double a, double b, double c, double z, double tol,
                    long max_terms);
// Pfaff route, usable for any z < 1/2 with transformed argument in (-1,1).
double pfaff(double a, double b, double c, double z, double tol,
             long max_terms);
} // namespace detail

} // namespace hfunc
