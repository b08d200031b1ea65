#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hfunc/compare.hpp"

namespace hfunc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0; // measured quantity (usually a worst-case residual)
    double bound = 0; // the asserted limit
    std::string detail;
};

// Run every asserted invariant of the library under the given configuration:
// quadrature exactness, special-function spot values, transformation
// consistency, closed-form self-consistency (ODE residual, algebraic link,
// limits, derivative), solver properties (positivity, monotonicity,
// refinement stability, product-form residual, zeroth moment), moment and
// coefficient relations, method agreement, and the asserted integral
// identities. Diagnostics that are reported without gating (derivative-form
// identity residuals with oracle input, the informational second-moment
// closed form, the quadrature first moment at omega = 1) are written to
// diag when given.
std::vector<CheckResult> run_verification(const RunConfig& config,
                                          std::ostream* diag = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace hfunc
