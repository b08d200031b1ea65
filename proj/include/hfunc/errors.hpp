#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfunc {

// Invalid argument or out-of-contract input. CLI maps this to exit code 2.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An iteration or series failed to meet its tolerance. CLI maps this to exit
// code 3. Carries enough state for the caller to inspect or retry.
struct convergence_error : std::runtime_error {
    long iterations = 0;     // sweeps or series terms consumed
    double final_update = 0; // last update / last term magnitude
    double partial = std::numeric_limits<double>::quiet_NaN(); // partial sum if meaningful
    std::vector<double> last_iterate; // solver grid if meaningful

    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
    convergence_error(const std::string& msg, long iters, double update)
        : std::runtime_error(msg), iterations(iters), final_update(update) {}
};

// Denominator of a ratio crossed zero where the exact solution has no pole;
// signals an approximation pushed outside its reliable range.
struct pole_error : convergence_error {
    using convergence_error::convergence_error;
};

} // namespace hfunc
