#pragma once

#include <cstddef>

namespace hfunc {

// One cell of the bundled five-decimal reference table: Chandrasekhar's
// tabulated H value (Radiative Transfer, Dover 1960) and the closed-form
// regression anchor, on the grid mu = 0.00(0.05)1.00, omega = 0.1(0.1)1.0.
struct ReferenceCell {
    double mu;
    double omega;
    double chr;    // tabulated ground truth (four decimals for omega >= 0.8)
    double closed; // closed-form method anchor
};

const ReferenceCell* reference_table();
std::size_t reference_table_size(); // 210

// Lookup by grid cell; throws domain_error for off-grid arguments.
const ReferenceCell& reference_cell(double mu, double omega);

} // namespace hfunc
