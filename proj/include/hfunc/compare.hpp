#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hfunc/parallel.hpp"

namespace hfunc {

struct RunConfig {
    int quad_order = 96;
    double fp_tol = 1e-12;
    long max_iter = 100000;
    int series_n = 5; // series truncation N, i.e. coefficients through A_{2N}
    double hyp_tol = 1e-12;
    exec_policy exec = exec_policy::parallel;

    void validate() const; // throws domain_error
};

struct MethodSelection {
    bool closed = true;
    bool series = true;
    bool oracle = true;
};

// One (mu, omega) cell of a method-comparison table. Cells that fail keep
// their error text and leave the affected values empty; a sweep never aborts
// on a single cell.
struct ComparisonRow {
    double mu = 0;
    double omega = 0;
    std::optional<double> h_closed;
    std::optional<double> h_series;
    std::optional<double> h_oracle;
    std::optional<double> chr;      // bundled reference, if requested and on-grid
    std::optional<double> rel_diff; // |h_closed - h_oracle| / h_oracle
    std::string error;
};

// Evaluate the selected methods over the mu x omega grid. The oracle grid
// and coefficient set are computed once per omega and shared across cells;
// cells are independent and run under the configured execution policy with
// deterministic output order.
std::vector<ComparisonRow> comparison_table(const std::vector<double>& mus,
                                            const std::vector<double>& omegas,
                                            const MethodSelection& methods,
                                            const RunConfig& config,
                                            bool with_chr);

// Per-omega discrepancy between the closed form and the oracle over
// mu = 0.05(0.05)1.00, as mean and max relative difference.
struct DiscrepancyStats {
    double omega = 0;
    double mean_rel = 0;
    double max_rel = 0;
    double worst_mu = 0;
};

std::vector<DiscrepancyStats> discrepancy_stats(const RunConfig& config);

// CSV with the fixed header mu,omega,h_closed,h_series,h_oracle,chr,rel_diff.
// Missing values print as empty fields. precision is the number of decimal
// places.
void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows,
               int precision = 5);
std::vector<ComparisonRow> parse_csv(std::istream& in);

// JSON array of row objects with the same field names; errored cells carry
// an "error" member instead of the missing numbers.
void write_json(std::ostream& out, const std::vector<ComparisonRow>& rows,
                int precision = 5);

// Human-readable fixed-width table; errored cells are annotated.
void write_table(std::ostream& out, const std::vector<ComparisonRow>& rows,
                 int precision = 5);

} // namespace hfunc
