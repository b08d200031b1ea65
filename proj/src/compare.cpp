#include "hfunc/compare.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hfunc/closed_form.hpp"
#include "hfunc/errors.hpp"
#include "hfunc/integral_solver.hpp"
#include "hfunc/reference_table.hpp"
#include "hfunc/series_solution.hpp"

namespace hfunc {

void RunConfig::validate() const {
    if (quad_order < 8 || quad_order > 512)
        throw domain_error("RunConfig: quad_order must lie in [8,512]");
    if (!(fp_tol >= 1e-14))
        throw domain_error("RunConfig: fp_tol must be >= 1e-14");
    if (max_iter < 1)
        throw domain_error("RunConfig: max_iter must be >= 1");
    if (series_n < 0 || series_n > 5)
        throw domain_error("RunConfig: series_n must lie in [0,5]");
    if (!(hyp_tol > 0.0) || hyp_tol > 1e-6)
        throw domain_error("RunConfig: hyp_tol must lie in (0, 1e-6]");
}

namespace {

SolveOptions solver_options(const RunConfig& config) {
    SolveOptions opt;
    opt.tol = config.fp_tol;
    opt.max_iter = config.max_iter;
    opt.exec = config.exec;
    return opt;
}

// Per-omega shared state: one solved grid and one coefficient set serve all
// mu cells of that omega. A failure here taints every dependent cell but
// never aborts the sweep.
struct OmegaState {
    bool have_grid = false;
    HGrid grid;
    std::string grid_error;
    bool have_coeffs = false;
    CoefficientSet coeffs;
    std::string coeffs_error;
};

void append_error(std::string& dst, const std::string& msg) {
    if (msg.empty()) return;
    if (!dst.empty()) dst += "; ";
    dst += msg;
}

} // namespace

std::vector<ComparisonRow> comparison_table(const std::vector<double>& mus,
                                            const std::vector<double>& omegas,
                                            const MethodSelection& methods,
                                            const RunConfig& config,
                                            bool with_chr) {
    config.validate();

    const QuadratureRule rule = gauss_legendre_unit(config.quad_order);
    std::vector<OmegaState> states(omegas.size());
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        OmegaState& st = states[k];
        if (methods.oracle) {
            try {
                st.grid = solve_grid(omegas[k], rule, solver_options(config));
                st.have_grid = true;
            } catch (const std::exception& e) {
                st.grid_error = e.what();
            }
        }
        if (methods.series) {
            try {
                st.coeffs =
                    compute_coefficients(omegas[k], 2 * config.series_n);
                st.have_coeffs = true;
            } catch (const std::exception& e) {
                st.coeffs_error = e.what();
            }
        }
    }

    const std::int64_t n_rows =
        static_cast<std::int64_t>(omegas.size()) *
        static_cast<std::int64_t>(mus.size());
    std::vector<ComparisonRow> rows(n_rows);

    // Cells are independent; output order is fixed by the flat index.
    parallel_for(config.exec, n_rows, [&](std::int64_t idx) {
        const std::size_t k = static_cast<std::size_t>(idx) / mus.size();
        const std::size_t i = static_cast<std::size_t>(idx) % mus.size();
        ComparisonRow& row = rows[idx];
        row.mu = mus[i];
        row.omega = omegas[k];
        const OmegaState& st = states[k];

        try {
            const EvalPoint point(row.mu, row.omega);
            if (methods.closed) {
                try {
                    row.h_closed = h_closed(point, config.hyp_tol);
                } catch (const std::exception& e) {
                    append_error(row.error, e.what());
                }
            }
            if (methods.series) {
                if (st.have_coeffs) {
                    try {
                        row.h_series =
                            h_series(point, st.coeffs, config.hyp_tol);
                    } catch (const std::exception& e) {
                        append_error(row.error, e.what());
                    }
                } else {
                    append_error(row.error, st.coeffs_error);
                }
            }
            if (methods.oracle) {
                if (st.have_grid) {
                    try {
                        row.h_oracle = h_oracle(row.mu, st.grid);
                    } catch (const std::exception& e) {
                        append_error(row.error, e.what());
                    }
                } else {
                    append_error(row.error, st.grid_error);
                }
            }
        } catch (const std::exception& e) { // invalid evaluation point
            append_error(row.error, e.what());
        }

        if (row.h_closed && row.h_oracle)
            row.rel_diff =
                std::abs(*row.h_closed - *row.h_oracle) / *row.h_oracle;
        if (with_chr) {
            try {
                row.chr = reference_cell(row.mu, row.omega).chr;
            } catch (const domain_error&) {
                // off-grid points simply have no reference value
            }
        }
    });
    return rows;
}

std::vector<DiscrepancyStats> discrepancy_stats(const RunConfig& config) {
    config.validate();
    const QuadratureRule rule = gauss_legendre_unit(config.quad_order);
    std::vector<DiscrepancyStats> out;
    out.reserve(10);
    for (int k = 1; k <= 10; ++k) {
        const double omega = 0.1 * k;
        const HGrid grid = solve_grid(omega, rule, solver_options(config));
        DiscrepancyStats st;
        st.omega = omega;
        double sum = 0.0;
        for (int m = 1; m <= 20; ++m) {
            const double mu = 0.05 * m;
            const double oracle = h_oracle(mu, grid);
            const double closed =
                h_closed(EvalPoint(mu, omega), config.hyp_tol);
            const double rel = std::abs(closed - oracle) / oracle;
            sum += rel;
            if (rel > st.max_rel) {
                st.max_rel = rel;
                st.worst_mu = mu;
            }
        }
        st.mean_rel = sum / 20.0;
        out.push_back(st);
    }
    return out;
}

namespace {

std::string format_value(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string format_opt(const std::optional<double>& v, int precision) {
    return v ? format_value(*v, precision) : std::string();
}

// Grid coordinates print with default stream formatting: 0.05 stays "0.05".
std::string format_coord(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows,
               int precision) {
    out << "mu,omega,h_closed,h_series,h_oracle,chr,rel_diff\n";
    for (const auto& r : rows) {
        out << format_coord(r.mu) << ',' << format_coord(r.omega) << ','
            << format_opt(r.h_closed, precision) << ','
            << format_opt(r.h_series, precision) << ','
            << format_opt(r.h_oracle, precision) << ','
            << format_opt(r.chr, precision) << ','
            << format_opt(r.rel_diff, precision) << '\n';
    }
}

std::vector<ComparisonRow> parse_csv(std::istream& in) {
    std::vector<ComparisonRow> rows;
    std::string line;
    if (!std::getline(in, line)) return rows;
    if (line != "mu,omega,h_closed,h_series,h_oracle,chr,rel_diff")
        throw domain_error("parse_csv: unrecognized header: " + line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) fields.push_back(cell);
        while (fields.size() < 7) fields.emplace_back();
        if (fields.size() != 7)
            throw domain_error("parse_csv: wrong column count: " + line);
        ComparisonRow r;
        r.mu = std::stod(fields[0]);
        r.omega = std::stod(fields[1]);
        auto opt = [](const std::string& f) -> std::optional<double> {
            if (f.empty()) return std::nullopt;
            return std::stod(f);
        };
        r.h_closed = opt(fields[2]);
        r.h_series = opt(fields[3]);
        r.h_oracle = opt(fields[4]);
        r.chr = opt(fields[5]);
        r.rel_diff = opt(fields[6]);
        rows.push_back(r);
    }
    return rows;
}

void write_json(std::ostream& out, const std::vector<ComparisonRow>& rows,
                int precision) {
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << "  {\"mu\": " << format_coord(r.mu)
            << ", \"omega\": " << format_coord(r.omega);
        auto field = [&](const char* name, const std::optional<double>& v) {
            if (v) out << ", \"" << name << "\": " << format_value(*v, precision);
        };
        field("h_closed", r.h_closed);
        field("h_series", r.h_series);
        field("h_oracle", r.h_oracle);
        field("chr", r.chr);
        field("rel_diff", r.rel_diff);
        if (!r.error.empty())
            out << ", \"error\": \"" << json_escape(r.error) << '"';
        out << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
}

void write_table(std::ostream& out, const std::vector<ComparisonRow>& rows,
                 int precision) {
    const int w = precision + 5;
    auto pad = [&](const std::string& s, int width) {
        if (static_cast<int>(s.size()) >= width) return " " + s;
        return std::string(width - s.size(), ' ') + s;
    };
    out << pad("mu", 6) << pad("omega", 7) << pad("h_closed", w)
        << pad("h_series", w) << pad("h_oracle", w) << pad("chr", w)
        << pad("rel_diff", w) << '\n';
    for (const auto& r : rows) {
        auto cell = [&](const std::optional<double>& v) {
            return pad(v ? format_value(*v, precision) : "-", w);
        };
        out << pad(format_coord(r.mu), 6) << pad(format_coord(r.omega), 7)
            << cell(r.h_closed) << cell(r.h_series) << cell(r.h_oracle)
            << cell(r.chr) << cell(r.rel_diff);
        if (!r.error.empty()) out << "  [" << r.error << ']';
        out << '\n';
    }
}

} // namespace hfunc
