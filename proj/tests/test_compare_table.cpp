#include "doctest.h"

#include "hfunc/compare.hpp"
#include "hfunc/errors.hpp"
#include "hfunc/reference_table.hpp"

#include <cmath>
#include <sstream>

using namespace hfunc;

TEST_CASE("comparison table over a small grid") {
    const std::vector<double> mus = {0.0, 0.5, 1.0};
    const std::vector<double> omegas = {0.5, 1.0};
    const auto rows =
        comparison_table(mus, omegas, MethodSelection{}, RunConfig{}, true);
    REQUIRE(rows.size() == 6);

    // omega-major ordering, mu fastest
    CHECK(rows[0].omega == 0.5);
    CHECK(rows[2].omega == 0.5);
    CHECK(rows[3].omega == 1.0);
    CHECK(rows[1].mu == 0.5);

    for (const auto& r : rows) {
        REQUIRE(r.h_closed.has_value());
        REQUIRE(r.h_series.has_value());
        REQUIRE(r.h_oracle.has_value());
        REQUIRE(r.rel_diff.has_value());
        CHECK(r.error.empty());
        CHECK(*r.rel_diff ==
              std::abs(*r.h_closed - *r.h_oracle) / *r.h_oracle);
    }

    // mu = 0 rows are exactly 1 for every method, as is the tabulated value
    CHECK(*rows[0].h_closed == 1.0);
    CHECK(*rows[0].h_series == 1.0);
    CHECK(*rows[0].h_oracle == 1.0);
    REQUIRE(rows[0].chr.has_value());
    CHECK(*rows[0].chr == 1.0);

    // on-grid cells join the bundled reference
    REQUIRE(rows[1].chr.has_value());
    CHECK(*rows[1].chr == doctest::Approx(1.18776).epsilon(1e-9));
    REQUIRE(rows[5].chr.has_value());
    CHECK(*rows[5].chr == doctest::Approx(2.90780).epsilon(1e-9));
    CHECK(*rows[4].h_closed == doctest::Approx(2.15637).epsilon(1e-4));
}

TEST_CASE("cell failures are captured, not fatal") {
    // mu below the closed-form floor: closed errors, series and oracle stand
    const std::vector<double> mus = {0.0005};
    const std::vector<double> omegas = {0.5};
    const auto rows =
        comparison_table(mus, omegas, MethodSelection{}, RunConfig{}, false);
    REQUIRE(rows.size() == 1);
    CHECK(!rows[0].h_closed.has_value());
    CHECK(!rows[0].rel_diff.has_value());
    CHECK(rows[0].h_series.has_value());
    CHECK(rows[0].h_oracle.has_value());
    CHECK(!rows[0].error.empty());
}

TEST_CASE("CSV round-trips bit for bit at printed precision") {
    const std::vector<double> mus = {0.0005, 0.25, 0.5};
    const std::vector<double> omegas = {0.3, 1.0};
    const auto rows =
        comparison_table(mus, omegas, MethodSelection{}, RunConfig{}, true);

    std::ostringstream first;
    write_csv(first, rows, 7);
    std::istringstream in(first.str());
    const auto parsed = parse_csv(in);
    REQUIRE(parsed.size() == rows.size());
    std::ostringstream second;
    write_csv(second, parsed, 7);
    CHECK(first.str() == second.str());

    // header is the fixed contract
    const std::string header = first.str().substr(0, first.str().find('\n'));
    CHECK(header == "mu,omega,h_closed,h_series,h_oracle,chr,rel_diff");

    // errored cells leave their fields empty
    CHECK(first.str().find(",,") != std::string::npos);
}

TEST_CASE("CSV parser rejects foreign headers") {
    std::istringstream bad("mu,omega,h\n0.5,0.5,1.0\n");
    CHECK_THROWS_AS(parse_csv(bad), domain_error);
}

TEST_CASE("JSON and table outputs carry the error text") {
    const std::vector<double> mus = {0.0005};
    const std::vector<double> omegas = {0.5};
    const auto rows =
        comparison_table(mus, omegas, MethodSelection{}, RunConfig{}, false);

    std::ostringstream js;
    write_json(js, rows);
    CHECK(js.str().find("\"error\"") != std::string::npos);
    CHECK(js.str().find("\"h_closed\"") == std::string::npos);

    std::ostringstream tab;
    write_table(tab, rows);
    CHECK(tab.str().find('-') != std::string::npos);
    CHECK(tab.str().find("[") != std::string::npos);
}

TEST_CASE("method selection limits the computed columns") {
    MethodSelection only_closed;
    only_closed.series = false;
    only_closed.oracle = false;
    const auto rows = comparison_table({0.5}, {0.5}, only_closed, RunConfig{},
                                       false);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].h_closed.has_value());
    CHECK(!rows[0].h_series.has_value());
    CHECK(!rows[0].h_oracle.has_value());
    CHECK(!rows[0].rel_diff.has_value());
}

TEST_CASE("run configuration is validated") {
    RunConfig c;
    c.quad_order = 4;
    CHECK_THROWS_AS(c.validate(), domain_error);
    c = RunConfig{};
    c.quad_order = 513;
    CHECK_THROWS_AS(c.validate(), domain_error);
    c = RunConfig{};
    c.series_n = 6;
    CHECK_THROWS_AS(c.validate(), domain_error);
    c = RunConfig{};
    c.fp_tol = 1e-15;
    CHECK_THROWS_AS(c.validate(), domain_error);
    c = RunConfig{};
    c.max_iter = 0;
    CHECK_THROWS_AS(c.validate(), domain_error);
    c = RunConfig{};
    c.hyp_tol = 1e-5;
    CHECK_THROWS_AS(c.validate(), domain_error);
    CHECK_NOTHROW(RunConfig{}.validate());
}

TEST_CASE("discrepancy stats hit the documented windows") {
    RunConfig c;
    c.quad_order = 48; // faster; stats are insensitive to the order
    const auto stats = discrepancy_stats(c);
    REQUIRE(stats.size() == 10);
    CHECK(stats.front().omega == doctest::Approx(0.1));
    CHECK(stats.back().omega == doctest::Approx(1.0));
    // small omega: closed form and oracle nearly coincide
    CHECK(stats.front().mean_rel < 5e-4);
    // conservative case: mean discrepancy of several percent
    CHECK(stats.back().mean_rel > 0.05);
    CHECK(stats.back().mean_rel < 0.10);
    CHECK(stats.back().max_rel == doctest::Approx(0.0965).epsilon(0.03));
    CHECK(stats.back().worst_mu == doctest::Approx(1.0));
    // monotone growth of the mean discrepancy with omega
    for (std::size_t i = 1; i < stats.size(); ++i)
        CHECK(stats[i].mean_rel > stats[i - 1].mean_rel);
}

TEST_CASE("bundled reference table lookups") {
    CHECK(reference_table_size() == 210);
    const auto& cell = reference_cell(0.5, 1.0);
    CHECK(cell.chr == doctest::Approx(2.0128).epsilon(1e-9));
    CHECK(cell.closed == doctest::Approx(2.15637).epsilon(1e-9));
    const auto& c2 = reference_cell(1.0, 0.1);
    CHECK(c2.chr == doctest::Approx(1.03682).epsilon(1e-9));
    CHECK(reference_cell(0.0, 0.5).chr == 1.0);
    CHECK_THROWS_AS(reference_cell(0.51, 0.5), domain_error);
    CHECK_THROWS_AS(reference_cell(0.5, 0.55), domain_error);
    CHECK_THROWS_AS(reference_cell(-0.05, 0.5), domain_error);
    CHECK_THROWS_AS(reference_cell(0.5, 0.0), domain_error);
}
