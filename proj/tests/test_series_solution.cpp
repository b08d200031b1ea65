#include "doctest.h"

#include "hfunc/series_solution.hpp"
#include "hfunc/closed_form.hpp"
#include "hfunc/errors.hpp"
#include "hfunc/moments.hpp"

#include <cmath>

using namespace hfunc;

TEST_CASE("conservative coefficients match known exact values") {
    const auto cs = compute_coefficients(1.0, 10);
    REQUIRE(cs.a_even.size() == 6);
    CHECK(cs.truncation_n == 5);
    CHECK(std::abs(cs.a_even[0] - 2.0) < 1e-12);
    CHECK(std::abs(cs.a_even[1] - (-0.25)) < 1e-10);
    CHECK(std::abs(cs.a_even[2] - 19.0 / 512.0) < 1e-10);
    CHECK(cs.matching_residual < 1e-12);
}

TEST_CASE("omega=0.5 low-order coefficients") {
    const auto cs = compute_coefficients(0.5, 4);
    REQUIRE(cs.a_even.size() == 3);
    CHECK(std::abs(cs.a_even[0] - 1.1715728752538097) < 1e-12);
    CHECK(std::abs(cs.a_even[1] - (-0.03168934384971103)) < 1e-10);
    CHECK(std::abs(cs.a_even[2] - (-0.0006038093639520543)) < 1e-10);
}

TEST_CASE("leading coefficient equals the zeroth moment") {
    for (double om : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        const auto cs = compute_coefficients(om, 6);
        CHECK(std::abs(cs.a_even[0] - alpha_closed(0, om)) < 1e-12);
    }
}

TEST_CASE("full matching reproduces the even-only coefficients and kills the odd ones") {
    const auto even_only = compute_coefficients(0.7, 8);
    const auto full = compute_coefficients_full(0.7, 9);
    REQUIRE(full.size() == 10);
    for (std::size_t i = 0; i < even_only.a_even.size(); ++i) {
        CHECK(std::abs(full[2 * i] - even_only.a_even[i]) < 1e-10);
    }
    for (std::size_t n = 1; n < full.size(); n += 2) {
        CHECK(std::abs(full[n]) < 1e-10);
    }
}

TEST_CASE("series H agrees with the closed form") {
    const auto cs = compute_coefficients(0.5, 10);
    const EvalPoint p(0.5, 0.5);
    const double hs = h_series(p, cs);
    CHECK(std::abs(hs - h_closed(p)) < 1e-3);
    CHECK(std::abs(hs - 1.19054) < 1e-3);
}

TEST_CASE("series Z0 at omega=0 reduces to the log kernel") {
    // single coefficient A0 = 1 and the Legendre-Q generating identity
    const auto cs = compute_coefficients(0.0, 10);
    for (double mu : {0.1, 0.5, 1.0, 2.0}) {
        CHECK(std::abs(z0_series(EvalPoint(mu, 0.0), cs) -
                       std::log1p(1.0 / mu)) < 1e-10);
    }
}

TEST_CASE("series Z0 tracks the closed-form Z0, including beyond mu=1") {
    const auto cs = compute_coefficients(0.5, 10);
    CHECK(std::abs(z0_series(EvalPoint(0.5, 0.5), cs) -
                   z0_closed(EvalPoint(0.5, 0.5))) < 1e-3);
    // far from the expansion edge the truncation error collapses
    CHECK(std::abs(z0_series(EvalPoint(2.0, 0.5), cs) -
                   z0_closed(EvalPoint(2.0, 0.5))) < 1e-5);
}

TEST_CASE("truncation error decreases with order") {
    const EvalPoint p(0.5, 1.0);
    const double ref = h_closed(p);
    double prev = 1.0;
    for (int n_max : {2, 6, 10}) {
        const auto cs = compute_coefficients(1.0, n_max);
        const double err = std::abs(h_series(p, cs) - ref);
        CHECK(err < prev);
        prev = err;
    }
}

TEST_CASE("series evaluation special cases") {
    const auto cs = compute_coefficients(0.5, 4);
    CHECK(h_series(EvalPoint(0.0, 0.5), cs) == 1.0);
    const auto cs0 = compute_coefficients(0.0, 4);
    CHECK(h_series(EvalPoint(0.3, 0.0), cs0) == 1.0);
}

TEST_CASE("series input validation") {
    CHECK_THROWS_AS(compute_coefficients(0.5, 3), domain_error);   // odd order
    CHECK_THROWS_AS(compute_coefficients(0.5, 12), domain_error);  // beyond table
    CHECK_THROWS_AS(compute_coefficients(1.5, 4), domain_error);
    CHECK_THROWS_AS(compute_coefficients(-0.1, 4), domain_error);
    const auto cs = compute_coefficients(0.5, 4);
    CHECK_THROWS_AS(z0_series(EvalPoint(0.0, 0.5), cs), domain_error);
    CHECK_THROWS_AS(EvalPoint(-1.0, 0.5), domain_error);
    // evaluating against coefficients built for a different omega is an error
    CHECK_THROWS_AS(h_series(EvalPoint(0.5, 0.6), cs), domain_error);
}

TEST_CASE("series H pole detection") {
    // synthetic coefficient set with an inflated leading term pushes the
    // denominator through zero; honest truncations never do this
    CoefficientSet bad;
    bad.omega = 1.0;
    bad.a_even = {3.0};
    bad.truncation_n = 0;
    bad.matching_residual = 0.0;
    CHECK_THROWS_AS(h_series(EvalPoint(1.0, 1.0), bad), pole_error);
}
