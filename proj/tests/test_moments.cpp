#include "doctest.h"

#include "hfunc/moments.hpp"
#include "hfunc/integral_solver.hpp"
#include "hfunc/series_solution.hpp"
#include "hfunc/errors.hpp"

#include <cmath>

using namespace hfunc;

TEST_CASE("closed moment values at the endpoints") {
    CHECK(alpha_closed(0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(alpha_closed(1, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(alpha_closed(0, 0.0) == 1.0);
    CHECK(alpha_closed(1, 0.0) == 0.5);
    CHECK(std::abs(alpha_closed(0, 0.5) - 1.1715728752538097) < 1e-15);
}

TEST_CASE("recurrence agrees with the closed forms") {
    for (int i = 0; i <= 50; ++i) {
        const double om = i / 50.0;
        const auto mv = alpha_recurrence(om, 2);
        REQUIRE(mv.alphas.size() == 3);
        CHECK(std::abs(mv.alphas[0] - alpha_closed(0, om)) < 1e-12);
        CHECK(std::abs(mv.alphas[1] - alpha_closed(1, om)) < 1e-12);
    }
}

TEST_CASE("conservative moment vector") {
    const auto mv = alpha_recurrence(1.0, 4);
    const double expect[] = {2.0, 1.0, 0.625, 0.4375, 0.3291015625};
    for (int n = 0; n <= 4; ++n) {
        CHECK(std::abs(mv.alphas[n] - expect[n]) < 1e-10);
    }
}

TEST_CASE("absorbing limit gives the plain power moments") {
    const auto mv = alpha_recurrence(0.0, 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(mv.alphas[n] == 1.0 / (n + 1));
    }
}

TEST_CASE("quadrature moments of the solved grid match the exact ones") {
    const auto rule = gauss_legendre_unit(96);
    for (double om : {0.1, 0.5, 0.9}) {
        const auto grid = solve_grid(om, rule);
        CHECK(std::abs(alpha_quadrature(0, grid) - alpha_closed(0, om)) < 1e-6);
    }
    // Only the zeroth closed moment equals the integral of the solved H; for
    // n >= 1 the closed values are asymptotic parameters of the approximate
    // family, not integrals of the true solution. At omega=1 the integral of
    // mu H is exactly 2/sqrt(3) (classical), while the family gives 1.
    const auto g1 = solve_grid(1.0, rule);
    CHECK(std::abs(alpha_quadrature(1, g1) - 2.0 / std::sqrt(3.0)) < 1e-3);
}

TEST_CASE("moment bridge recovers the expansion coefficients") {
    const double om = 0.6;
    const auto mv = alpha_recurrence(om, 8);
    const auto cs = compute_coefficients(om, 6);
    CHECK(std::abs(legendre_coeff_from_moments(0, mv) - alpha_closed(0, om)) < 1e-12);
    CHECK(std::abs(legendre_coeff_from_moments(1, mv)) < 1e-9);
    CHECK(std::abs(legendre_coeff_from_moments(2, mv) - cs.a_even[1]) < 1e-9);
    CHECK(std::abs(legendre_coeff_from_moments(3, mv)) < 1e-9);
}

TEST_CASE("moment input validation") {
    CHECK_THROWS_AS(alpha_closed(3, 0.5), domain_error);
    CHECK_THROWS_AS(alpha_closed(0, 1.5), domain_error);
    CHECK_THROWS_AS(alpha_closed(-1, 0.5), domain_error);
    CHECK_THROWS_AS(alpha_recurrence(0.5, 65), domain_error);
    CHECK_THROWS_AS(alpha_recurrence(-0.1, 4), domain_error);
    CHECK_THROWS_AS(legendre_coeff_from_moments(21, alpha_recurrence(0.5, 30)), domain_error);
    // bridge needs moments up through the requested order
    CHECK_THROWS_AS(legendre_coeff_from_moments(5, alpha_recurrence(0.5, 3)), domain_error);
}
