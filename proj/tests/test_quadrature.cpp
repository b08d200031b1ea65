#include <cmath>

#include "doctest.h"
#include "hfunc/errors.hpp"
#include "hfunc/quadrature.hpp"

using hfunc::gauss_legendre_unit;

TEST_CASE("weights are positive and sum to one") {
    for (int order : {1, 2, 8, 48, 96, 512}) {
        const auto r = gauss_legendre_unit(order);
        REQUIRE(r.order == order);
        REQUIRE(static_cast<int>(r.nodes.size()) == order);
        double sum = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(std::abs(sum - 1.0) < 1e-14);
    }
}

TEST_CASE("nodes lie strictly inside (0,1), increasing and symmetric") {
    const auto r = gauss_legendre_unit(33);
    for (int i = 0; i < r.order; ++i) {
        CHECK(r.nodes[i] > 0.0);
        CHECK(r.nodes[i] < 1.0);
        if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
        CHECK(std::abs(r.nodes[i] + r.nodes[r.order - 1 - i] - 1.0) < 1e-15);
        CHECK(std::abs(r.weights[i] - r.weights[r.order - 1 - i]) < 1e-15);
    }
}

TEST_CASE("order n rule integrates monomials through degree 2n-1") {
    const auto r = gauss_legendre_unit(8);
    for (int k = 0; k <= 15; ++k) {
        double acc = 0.0;
        for (int i = 0; i < r.order; ++i)
            acc += r.weights[i] * std::pow(r.nodes[i], k);
        CHECK(std::abs(acc - 1.0 / (k + 1)) < 1e-15);
    }
}

TEST_CASE("smooth non-polynomial integrand converges") {
    // int_0^1 dx/(x + 1/2) = ln 3
    const auto r = gauss_legendre_unit(48);
    double acc = 0.0;
    for (int i = 0; i < r.order; ++i)
        acc += r.weights[i] / (r.nodes[i] + 0.5);
    CHECK(std::abs(acc - std::log(3.0)) < 1e-14);
}

TEST_CASE("order bounds are enforced") {
    CHECK_THROWS_AS(gauss_legendre_unit(0), hfunc::domain_error);
    CHECK_THROWS_AS(gauss_legendre_unit(-3), hfunc::domain_error);
    CHECK_THROWS_AS(gauss_legendre_unit(513), hfunc::domain_error);
}
