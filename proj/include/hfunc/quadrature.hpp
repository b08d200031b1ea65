#pragma once

#include <vector>

namespace hfunc {

// Gauss-Legendre rule mapped to [0,1]. Nodes strictly increasing, weights
// positive and summing to 1.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Build the order-point Gauss-Legendre rule on [0,1]. Nodes are found by
// Newton iteration on the Legendre polynomial; the classical [-1,1] rule is
// then mapped affinely. order must lie in [1, 512].
QuadratureRule gauss_legendre_unit(int order);

} // namespace hfunc
