#include "hfunc/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "hfunc/errors.hpp"

namespace hfunc {

QuadratureRule gauss_legendre_unit(int order) {
    if (order < 1 || order > 512)
        throw domain_error("gauss_legendre_unit: order must lie in [1,512]");

    QuadratureRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);

    const int n = order;
    const int m = (n + 1) / 2; // roots come in +- pairs on [-1,1]
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        // map [-1,1] -> [0,1]; z decreases with i, so -z fills from the left
        rule.nodes[i] = 0.5 * (1.0 - z);
        rule.nodes[n - 1 - i] = 0.5 * (1.0 + z);
        rule.weights[i] = 0.5 * w;
        rule.weights[n - 1 - i] = 0.5 * w;
    }
    return rule;
}

} // namespace hfunc
