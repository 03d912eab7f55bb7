#pragma once

#include <span>
#include <vector>

namespace sobkern {

// Gauss–Legendre rule on [-1, 1] plus the data needed for modal
// (Legendre-coefficient) transforms of nodal values.
struct GaussLegendreRule {
    int order = 0;
    std::vector<double> nodes;   // ascending
    std::vector<double> weights;
    // proj[k*order + i]: c_k = sum_i proj[k][i] * f(node_i), the discrete
    // Legendre projection of the nodal interpolant.
    std::vector<double> proj;
    // vand[i*order + k] = P_k(node_i)
    std::vector<double> vand;
};

// Cached per order; order in [2, 64]. Thread-safe.
const GaussLegendreRule& gauss_legendre(int order);

// P_0..P_kmax at x.
void legendre_values(int kmax, double x, std::span<double> out);

} // namespace sobkern
