#pragma once

#include <span>
#include <vector>

#include "sobkern/kernel_spec.hpp"
#include "sobkern/qmc.hpp"

namespace sobkern {

// Minimal-norm interpolant f* = sum_j alpha_j K(., x_j). Immutable after
// fitting and safe to share across threads.
struct SplineModel {
    KernelSpec spec;
    PointSet points;
    std::vector<double> coeffs;
    std::vector<double> values;
    double norm = 0;        // sqrt(alpha^T y)
    double jitter_used = 0; // diagonal regularization that made the solve pass
};

// G[i][j] = K(x_i, x_j), row-major n x n.
std::vector<double> gram_matrix(const KernelSpec& spec, const PointSet& pts);

// Solves (G + jitter I) alpha = y with the jitter ladder
// {0, 1e-12, 1e-10, 1e-8} * K(0,0). Duplicate points (exact coordinate
// equality) are rejected; an exhausted ladder throws numerical_error.
SplineModel fit_spline(const KernelSpec& spec, const PointSet& pts, std::span<const double> y);

double eval_spline(const SplineModel& model, std::span<const double> t);
double spline_norm(const SplineModel& model);

} // namespace sobkern
