#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sobkern/symbol.hpp"

namespace sobkern {

struct QuadratureConfig {
    int panels_per_unit = 8;     // first panel width = 1 / panels_per_unit
    int gauss_order = 16;        // >= 8
    double truncation_radius = 0; // 0: solve tail_bound(U) <= target/2 by doubling
    double target_abs_tol = 1e-9;
    double panel_growth = 1.4;   // geometric width ratio away from the origin
    int refine = 1;              // split every panel into `refine` equal parts
    bool exploit_symmetry = true; // integrate 2^d * [0,U]^d instead of [-U,U]^d

    void validate() const; // throws std::domain_error
};

struct OracleResult {
    double value = 0;
    double err_est = 0; // >= |true - value|: analytic tail bound + panel estimate
};

// Evaluates K(x,t) = integral over R^d of prod_j cos(2pi (x_j - t_j) u_j) / v(u)^2
// by composite Gauss–Legendre panels with exact cosine moments per panel
// (Filon–Legendre), truncated where the analytic tail bound is below
// target_abs_tol / 2. Supports d <= 3.
OracleResult eval_fourier_kernel(const SymbolFunction& sym, std::span<const double> x,
                                 std::span<const double> t, const QuadratureConfig& cfg = {});

// Batch evaluation over many offsets x - t sharing one symbol: the nodal data
// and modal coefficients are built once and contracted against the per-offset
// cosine moments. offsets is row-major, n_offsets x d.
std::vector<OracleResult> eval_fourier_kernel_batch(const SymbolFunction& sym,
                                                    std::span<const double> offsets,
                                                    std::size_t n_offsets,
                                                    const QuadratureConfig& cfg = {});

// Analytic upper bound on the integral of 1/v^2 outside [-U,U]^d (U >= 1).
double tail_bound(const SymbolFunction& sym, double U);

// v(u)^2 for test and diagnostic use.
double eval_symbol(const SymbolFunction& sym, std::span<const double> u);

} // namespace sobkern
