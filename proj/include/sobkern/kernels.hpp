#pragma once

#include <span>

#include "sobkern/kernel_spec.hpp"

namespace sobkern {

// Univariate Sobolev kernel of smoothness s: the damped-oscillation sum
//   WK_s(t) = -(1/(s+1)) sum_{j=1}^{s} e^{-|t| sin th_j} sin th_j cos(|t| cos th_j + 2 th_j),
// th_j = j pi / (s+1). Depends on |x - t| only.
double eval_k1s(int s, double x, double t);

// Same kernel through the complex residue sum; the imaginary part of the
// internal sum must stay below 1e-12 or a consistency_error is thrown.
double eval_k1s_residue(int s, double x, double t);

// Infinite-smoothness factor WK_inf(x) = (2/(pi x^3)) (sin x - x cos x),
// evaluated by its alternating series for |x| < 0.5 to avoid cancellation.
double eval_kinf_1d(double x);

// Diagonal K(0,0) in closed form where available, via the quadrature oracle
// for the Fourier-defined families (d <= 3).
double diag_value(const KernelSpec& spec);

// K(x, t). Closed-form families are computed directly; SobolevFourier,
// Weighted and GeneralSymbol delegate to the quadrature oracle.
double eval_kernel(const KernelSpec& spec, std::span<const double> x, std::span<const double> t);

// Closed form of the univariate diagonal, (1/(s+1)) cos(pi/(2s+2)) / sin(3pi/(2s+2)).
double k1s_diagonal(int s);

} // namespace sobkern
