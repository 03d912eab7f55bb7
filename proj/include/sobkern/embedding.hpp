#pragma once

#include "sobkern/kernel_spec.hpp"

namespace sobkern {

// ||I_K|| = K(0,0)^{1/2} for translation-invariant kernels.
double embedding_norm(const KernelSpec& spec);

struct SobolevEmbeddingBounds {
    double lower; // (5/11)^d
    double mid;   // (2/(3pi))^{d/2}, the s = infinity norm
    double upper; // (d+1) / (2^{(d+1)/2} pi^{d/4})
    double cap;   // 10.03 (6/11)^d
};

// The four displayed bound expressions for ||I_{d,s}||, s > d/2.
SobolevEmbeddingBounds embedding_bounds_sobolev(int d, int s);

// sqrt(2 (1 + 1/beta) / (2^{d/2} Gamma(d/2))), valid for s > d/2 and
// 0 < beta <= 2s - d. beta <= 0 rejects; beta defaults to 2s - d.
double embedding_bound_radial(int d, double s, double beta);
double embedding_bound_radial(int d, double s); // beta = 2s - d

} // namespace sobkern
