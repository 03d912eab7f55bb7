#pragma once

#include <cstddef>
#include <string>

namespace sobkern::simd {

enum class Backend { scalar, avx2, neon };

// Backend picked once per process: the widest the CPU supports, unless the
// SOBKER_SIMD env var (scalar|avx2|neon|auto) overrides it.
Backend active_backend();
std::string backend_name();

struct Ops {
    // sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // out[o] += sum_i w[i] * blk[o*inner + i]
    void (*collapse_inner)(const double* blk, const double* w, std::size_t n_outer,
                           std::size_t inner, double* out);
    // dst[i] = sum_t coef[t] * rows[t][i]
    void (*axpy_rows)(double* dst, std::size_t n, const double* const* rows, const double* coefs,
                      std::size_t n_rows);
    // dst[i] = 1 / dst[i]
    void (*reciprocal)(double* dst, std::size_t n);
    // sum_i w[i] / (1 + c*(shift + q[i]))^p, integer p >= 1
    double (*inv_pow_shift_dot)(const double* q, const double* w, std::size_t n, double shift,
                                double c, int p);
    // dst[k*ncols + j] = sum_i m[k*n + i] * src[i*ncols + j], k,i in [0,n)
    void (*mat_apply)(const double* m, int n, const double* src, double* dst, std::size_t ncols);
};

const Ops& ops();            // dispatched
const Ops& ops_scalar();     // reference implementation, always available
const Ops* ops_for(Backend); // nullptr if unavailable on this machine

} // namespace sobkern::simd
