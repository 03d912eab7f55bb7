#include "sobkern/simd.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace sobkern::simd {

namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void collapse_inner_neon(const double* blk, const double* w, std::size_t n_outer,
                         std::size_t inner, double* out) {
    for (std::size_t o = 0; o < n_outer; ++o) out[o] += dot_neon(blk + o * inner, w, inner);
}

void axpy_rows_neon(double* dst, std::size_t n, const double* const* rows, const double* coefs,
                    std::size_t n_rows) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t t = 0; t < n_rows; ++t)
            acc = vfmaq_n_f64(acc, vld1q_f64(rows[t] + i), coefs[t]);
        vst1q_f64(dst + i, acc);
    }
    for (; i < n; ++i) {
        double s = 0;
        for (std::size_t t = 0; t < n_rows; ++t) s += coefs[t] * rows[t][i];
        dst[i] = s;
    }
}

void reciprocal_neon(double* dst, std::size_t n) {
    const float64x2_t one = vdupq_n_f64(1.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vdivq_f64(one, vld1q_f64(dst + i)));
    for (; i < n; ++i) dst[i] = 1.0 / dst[i];
}

double inv_pow_shift_dot_neon(const double* q, const double* w, std::size_t n, double shift,
                              double c, int p) {
    const float64x2_t vshift = vdupq_n_f64(shift);
    const float64x2_t one = vdupq_n_f64(1.0);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t base = vfmaq_n_f64(one, vaddq_f64(vshift, vld1q_f64(q + i)), c);
        float64x2_t f = base;
        for (int k = 1; k < p; ++k) f = vmulq_f64(f, base);
        acc = vaddq_f64(acc, vdivq_f64(vld1q_f64(w + i), f));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) {
        double base = 1.0 + c * (shift + q[i]);
        double f = base;
        for (int k = 1; k < p; ++k) f *= base;
        s += w[i] / f;
    }
    return s;
}

void mat_apply_neon(const double* m, int n, const double* src, double* dst, std::size_t ncols) {
    for (int k = 0; k < n; ++k) {
        double* drow = dst + static_cast<std::size_t>(k) * ncols;
        std::size_t j = 0;
        for (; j + 2 <= ncols; j += 2) {
            float64x2_t acc = vdupq_n_f64(0.0);
            for (int i = 0; i < n; ++i)
                acc = vfmaq_n_f64(acc, vld1q_f64(src + static_cast<std::size_t>(i) * ncols + j),
                                  m[static_cast<std::size_t>(k) * n + i]);
            vst1q_f64(drow + j, acc);
        }
        for (; j < ncols; ++j) {
            double s = 0;
            for (int i = 0; i < n; ++i)
                s += m[static_cast<std::size_t>(k) * n + i] *
                     src[static_cast<std::size_t>(i) * ncols + j];
            drow[j] = s;
        }
    }
}

} // namespace

const Ops* ops_neon_impl() {
    static const Ops o{dot_neon,        collapse_inner_neon, axpy_rows_neon,
                       reciprocal_neon, inv_pow_shift_dot_neon, mat_apply_neon};
    return &o;
}

} // namespace sobkern::simd

#else

namespace sobkern::simd {
const Ops* ops_neon_impl() { return nullptr; }
} // namespace sobkern::simd

#endif
