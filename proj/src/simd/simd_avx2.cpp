// Compiled with -mavx2 -mfma (see src/CMakeLists.txt); callers must check
// CPU support through the dispatcher before taking these entry points.
#include "sobkern/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace sobkern::simd {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void collapse_inner_avx2(const double* blk, const double* w, std::size_t n_outer,
                         std::size_t inner, double* out) {
    for (std::size_t o = 0; o < n_outer; ++o) out[o] += dot_avx2(blk + o * inner, w, inner);
}

void axpy_rows_avx2(double* dst, std::size_t n, const double* const* rows, const double* coefs,
                    std::size_t n_rows) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < n_rows; ++t)
            acc = _mm256_fmadd_pd(_mm256_set1_pd(coefs[t]), _mm256_loadu_pd(rows[t] + i), acc);
        _mm256_storeu_pd(dst + i, acc);
    }
    for (; i < n; ++i) {
        double s = 0;
        for (std::size_t t = 0; t < n_rows; ++t) s += coefs[t] * rows[t][i];
        dst[i] = s;
    }
}

void reciprocal_avx2(double* dst, std::size_t n) {
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(dst + i, _mm256_div_pd(one, _mm256_loadu_pd(dst + i)));
    for (; i < n; ++i) dst[i] = 1.0 / dst[i];
}

double inv_pow_shift_dot_avx2(const double* q, const double* w, std::size_t n, double shift,
                              double c, int p) {
    const __m256d vshift = _mm256_set1_pd(shift);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d base = _mm256_fmadd_pd(vc, _mm256_add_pd(vshift, _mm256_loadu_pd(q + i)), one);
        __m256d f = base;
        for (int k = 1; k < p; ++k) f = _mm256_mul_pd(f, base);
        acc = _mm256_add_pd(acc, _mm256_div_pd(_mm256_loadu_pd(w + i), f));
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        double base = 1.0 + c * (shift + q[i]);
        double f = base;
        for (int k = 1; k < p; ++k) f *= base;
        s += w[i] / f;
    }
    return s;
}

void mat_apply_avx2(const double* m, int n, const double* src, double* dst, std::size_t ncols) {
    for (int k = 0; k < n; ++k) {
        double* drow = dst + static_cast<std::size_t>(k) * ncols;
        std::size_t j = 0;
        for (; j + 4 <= ncols; j += 4) {
            __m256d acc = _mm256_setzero_pd();
            for (int i = 0; i < n; ++i)
                acc = _mm256_fmadd_pd(_mm256_set1_pd(m[static_cast<std::size_t>(k) * n + i]),
                                      _mm256_loadu_pd(src + static_cast<std::size_t>(i) * ncols + j),
                                      acc);
            _mm256_storeu_pd(drow + j, acc);
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

const Ops* ops_avx2_impl() {
    static const Ops o{dot_avx2,        collapse_inner_avx2, axpy_rows_avx2,
                       reciprocal_avx2, inv_pow_shift_dot_avx2, mat_apply_avx2};
    return &o;
}

} // namespace sobkern::simd

#else

namespace sobkern::simd {
const Ops* ops_avx2_impl() { return nullptr; }
} // namespace sobkern::simd

#endif
