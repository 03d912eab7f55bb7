#include "sobkern/simd.hpp"

namespace sobkern::simd {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void collapse_inner_scalar(const double* blk, const double* w, std::size_t n_outer,
                           std::size_t inner, double* out) {
    for (std::size_t o = 0; o < n_outer; ++o) {
        double s = 0;
        const double* row = blk + o * inner;
        for (std::size_t i = 0; i < inner; ++i) s += w[i] * row[i];
        out[o] += s;
    }
}

void axpy_rows_scalar(double* dst, std::size_t n, const double* const* rows, const double* coefs,
                      std::size_t n_rows) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = 0;
    for (std::size_t t = 0; t < n_rows; ++t) {
        const double c = coefs[t];
        const double* r = rows[t];
        for (std::size_t i = 0; i < n; ++i) dst[i] += c * r[i];
    }
}

void reciprocal_scalar(double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = 1.0 / dst[i];
}

double inv_pow_shift_dot_scalar(const double* q, const double* w, std::size_t n, double shift,
                                double c, int p) {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double base = 1.0 + c * (shift + q[i]);
        double f = base;
        for (int k = 1; k < p; ++k) f *= base;
        s += w[i] / f;
    }
    return s;
}

void mat_apply_scalar(const double* m, int n, const double* src, double* dst, std::size_t ncols) {
    for (int k = 0; k < n; ++k) {
        double* drow = dst + static_cast<std::size_t>(k) * ncols;
        for (std::size_t j = 0; j < ncols; ++j) drow[j] = 0;
        for (int i = 0; i < n; ++i) {
            const double mk = m[static_cast<std::size_t>(k) * n + i];
            const double* srow = src + static_cast<std::size_t>(i) * ncols;
            for (std::size_t j = 0; j < ncols; ++j) drow[j] += mk * srow[j];
        }
    }
}

} // namespace

const Ops& ops_scalar() {
    static const Ops o{dot_scalar,        collapse_inner_scalar, axpy_rows_scalar,
                       reciprocal_scalar, inv_pow_shift_dot_scalar, mat_apply_scalar};
    return o;
}

} // namespace sobkern::simd
