#if defined(__aarch64__)

#include "privehd/kernels.hpp"

#include <arm_neon.h>
#include <cmath>

namespace privehd::kernels::detail {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sumsq_neon(const double* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(a + i);
        acc0 = vaddq_f64(acc0, vmulq_f64(v, v));
    }
    double acc = vaddvq_f64(acc0);
    for (; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double abs_sum_neon(const double* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 = vaddq_f64(acc0, vabsq_f64(vld1q_f64(a + i)));
    }
    double acc = vaddvq_f64(acc0);
    for (; i < n; ++i) acc += std::fabs(a[i]);
    return acc;
}

void axpy_neon(double* acc, double s, const double* x, std::size_t n) {
    const float64x2_t sv = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t r = vaddq_f64(vld1q_f64(acc + i), vmulq_f64(sv, vld1q_f64(x + i)));
        vst1q_f64(acc + i, r);
    }
    for (; i < n; ++i) acc[i] += s * x[i];
}

void mul_add_neon(double* acc, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t r = vaddq_f64(vld1q_f64(acc + i),
                                  vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        vst1q_f64(acc + i, r);
    }
    for (; i < n; ++i) acc[i] += a[i] * b[i];
}

} // namespace privehd::kernels::detail

#endif
