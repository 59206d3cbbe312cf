#if defined(__x86_64__) || defined(_M_X64)

#include "privehd/kernels.hpp"

#include <immintrin.h>

namespace privehd::kernels::detail {

namespace {
inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
} // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sumsq_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(a + i);
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(v, v));
    }
    double acc = hsum(acc0);
    for (; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double abs_sum_avx2(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, _mm256_and_pd(_mm256_loadu_pd(a + i), kAbsMask));
    }
    double acc = hsum(acc0);
    for (; i < n; ++i) acc += a[i] < 0 ? -a[i] : a[i];
    return acc;
}

void axpy_avx2(double* acc, double s, const double* x, std::size_t n) {
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_add_pd(_mm256_loadu_pd(acc + i),
                                  _mm256_mul_pd(sv, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(acc + i, r);
    }
    for (; i < n; ++i) acc[i] += s * x[i];
}

void mul_add_avx2(double* acc, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_add_pd(_mm256_loadu_pd(acc + i),
                                  _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
        _mm256_storeu_pd(acc + i, r);
    }
    for (; i < n; ++i) acc[i] += a[i] * b[i];
}

} // namespace privehd::kernels::detail

#endif
