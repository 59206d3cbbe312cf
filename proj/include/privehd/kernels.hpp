#pragma once

#include <cstddef>
#include <string>

namespace privehd::kernels {

// Dense double-array kernels behind every hot loop (dot products, norms,
// bundling, encoding accumulation). A scalar reference implementation always
// exists; wider variants (AVX2 on x86-64, NEON on aarch64) are selected at
// runtime from CPU capabilities and are equivalence-tested against the
// reference. All hypervector data is integer-valued (exactly representable
// in double), so vectorized reassociation of the sums is still exact.

enum class Backend { scalar, avx2, neon };

Backend active_backend();
const char* backend_name(Backend b);

// Test hook: force a specific backend. Throws config_error if the requested
// backend is not available on this CPU. Returns the previously active one.
Backend force_backend(Backend b);

// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i a[i]^2
double sumsq(const double* a, std::size_t n);

// sum_i |a[i]|
double abs_sum(const double* a, std::size_t n);

// acc[i] += s * x[i]
void axpy(double* acc, double s, const double* x, std::size_t n);

// acc[i] += a[i] * b[i]
void mul_add(double* acc, const double* a, const double* b, std::size_t n);

namespace detail {
double dot_scalar(const double* a, const double* b, std::size_t n);
double sumsq_scalar(const double* a, std::size_t n);
double abs_sum_scalar(const double* a, std::size_t n);
void axpy_scalar(double* acc, double s, const double* x, std::size_t n);
void mul_add_scalar(double* acc, const double* a, const double* b, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* a, const double* b, std::size_t n);
double sumsq_avx2(const double* a, std::size_t n);
double abs_sum_avx2(const double* a, std::size_t n);
void axpy_avx2(double* acc, double s, const double* x, std::size_t n);
void mul_add_avx2(double* acc, const double* a, const double* b, std::size_t n);
#endif

#if defined(__aarch64__)
double dot_neon(const double* a, const double* b, std::size_t n);
double sumsq_neon(const double* a, std::size_t n);
double abs_sum_neon(const double* a, std::size_t n);
void axpy_neon(double* acc, double s, const double* x, std::size_t n);
void mul_add_neon(double* acc, const double* a, const double* b, std::size_t n);
#endif
} // namespace detail

} // namespace privehd::kernels
