#include "privehd/kernels.hpp"

#include <cmath>

namespace privehd::kernels::detail {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sumsq_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double abs_sum_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::fabs(a[i]);
    return acc;
}

void axpy_scalar(double* acc, double s, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += s * x[i];
}

void mul_add_scalar(double* acc, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += a[i] * b[i];
}

} // namespace privehd::kernels::detail
