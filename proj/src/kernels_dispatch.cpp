#include "privehd/kernels.hpp"

#include "privehd/error.hpp"

namespace privehd::kernels {

namespace {

struct Table {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sumsq)(const double*, std::size_t);
    double (*abs_sum)(const double*, std::size_t);
    void (*axpy)(double*, double, const double*, std::size_t);
    void (*mul_add)(double*, const double*, const double*, std::size_t);
};

constexpr Table kScalar = {
    detail::dot_scalar, detail::sumsq_scalar, detail::abs_sum_scalar,
    detail::axpy_scalar, detail::mul_add_scalar,
};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Table kAvx2 = {
    detail::dot_avx2, detail::sumsq_avx2, detail::abs_sum_avx2,
    detail::axpy_avx2, detail::mul_add_avx2,
};
#endif

#if defined(__aarch64__)
constexpr Table kNeon = {
    detail::dot_neon, detail::sumsq_neon, detail::abs_sum_neon,
    detail::axpy_neon, detail::mul_add_neon,
};
#endif

bool backend_available(Backend b) {
    switch (b) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Backend detect_best() {
    if (backend_available(Backend::avx2)) return Backend::avx2;
    if (backend_available(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

const Table& table_for(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
        return kAvx2;
#endif
#if defined(__aarch64__)
    case Backend::neon:
        return kNeon;
#endif
    default:
        return kScalar;
    }
}

Backend g_backend = detect_best();
const Table* g_table = &table_for(g_backend);

} // namespace

Backend active_backend() { return g_backend; }

const char* backend_name(Backend b) {
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    }
    return "unknown";
}

Backend force_backend(Backend b) {
    if (!backend_available(b)) {
        throw config_error(std::string("kernel backend not available on this CPU: ") +
                           backend_name(b));
    }
    const Backend prev = g_backend;
    g_backend = b;
    g_table = &table_for(b);
    return prev;
}

double dot(const double* a, const double* b, std::size_t n) { return g_table->dot(a, b, n); }
double sumsq(const double* a, std::size_t n) { return g_table->sumsq(a, n); }
double abs_sum(const double* a, std::size_t n) { return g_table->abs_sum(a, n); }
void axpy(double* acc, double s, const double* x, std::size_t n) { g_table->axpy(acc, s, x, n); }
void mul_add(double* acc, const double* a, const double* b, std::size_t n) {
    g_table->mul_add(acc, a, b, n);
}

} // namespace privehd::kernels
