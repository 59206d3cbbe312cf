#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "privehd/error.hpp"
#include "privehd/kernels.hpp"

namespace privehd {

// Value kind of a hypervector. Dimensions are stored as doubles; every kind
// except raw scalar encodings of real-valued features holds exact integers
// (|value| far below 2^53, so all arithmetic on them is exact).
enum class HvKind : std::uint8_t {
    bipolar,   // every element in {-1, +1}
    integer,   // un-quantized encoding / class vector
    quantized, // element of a finite quantization alphabet
};

struct Hypervector {
    std::vector<double> values;
    HvKind kind = HvKind::integer;

    Hypervector() = default;
    Hypervector(std::size_t n, HvKind k) : values(n, 0.0), kind(k) {}
    Hypervector(std::vector<double> v, HvKind k) : values(std::move(v)), kind(k) {}

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }
    const double* data() const { return values.data(); }
    double* data() { return values.data(); }

    bool operator==(const Hypervector& o) const {
        return kind == o.kind && values == o.values;
    }
};

inline void check_same_length(const Hypervector& a, const Hypervector& b) {
    if (a.size() != b.size()) {
        throw dimension_error("hypervector length mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
    }
}

inline double dot(const Hypervector& a, const Hypervector& b) {
    check_same_length(a, b);
    return kernels::dot(a.data(), b.data(), a.size());
}

inline double norm_l2(const Hypervector& a) {
    return std::sqrt(kernels::sumsq(a.data(), a.size()));
}

inline double norm_l1(const Hypervector& a) {
    return kernels::abs_sum(a.data(), a.size());
}

inline double cosine(const Hypervector& a, const Hypervector& b) {
    check_same_length(a, b);
    const double na = norm_l2(a);
    const double nb = norm_l2(b);
    if (na == 0.0 || nb == 0.0) {
        throw contract_error("cosine similarity undefined for a zero-norm operand");
    }
    return dot(a, b) / (na * nb);
}

// Positions at which two bipolar vectors differ.
inline std::size_t hamming(const Hypervector& a, const Hypervector& b) {
    check_same_length(a, b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) ++d;
    }
    return d;
}

} // namespace privehd
