#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace privehd {

// splitmix64; used to derive independent sub-seeds from one master seed.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seedable RNG with fixed mappings to uniform/normal/bipolar values.
// The engine is std::mt19937_64 (bit-exact output mandated by the standard);
// all value mappings are implemented here rather than via std::*_distribution,
// whose outputs vary across standard libraries. Codebooks regenerated from a
// seed are therefore bit-identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; one spare value cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    // +1 or -1, one pooled engine bit per call.
    int bipolar() {
        if (pool_bits_ == 0) {
            pool_ = next_u64();
            pool_bits_ = 64;
        }
        const int b = static_cast<int>(pool_ & 1u);
        pool_ >>= 1;
        --pool_bits_;
        return b ? +1 : -1;
    }

    bool coin() { return bipolar() > 0; }

private:
    std::mt19937_64 eng_;
    std::uint64_t pool_ = 0;
    int pool_bits_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace privehd
