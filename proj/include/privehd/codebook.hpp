#pragma once

#include <cstdint>
#include <vector>

#include "privehd/hypervector.hpp"

namespace privehd {

// Base (per-feature location) and level hypervectors, regenerable bit-exactly
// from a single 64-bit seed. The encoder and the reconstruction attacker share
// these projection keys; only (seed, d_iv, d_hv, levels) is ever persisted.
struct CodebookSet {
    std::uint64_t seed = 0;
    std::size_t d_iv = 0;
    std::size_t d_hv = 0;
    std::size_t levels = 0;
    std::vector<Hypervector> base;        // d_iv bipolar rows
    std::vector<Hypervector> level_table; // `levels` bipolar rows

    static CodebookSet generate(std::uint64_t seed, std::size_t d_iv, std::size_t d_hv,
                                std::size_t levels);
};

// i.i.d. uniform bipolar rows; deterministic in the seed.
std::vector<Hypervector> gen_base(std::uint64_t seed, std::size_t d_iv, std::size_t d_hv);

// Level 0 is i.i.d. bipolar; each successor flips exactly floor(d_hv/(2*levels))
// positions of its predecessor. Flip positions are drawn without replacement
// across all steps, so inter-level Hamming distances are exact and monotone.
std::vector<Hypervector> gen_levels(std::uint64_t seed, std::size_t levels, std::size_t d_hv);

} // namespace privehd
