#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "privehd/encoding.hpp"

namespace privehd::hwsim {

// Predetermined tie/padding bits for one circuit instance, regenerable from a
// seed. Bit i is a pure function of (seed, i).
struct TieBreakTable {
    std::uint64_t seed = 0;

    explicit TieBreakTable(std::uint64_t s) : seed(s) {}
    bool bit(std::uint64_t index) const;
};

// LUT-6 majority: true if more than three inputs are true, the predetermined
// tie bit on a 3-3 split.
bool majority6(const std::array<bool, 6>& bits, bool tie);

// First-stage majority LUTs over groups of six, exact adder tree above.
// Short final groups are padded with alternating constants derived from the
// tie table. tie_base offsets the table so each hypervector dimension gets its
// own tie/pad bits.
bool approx_sign_accumulate(const std::vector<bool>& column, const TieBreakTable& ties,
                            std::uint64_t tie_base = 0);

// Saturating 3-bit adder tree: each node adds two values, truncates the LSB
// (floor division by 2) and clamps to [-4, 3]. Returns the root value and the
// scale 2^depth, so root*scale estimates the exact sum. Inputs must lie in
// [-3, 3] (exact sums of ternary triplets).
std::pair<int, int> saturating_ternary_tree(const std::vector<int>& values);

enum class HwMode : std::uint8_t { binary, ternary };

struct LutCostReport {
    HwMode mode = HwMode::binary;
    double n_lut_approx = 0.0;
    double n_lut_exact = 0.0;
    double savings_percent = 0.0;
};

// LUT-6 cost model: binary approx 7/18*d_iv vs exact 4/3*d_iv;
// ternary approx 2*d_iv vs exact 3*d_iv.
LutCostReport lut_cost(std::size_t d_iv, HwMode mode);

// Bit-exact simulation of the approximate binary-quantizing encoder: per
// dimension, form the d_iv bipolar products and run them through the majority
// first stage plus exact adder tree. Output alphabet {-1, +1}.
Hypervector hw_encode_binary(const std::vector<std::size_t>& level_indices,
                             const CodebookSet& cb, const TieBreakTable& ties);

} // namespace privehd::hwsim
