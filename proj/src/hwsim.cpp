#include "privehd/hwsim.hpp"

#include "privehd/error.hpp"
#include "privehd/rng.hpp"

namespace privehd::hwsim {

bool TieBreakTable::bit(std::uint64_t index) const {
    return (split_seed(seed, index) & 1u) != 0;
}

bool majority6(const std::array<bool, 6>& bits, bool tie) {
    int ones = 0;
    for (bool b : bits) ones += b ? 1 : 0;
    if (ones > 3) return true;
    if (ones < 3) return false;
    return tie;
}

bool approx_sign_accumulate(const std::vector<bool>& column, const TieBreakTable& ties,
                            std::uint64_t tie_base) {
    if (column.empty()) {
        throw contract_error("approx_sign_accumulate: empty column");
    }
    const std::size_t n = column.size();
    const std::size_t groups = (n + 5) / 6;

    // Tie-table layout per column: one tie bit per group, one for the final
    // comparator, then the padding start bit.
    const bool pad_start = ties.bit(tie_base + groups + 1);

    int majority_ones = 0;
    for (std::size_t g = 0; g < groups; ++g) {
        std::array<bool, 6> in{};
        for (std::size_t b = 0; b < 6; ++b) {
            const std::size_t idx = g * 6 + b;
            if (idx < n) {
                in[b] = column[idx];
            } else {
                // Tie off unused LUT inputs with alternating constants.
                in[b] = ((idx - n) % 2 == 0) ? pad_start : !pad_start;
            }
        }
        majority_ones += majority6(in, ties.bit(tie_base + g)) ? 1 : 0;
    }

    // Stages 2+ are an exact adder tree; the output compares the popcount of
    // majority bits against half the group count.
    if (2 * majority_ones > static_cast<int>(groups)) return true;
    if (2 * majority_ones < static_cast<int>(groups)) return false;
    return ties.bit(tie_base + groups);
}

std::pair<int, int> saturating_ternary_tree(const std::vector<int>& values) {
    for (int v : values) {
        if (v < -3 || v > 3) {
            throw contract_error("saturating_ternary_tree: input outside [-3, 3]");
        }
    }
    if (values.empty()) return {0, 1};

    std::size_t width = 1;
    while (width < values.size()) width *= 2;
    std::vector<int> level(values);
    level.resize(width, 0); // zero padding; zeros are a fixed point of the node op

    int scale = 1;
    while (level.size() > 1) {
        std::vector<int> next(level.size() / 2);
        for (std::size_t i = 0; i < next.size(); ++i) {
            int s = level[2 * i] + level[2 * i + 1];
            int t = (s >= 0) ? s / 2 : -((-s + 1) / 2); // truncate LSB (floor by 2)
            if (t < -4) t = -4;
            if (t > 3) t = 3;
            next[i] = t;
        }
        level.swap(next);
        scale *= 2;
    }
    return {level[0], scale};
}

LutCostReport lut_cost(std::size_t d_iv, HwMode mode) {
    if (d_iv < 6) {
        throw config_error("lut_cost: d_iv must be at least 6");
    }
    LutCostReport rep;
    rep.mode = mode;
    const double d = static_cast<double>(d_iv);
    if (mode == HwMode::binary) {
        rep.n_lut_approx = 7.0 / 18.0 * d;
        rep.n_lut_exact = 4.0 / 3.0 * d;
    } else {
        rep.n_lut_approx = 2.0 * d;
        rep.n_lut_exact = 3.0 * d;
    }
    rep.savings_percent = (rep.n_lut_exact - rep.n_lut_approx) / rep.n_lut_exact * 100.0;
    return rep;
}

Hypervector hw_encode_binary(const std::vector<std::size_t>& level_indices,
                             const CodebookSet& cb, const TieBreakTable& ties) {
    if (level_indices.size() != cb.d_iv) {
        throw dimension_error("hw_encode_binary: index count does not match codebook d_iv");
    }
    for (std::size_t lv : level_indices) {
        if (lv >= cb.levels) {
            throw contract_error("hw_encode_binary: level index out of range");
        }
    }
    const std::size_t groups = (cb.d_iv + 5) / 6;
    const std::uint64_t stride = groups + 2;

    Hypervector out(cb.d_hv, HvKind::quantized);
    std::vector<bool> column(cb.d_iv);
    for (std::size_t j = 0; j < cb.d_hv; ++j) {
        for (std::size_t k = 0; k < cb.d_iv; ++k) {
            // XNOR in +-1 algebra: the bipolar product, as a bit.
            column[k] = cb.level_table[level_indices[k]][j] * cb.base[k][j] > 0;
        }
        out[j] = approx_sign_accumulate(column, ties, static_cast<std::uint64_t>(j) * stride)
                     ? +1.0
                     : -1.0;
    }
    return out;
}

} // namespace privehd::hwsim
