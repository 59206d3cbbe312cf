#include "privehd/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "privehd/rng.hpp"

namespace privehd {

namespace {
// Standard normal quantiles: Phi(0.43073) = 2/3, Phi(0.67449) = 3/4.
constexpr double kZ_TwoThirds = 0.4307272992954576;
constexpr double kZ_ThreeQuarters = 0.6744897501960817;
} // namespace

const char* quant_kind_name(QuantKind k) {
    switch (k) {
    case QuantKind::none: return "none";
    case QuantKind::binary: return "binary";
    case QuantKind::ternary: return "ternary";
    case QuantKind::ternary_biased: return "ternary_biased";
    case QuantKind::two_bit: return "two_bit";
    }
    return "unknown";
}

QuantKind quant_kind_from_name(const std::string& name) {
    if (name == "none") return QuantKind::none;
    if (name == "binary") return QuantKind::binary;
    if (name == "ternary") return QuantKind::ternary;
    if (name == "ternary_biased") return QuantKind::ternary_biased;
    if (name == "two_bit") return QuantKind::two_bit;
    throw config_error("unknown quantization scheme: " + name);
}

std::vector<std::pair<int, double>> symbol_probs(QuantKind kind) {
    switch (kind) {
    case QuantKind::binary:
        return {{-1, 0.5}, {+1, 0.5}};
    case QuantKind::ternary:
        return {{-1, 1.0 / 3.0}, {0, 1.0 / 3.0}, {+1, 1.0 / 3.0}};
    case QuantKind::ternary_biased:
        return {{-1, 0.25}, {0, 0.5}, {+1, 0.25}};
    case QuantKind::two_bit:
        return {{-2, 0.25}, {-1, 0.25}, {0, 0.25}, {+1, 0.25}};
    case QuantKind::none:
        break;
    }
    throw config_error("symbol_probs: scheme has no finite alphabet");
}

DimensionMask DimensionMask::full(std::size_t n) {
    DimensionMask m;
    m.kept.assign(n, 1);
    m.count_kept = n;
    return m;
}

DimensionMask DimensionMask::random(std::uint64_t seed, std::size_t n, std::size_t keep) {
    if (keep > n) {
        throw config_error("DimensionMask::random: keep count exceeds length");
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Rng rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::size_t j = rng.below(i + 1);
        std::swap(perm[i], perm[j]);
    }
    DimensionMask m;
    m.kept.assign(n, 0);
    for (std::size_t i = 0; i < keep; ++i) m.kept[perm[i]] = 1;
    m.count_kept = keep;
    return m;
}

void DimensionMask::recount() {
    count_kept = 0;
    for (auto b : kept) count_kept += b ? 1 : 0;
}

void apply_mask(Hypervector& h, const DimensionMask& mask) {
    if (h.size() != mask.size()) {
        throw dimension_error("mask length does not match hypervector length");
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!mask.is_kept(i)) h[i] = 0.0;
    }
}

LevelMapping map_features(const FeatureVector& v, std::size_t levels) {
    if (levels < 2) {
        throw config_error("map_features: at least 2 levels required");
    }
    LevelMapping out;
    out.indices.resize(v.size());
    if (v.max <= v.min) {
        out.degenerate_range = true;
        std::fill(out.indices.begin(), out.indices.end(), std::size_t{0});
        return out;
    }
    const double scale = static_cast<double>(levels - 1) / (v.max - v.min);
    for (std::size_t i = 0; i < v.size(); ++i) {
        double t = (v.values[i] - v.min) * scale;
        long idx = std::lround(t);
        if (idx < 0) idx = 0;
        if (idx >= static_cast<long>(levels)) idx = static_cast<long>(levels) - 1;
        out.indices[i] = static_cast<std::size_t>(idx);
    }
    return out;
}

Hypervector encode_scalar(const FeatureVector& v, const CodebookSet& cb) {
    if (v.size() != cb.d_iv) {
        throw dimension_error("encode_scalar: feature count " + std::to_string(v.size()) +
                              " != codebook d_iv " + std::to_string(cb.d_iv));
    }
    Hypervector h(cb.d_hv, HvKind::integer);
    for (std::size_t k = 0; k < cb.d_iv; ++k) {
        kernels::axpy(h.data(), v.values[k], cb.base[k].data(), cb.d_hv);
    }
    return h;
}

Hypervector encode_level(const std::vector<std::size_t>& level_indices, const CodebookSet& cb) {
    if (level_indices.size() != cb.d_iv) {
        throw dimension_error("encode_level: index count does not match codebook d_iv");
    }
    Hypervector h(cb.d_hv, HvKind::integer);
    for (std::size_t k = 0; k < cb.d_iv; ++k) {
        const std::size_t lv = level_indices[k];
        if (lv >= cb.levels) {
            throw contract_error("encode_level: level index " + std::to_string(lv) +
                                 " out of range");
        }
        kernels::mul_add(h.data(), cb.level_table[lv].data(), cb.base[k].data(), cb.d_hv);
    }
    return h;
}

namespace {

// Value strictly below which `frac` of the vector lies (sorted order statistic).
double order_stat(std::vector<double>& sorted, double frac) {
    std::size_t idx = static_cast<std::size_t>(frac * static_cast<double>(sorted.size()));
    if (idx >= sorted.size()) idx = sorted.size() - 1;
    return sorted[idx];
}

int sign_plus(double x) { return x >= 0.0 ? +1 : -1; } // sign(0) -> +1

} // namespace

Hypervector quantize(const Hypervector& h, QuantScheme scheme, std::size_t d_iv) {
    if (scheme.kind == QuantKind::none || h.kind == HvKind::quantized) {
        return h;
    }
    Hypervector q(h.size(), HvKind::quantized);

    if (scheme.kind == QuantKind::binary) {
        for (std::size_t i = 0; i < h.size(); ++i) q[i] = sign_plus(h[i]);
        return q;
    }

    double lo = 0.0, mid = 0.0, hi = 0.0;
    if (scheme.source == ThresholdSource::theoretical) {
        const double sigma = std::sqrt(static_cast<double>(d_iv));
        switch (scheme.kind) {
        case QuantKind::ternary:
            lo = -kZ_TwoThirds * sigma;
            hi = +kZ_TwoThirds * sigma;
            break;
        case QuantKind::ternary_biased:
            lo = -kZ_ThreeQuarters * sigma;
            hi = +kZ_ThreeQuarters * sigma;
            break;
        case QuantKind::two_bit:
            lo = -kZ_ThreeQuarters * sigma;
            mid = 0.0;
            hi = +kZ_ThreeQuarters * sigma;
            break;
        default:
            break;
        }
    } else {
        std::vector<double> sorted(h.values);
        std::sort(sorted.begin(), sorted.end());
        switch (scheme.kind) {
        case QuantKind::ternary:
            lo = order_stat(sorted, 1.0 / 3.0);
            hi = order_stat(sorted, 2.0 / 3.0);
            break;
        case QuantKind::ternary_biased:
            lo = order_stat(sorted, 0.25);
            hi = order_stat(sorted, 0.75);
            break;
        case QuantKind::two_bit:
            lo = order_stat(sorted, 0.25);
            mid = order_stat(sorted, 0.5);
            hi = order_stat(sorted, 0.75);
            break;
        default:
            break;
        }
    }

    if (scheme.kind == QuantKind::two_bit) {
        for (std::size_t i = 0; i < h.size(); ++i) {
            const double x = h[i];
            q[i] = x < lo ? -2.0 : (x < mid ? -1.0 : (x < hi ? 0.0 : +1.0));
        }
    } else {
        for (std::size_t i = 0; i < h.size(); ++i) {
            const double x = h[i];
            q[i] = x < lo ? -1.0 : (x < hi ? 0.0 : +1.0);
        }
    }
    return q;
}

Hypervector obfuscate_query(const Hypervector& h, QuantScheme scheme, std::size_t d_iv,
                            const DimensionMask& mask) {
    Hypervector q = quantize(h, scheme, d_iv);
    apply_mask(q, mask);
    return q;
}

Hypervector encode(const FeatureVector& v, const CodebookSet& cb, EncodingVariant variant) {
    if (variant == EncodingVariant::scalar) {
        return encode_scalar(v, cb);
    }
    return encode_level(map_features(v, cb.levels).indices, cb);
}

} // namespace privehd
