#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "privehd/codebook.hpp"
#include "privehd/hypervector.hpp"

namespace privehd {

struct FeatureVector {
    std::vector<double> values;
    double min = 0.0;
    double max = 1.0;

    std::size_t size() const { return values.size(); }
};

enum class EncodingVariant : std::uint8_t { scalar, level };

enum class QuantKind : std::uint8_t { none, binary, ternary, ternary_biased, two_bit };
enum class ThresholdSource : std::uint8_t { theoretical, empirical };

struct QuantScheme {
    QuantKind kind = QuantKind::none;
    ThresholdSource source = ThresholdSource::theoretical;
};

const char* quant_kind_name(QuantKind k);
QuantKind quant_kind_from_name(const std::string& name);

// Quantization alphabet of a scheme with the symbol probabilities its
// thresholds target. none is excluded (no finite alphabet).
std::vector<std::pair<int, double>> symbol_probs(QuantKind kind);

struct DimensionMask {
    std::vector<std::uint8_t> kept;
    std::size_t count_kept = 0;

    static DimensionMask full(std::size_t n);
    // Keeps `keep` seeded-random positions out of n.
    static DimensionMask random(std::uint64_t seed, std::size_t n, std::size_t keep);

    std::size_t size() const { return kept.size(); }
    bool is_kept(std::size_t i) const { return kept[i] != 0; }
    bool all_kept() const { return count_kept == kept.size(); }
    void recount();
};

// Zero every dropped dimension; idempotent.
void apply_mask(Hypervector& h, const DimensionMask& mask);

struct LevelMapping {
    std::vector<std::size_t> indices;
    bool degenerate_range = false; // max == min; everything mapped to level 0
};

// Uniform binning of [min, max] into `levels` bins (nearest bin center).
LevelMapping map_features(const FeatureVector& v, std::size_t levels);

// Scalar-weighted encoding: H_j = sum_k v_k * B_{k,j}.
Hypervector encode_scalar(const FeatureVector& v, const CodebookSet& cb);

// Level encoding: H_j = sum_k L_{v_k,j} * B_{k,j} (bipolar product per dim).
Hypervector encode_level(const std::vector<std::size_t>& level_indices, const CodebookSet& cb);

// Quantize an un-quantized encoding. d_iv drives the theoretical thresholds
// (CLT: dims of a level encoding are ~N(0, d_iv)); the empirical source uses
// per-vector order statistics instead and is the safer option for scalar
// encodings of un-normalized features.
Hypervector quantize(const Hypervector& h, QuantScheme scheme, std::size_t d_iv);

// Quantize then mask, in that order, so masked dims are exact zeros on the wire.
Hypervector obfuscate_query(const Hypervector& h, QuantScheme scheme, std::size_t d_iv,
                            const DimensionMask& mask);

// Convenience: full encode of a feature vector under one config.
Hypervector encode(const FeatureVector& v, const CodebookSet& cb, EncodingVariant variant);

} // namespace privehd
