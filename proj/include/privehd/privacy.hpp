#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "privehd/model.hpp"

namespace privehd {

struct PrivacyParams {
    double epsilon = 0.0; // infinity() means no noise was injected
    double delta = 0.0;
    double sigma = 0.0;
    double delta_f = 0.0; // L2 sensitivity used for the release
    std::uint64_t noise_seed = 0;
};

enum class SensitivitySource : std::uint8_t { formula, monte_carlo };

struct SensitivityReport {
    double l1 = 0.0;
    double l2 = 0.0;
    SensitivitySource source = SensitivitySource::formula;
    std::size_t d_iv = 0;
    std::size_t d_hv = 0;       // kept dimensions for a pruned model
    QuantKind scheme = QuantKind::none;
};

// L1 sensitivity of an un-quantized level encoding: sqrt(2*d_iv/pi) * d_hv
// (folded-normal mean of N(0, d_iv) dims).
double sensitivity_l1(double d_iv, double d_hv);

// L2 sensitivity of an un-quantized level encoding: sqrt(d_hv * d_iv).
double sensitivity_l2(double d_iv, double d_hv);

// L2 sensitivity of a quantized encoding from its symbol distribution:
// (sum_k p_k * d_hv * k^2)^(1/2).
double sensitivity_quantized(const std::vector<std::pair<int, double>>& probs, double d_hv);
double sensitivity_quantized(QuantKind kind, double d_hv);

// Smallest sigma meeting the (epsilon, delta) Gaussian-mechanism bound
// delta >= (4/5) * exp(-(sigma*epsilon)^2 / 2), i.e.
// sigma = sqrt(2*ln(4/(5*delta))) / epsilon. Requires delta < 4/5.
double calibrate(double epsilon, double delta);

// Add seeded i.i.d. N(0, (delta_f*sigma)^2) noise to every unmasked dimension
// of every class, round to integers, and mark the model private. A private
// model cannot be released again or retrained.
void dp_release(Model& model, double delta_f, double sigma, std::uint64_t noise_seed);

struct DpPipelineConfig {
    std::size_t num_classes = 2;
    std::size_t d_iv = 0;
    std::size_t d_hv = 10000;
    std::size_t levels = 16;
    EncodingVariant variant = EncodingVariant::level;
    QuantScheme scheme;
    double prune_percent = 0.0;
    int retrain_epochs = 0;
    double epsilon = 1.0; // infinity() skips noise entirely
    double delta = 1e-5;
    std::uint64_t codebook_seed = 0;
    std::uint64_t noise_seed = 0;
};

struct DpPipelineResult {
    Model model;
    PrivacyParams params;
    SensitivityReport sensitivity;
};

// Full differentially private training flow: encode (with quantization) ->
// train -> prune -> retrain -> sensitivity over kept dims -> calibrate ->
// release.
DpPipelineResult dp_train_pipeline(const std::vector<FeatureVector>& samples,
                                   const std::vector<std::size_t>& labels,
                                   const DpPipelineConfig& config);

} // namespace privehd
