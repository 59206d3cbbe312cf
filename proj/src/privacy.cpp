#include "privehd/privacy.hpp"

#include <cmath>
#include <limits>

#include "privehd/rng.hpp"

namespace privehd {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double sensitivity_l1(double d_iv, double d_hv) {
    if (d_iv <= 0.0 || d_hv <= 0.0) {
        throw config_error("sensitivity_l1: arguments must be positive");
    }
    return std::sqrt(2.0 * d_iv / kPi) * d_hv;
}

double sensitivity_l2(double d_iv, double d_hv) {
    if (d_iv <= 0.0 || d_hv <= 0.0) {
        throw config_error("sensitivity_l2: arguments must be positive");
    }
    return std::sqrt(d_hv * d_iv);
}

double sensitivity_quantized(const std::vector<std::pair<int, double>>& probs, double d_hv) {
    double total_p = 0.0;
    double acc = 0.0;
    for (const auto& [k, p] : probs) {
        total_p += p;
        acc += p * d_hv * static_cast<double>(k) * static_cast<double>(k);
    }
    if (std::fabs(total_p - 1.0) > 1e-9) {
        throw contract_error("sensitivity_quantized: symbol probabilities must sum to 1");
    }
    return std::sqrt(acc);
}

double sensitivity_quantized(QuantKind kind, double d_hv) {
    return sensitivity_quantized(symbol_probs(kind), d_hv);
}

double calibrate(double epsilon, double delta) {
    if (epsilon <= 0.0) {
        throw config_error("calibrate: epsilon must be positive");
    }
    if (delta <= 0.0 || delta >= 1.0) {
        throw config_error("calibrate: delta must lie in (0, 1)");
    }
    if (delta >= 4.0 / 5.0) {
        throw config_error("calibrate: bound is vacuous for delta >= 4/5");
    }
    return std::sqrt(2.0 * std::log(4.0 / (5.0 * delta))) / epsilon;
}

void dp_release(Model& model, double delta_f, double sigma, std::uint64_t noise_seed) {
    if (model.is_private) {
        throw contract_error("dp_release: model was already released; double release forbidden");
    }
    if (delta_f < 0.0 || sigma < 0.0) {
        throw config_error("dp_release: delta_f and sigma must be non-negative");
    }
    const double noise_std = delta_f * sigma;
    if (noise_std > 0.0) {
        Rng rng(noise_seed);
        for (auto& c : model.classes) {
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (!model.mask.is_kept(j)) continue; // pruned dims stay exactly zero
                c[j] = static_cast<double>(std::llround(c[j] + noise_std * rng.normal()));
            }
        }
        model.refresh_all_norms();
    }
    model.is_private = true;
}

DpPipelineResult dp_train_pipeline(const std::vector<FeatureVector>& samples,
                                   const std::vector<std::size_t>& labels,
                                   const DpPipelineConfig& config) {
    if (samples.empty() || samples.size() != labels.size()) {
        throw config_error("dp_train_pipeline: empty or inconsistent training data");
    }

    EncodingConfig enc;
    enc.codebook_seed = config.codebook_seed;
    enc.d_iv = config.d_iv ? config.d_iv : samples.front().size();
    enc.d_hv = config.d_hv;
    enc.levels = config.levels;
    enc.variant = config.variant;
    enc.scheme = config.scheme;
    const CodebookSet cb = enc.make_codebook();

    std::vector<Hypervector> encoded;
    encoded.reserve(samples.size());
    for (const auto& s : samples) {
        encoded.push_back(quantize(encode(s, cb, enc.variant), enc.scheme, enc.d_iv));
    }

    DpPipelineResult out;
    out.model = train(encoded, labels, config.num_classes, enc);
    if (config.prune_percent > 0.0) {
        prune(out.model, config.prune_percent);
    }
    for (int e = 0; e < config.retrain_epochs; ++e) {
        retrain_epoch(out.model, encoded, labels);
    }

    const double kept = static_cast<double>(out.model.mask.count_kept);
    out.sensitivity.d_iv = enc.d_iv;
    out.sensitivity.d_hv = out.model.mask.count_kept;
    out.sensitivity.scheme = enc.scheme.kind;
    out.sensitivity.source = SensitivitySource::formula;
    out.sensitivity.l1 = sensitivity_l1(static_cast<double>(enc.d_iv), kept);
    if (enc.scheme.kind == QuantKind::none) {
        out.sensitivity.l2 = sensitivity_l2(static_cast<double>(enc.d_iv), kept);
    } else {
        out.sensitivity.l2 = sensitivity_quantized(enc.scheme.kind, kept);
    }

    out.params.delta = config.delta;
    out.params.delta_f = out.sensitivity.l2;
    out.params.noise_seed = config.noise_seed;
    out.params.epsilon = config.epsilon;
    if (std::isinf(config.epsilon)) {
        out.params.sigma = 0.0;
        out.model.is_private = false;
    } else {
        out.params.sigma = calibrate(config.epsilon, config.delta);
        dp_release(out.model, out.params.delta_f, out.params.sigma, config.noise_seed);
    }
    return out;
}

} // namespace privehd
