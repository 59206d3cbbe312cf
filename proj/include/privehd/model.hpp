#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "privehd/encoding.hpp"
#include "privehd/hypervector.hpp"

namespace privehd {

struct EncodingConfig {
    std::uint64_t codebook_seed = 0;
    std::size_t d_iv = 0;
    std::size_t d_hv = 0;
    std::size_t levels = 2;
    EncodingVariant variant = EncodingVariant::level;
    QuantScheme scheme;

    CodebookSet make_codebook() const {
        return CodebookSet::generate(codebook_seed, d_iv, d_hv, levels);
    }
};

struct Model {
    EncodingConfig config;
    std::vector<Hypervector> classes;
    std::vector<double> class_norms;
    std::vector<std::int64_t> train_counts;
    DimensionMask mask;
    bool is_private = false;

    std::size_t num_classes() const { return classes.size(); }
    std::size_t d_hv() const { return config.d_hv; }
    bool degenerate(std::size_t label) const {
        return train_counts[label] == 0 || class_norms[label] == 0.0;
    }
    void refresh_norm(std::size_t label);
    void refresh_all_norms();
};

struct PredictionResult {
    std::size_t label = 0;
    std::vector<double> scores; // dot(query, class) / ||class||; -inf for degenerate
};

// Bundle encoded samples into class hypervectors. Order-independent.
Model train(const std::vector<Hypervector>& encoded, const std::vector<std::size_t>& labels,
            std::size_t num_classes, const EncodingConfig& config);

PredictionResult predict(const Model& model, const Hypervector& query);

// One online retraining pass in dataset order; returns the misprediction count.
std::size_t retrain_epoch(Model& model, const std::vector<Hypervector>& encoded,
                          const std::vector<std::size_t>& labels);

// Mask the ceil(s% * d_hv) dimensions with the smallest across-class L1
// magnitude. The mask is global, stored in the model, and applied to every
// class vector.
DimensionMask prune(Model& model, double s_percent);

// Cumulative normalized dot product as the dimensions of one class are
// restored ascending by |class value|. points[i] = fraction after restoring i
// dimensions; endpoints are exactly 0 and 1.
std::vector<double> effectual_curve(const Model& model, const Hypervector& query,
                                    std::size_t class_index);

// Versioned self-describing text format; bit-exact round trip.
void save_model(const Model& model, std::ostream& os);
void save_model(const Model& model, const std::string& path);
Model load_model(std::istream& is);
Model load_model(const std::string& path);

} // namespace privehd
