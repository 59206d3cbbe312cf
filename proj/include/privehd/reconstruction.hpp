#pragma once

#include <string>
#include <vector>

#include "privehd/encoding.hpp"
#include "privehd/model.hpp"

namespace privehd {

struct Fidelity {
    double mse = 0.0;
    double psnr_db = 0.0;
    bool psnr_infinite = false; // mse == 0
};

struct ReconstructionReport {
    std::vector<double> recovered;
    Fidelity fid;
    QuantKind scheme = QuantKind::none;
    std::size_t masked_dims = 0;
    std::size_t d_hv = 0;
};

// Linear inversion of the scalar encoding: v_m = dot(h, B_m) / d_hv.
// Exact for d_iv == 1; cross-talk error otherwise.
std::vector<double> decode_scalar(const Hypervector& h, const CodebookSet& cb);

// Level-encoding inversion: unbind with each base vector, then nearest level
// by dot product (ties toward the lowest level index).
std::vector<std::size_t> decode_level(const Hypervector& h, const CodebookSet& cb);

// mse over features; psnr = 10*log10(max_value^2 / mse), infinite for mse 0.
Fidelity fidelity(const std::vector<double>& original, const std::vector<double>& recovered,
                  double max_value);

// Attack on an offloaded query hypervector.
ReconstructionReport breach_from_query(const Hypervector& query, const CodebookSet& cb,
                                       const FeatureVector& original,
                                       QuantKind scheme = QuantKind::none,
                                       std::size_t masked_dims = 0);

// Attack on adjacent models (trained sets differing by one sample): the
// difference of the one differing class pair is the encoding of the missing
// sample, which is then decoded. Throws if zero or more than one class differs.
ReconstructionReport breach_from_models(const Model& with, const Model& without,
                                        const CodebookSet& cb, const FeatureVector& original);

// Plain (P2) PGM dump of an image-like feature vector for visual inspection.
void write_pgm(const std::string& path, const std::vector<double>& values, std::size_t width,
               std::size_t height, int max_gray);

} // namespace privehd
