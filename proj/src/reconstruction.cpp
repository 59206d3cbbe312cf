#include "privehd/reconstruction.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace privehd {

std::vector<double> decode_scalar(const Hypervector& h, const CodebookSet& cb) {
    if (h.size() != cb.d_hv) {
        throw dimension_error("decode_scalar: hypervector length does not match codebook");
    }
    std::vector<double> v(cb.d_iv);
    for (std::size_t m = 0; m < cb.d_iv; ++m) {
        v[m] = dot(h, cb.base[m]) / static_cast<double>(cb.d_hv);
    }
    return v;
}

std::vector<std::size_t> decode_level(const Hypervector& h, const CodebookSet& cb) {
    if (h.size() != cb.d_hv) {
        throw dimension_error("decode_level: hypervector length does not match codebook");
    }
    std::vector<std::size_t> levels(cb.d_iv);
    Hypervector unbound(cb.d_hv, HvKind::integer);
    for (std::size_t k = 0; k < cb.d_iv; ++k) {
        for (std::size_t j = 0; j < cb.d_hv; ++j) {
            unbound[j] = h[j] * cb.base[k][j];
        }
        double best = 0.0;
        std::size_t best_f = 0;
        for (std::size_t f = 0; f < cb.levels; ++f) {
            const double score = dot(unbound, cb.level_table[f]);
            if (f == 0 || score > best) { // ties toward the lowest level index
                best = score;
                best_f = f;
            }
        }
        levels[k] = best_f;
    }
    return levels;
}

Fidelity fidelity(const std::vector<double>& original, const std::vector<double>& recovered,
                  double max_value) {
    if (original.size() != recovered.size()) {
        throw dimension_error("fidelity: length mismatch");
    }
    if (original.empty()) {
        throw dimension_error("fidelity: empty inputs");
    }
    Fidelity f;
    double acc = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        const double d = original[i] - recovered[i];
        acc += d * d;
    }
    f.mse = acc / static_cast<double>(original.size());
    if (f.mse == 0.0) {
        f.psnr_infinite = true;
        f.psnr_db = std::numeric_limits<double>::infinity();
    } else {
        f.psnr_db = 10.0 * std::log10(max_value * max_value / f.mse);
    }
    return f;
}

ReconstructionReport breach_from_query(const Hypervector& query, const CodebookSet& cb,
                                       const FeatureVector& original, QuantKind scheme,
                                       std::size_t masked_dims) {
    ReconstructionReport rep;
    rep.scheme = scheme;
    rep.masked_dims = masked_dims;
    rep.d_hv = cb.d_hv;
    rep.recovered = decode_scalar(query, cb);
    rep.fid = fidelity(original.values, rep.recovered, original.max);
    return rep;
}

ReconstructionReport breach_from_models(const Model& with, const Model& without,
                                        const CodebookSet& cb, const FeatureVector& original) {
    if (with.num_classes() != without.num_classes() || with.d_hv() != without.d_hv()) {
        throw contract_error("breach_from_models: models have incompatible shapes");
    }
    std::size_t differing = with.num_classes();
    std::size_t count = 0;
    for (std::size_t l = 0; l < with.num_classes(); ++l) {
        if (!(with.classes[l] == without.classes[l])) {
            differing = l;
            ++count;
        }
    }
    if (count != 1) {
        throw contract_error("breach_from_models: expected exactly one differing class, found " +
                             std::to_string(count));
    }
    Hypervector diff(with.d_hv(), HvKind::integer);
    for (std::size_t j = 0; j < with.d_hv(); ++j) {
        diff[j] = with.classes[differing][j] - without.classes[differing][j];
    }
    return breach_from_query(diff, cb, original);
}

void write_pgm(const std::string& path, const std::vector<double>& values, std::size_t width,
               std::size_t height, int max_gray) {
    if (values.size() != width * height) {
        throw dimension_error("write_pgm: width*height does not match value count");
    }
    std::ofstream os(path);
    if (!os) throw io_error("cannot open PGM file for writing: " + path);
    os << "P2\n" << width << " " << height << "\n" << max_gray << "\n";
    for (std::size_t y = 0; y < height; ++y) {
        for (std::size_t x = 0; x < width; ++x) {
            long g = std::lround(values[y * width + x]);
            if (g < 0) g = 0;
            if (g > max_gray) g = max_gray;
            os << g << (x + 1 == width ? "" : " ");
        }
        os << "\n";
    }
    if (!os) throw io_error("write failure on PGM file: " + path);
}

} // namespace privehd
