#include "privehd/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace privehd {

void Model::refresh_norm(std::size_t label) {
    class_norms[label] = norm_l2(classes[label]);
}

void Model::refresh_all_norms() {
    for (std::size_t l = 0; l < classes.size(); ++l) refresh_norm(l);
}

Model train(const std::vector<Hypervector>& encoded, const std::vector<std::size_t>& labels,
            std::size_t num_classes, const EncodingConfig& config) {
    if (num_classes < 2) {
        throw config_error("train: at least 2 classes required");
    }
    if (encoded.size() != labels.size()) {
        throw dimension_error("train: sample/label count mismatch");
    }
    Model m;
    m.config = config;
    m.classes.assign(num_classes, Hypervector(config.d_hv, HvKind::integer));
    m.class_norms.assign(num_classes, 0.0);
    m.train_counts.assign(num_classes, 0);
    m.mask = DimensionMask::full(config.d_hv);

    for (std::size_t i = 0; i < encoded.size(); ++i) {
        const std::size_t l = labels[i];
        if (l >= num_classes) {
            throw contract_error("train: label " + std::to_string(l) + " out of range");
        }
        if (encoded[i].size() != config.d_hv) {
            throw dimension_error("train: encoded sample length mismatch");
        }
        kernels::axpy(m.classes[l].data(), 1.0, encoded[i].data(), config.d_hv);
        ++m.train_counts[l];
    }
    m.refresh_all_norms();
    return m;
}

PredictionResult predict(const Model& model, const Hypervector& query) {
    if (query.size() != model.d_hv()) {
        throw dimension_error("predict: query length mismatch");
    }
    PredictionResult r;
    r.scores.resize(model.num_classes());
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_label = 0;
    bool any = false;
    for (std::size_t l = 0; l < model.num_classes(); ++l) {
        if (model.degenerate(l)) {
            r.scores[l] = -std::numeric_limits<double>::infinity();
            continue;
        }
        r.scores[l] = dot(query, model.classes[l]) / model.class_norms[l];
        if (!any || r.scores[l] > best) { // ties break toward the lowest index
            best = r.scores[l];
            best_label = l;
            any = true;
        }
    }
    if (!any) {
        throw contract_error("predict: all classes are degenerate");
    }
    r.label = best_label;
    return r;
}

std::size_t retrain_epoch(Model& model, const std::vector<Hypervector>& encoded,
                          const std::vector<std::size_t>& labels) {
    if (model.is_private) {
        throw contract_error("retrain_epoch: retraining a released private model is forbidden");
    }
    if (encoded.size() != labels.size()) {
        throw dimension_error("retrain_epoch: sample/label count mismatch");
    }
    std::size_t mispredicted = 0;
    for (std::size_t i = 0; i < encoded.size(); ++i) {
        const std::size_t truth = labels[i];
        const PredictionResult r = predict(model, encoded[i]);
        if (r.label == truth) continue;
        ++mispredicted;
        // Online update: move the sample from the wrong class to the right one,
        // respecting the prune mask, and refresh the two touched norms now.
        for (std::size_t j = 0; j < model.d_hv(); ++j) {
            if (!model.mask.is_kept(j)) continue;
            model.classes[truth][j] += encoded[i][j];
            model.classes[r.label][j] -= encoded[i][j];
        }
        model.refresh_norm(truth);
        model.refresh_norm(r.label);
    }
    return mispredicted;
}

DimensionMask prune(Model& model, double s_percent) {
    if (s_percent < 0.0 || s_percent >= 100.0) {
        throw config_error("prune: s must be in [0, 100)");
    }
    const std::size_t n = model.d_hv();
    const std::size_t drop =
        static_cast<std::size_t>(std::ceil(s_percent / 100.0 * static_cast<double>(n)));
    if (drop >= n) {
        throw config_error("prune: cannot prune every dimension");
    }

    // Across-class L1 magnitude per dimension; lowest-magnitude dims go first.
    std::vector<double> magnitude(n, 0.0);
    for (const auto& c : model.classes) {
        for (std::size_t j = 0; j < n; ++j) magnitude[j] += std::fabs(c[j]);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return magnitude[a] < magnitude[b]; });

    DimensionMask mask = DimensionMask::full(n);
    for (std::size_t i = 0; i < drop; ++i) {
        mask.kept[order[i]] = 0;
    }
    mask.recount();

    model.mask = mask;
    for (auto& c : model.classes) apply_mask(c, mask);
    model.refresh_all_norms();
    return mask;
}

std::vector<double> effectual_curve(const Model& model, const Hypervector& query,
                                    std::size_t class_index) {
    if (class_index >= model.num_classes()) {
        throw config_error("effectual_curve: class index out of range");
    }
    const Hypervector& c = model.classes[class_index];
    const double full = dot(query, c);
    if (full == 0.0) {
        throw contract_error("effectual_curve: full dot product is zero");
    }
    const std::size_t n = model.d_hv();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::fabs(c[a]) < std::fabs(c[b]);
    });

    std::vector<double> points(n + 1);
    points[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += query[order[i]] * c[order[i]];
        points[i + 1] = acc / full;
    }
    points[n] = 1.0; // acc == full exactly for integer-valued data
    return points;
}

// --- serialization ---------------------------------------------------------

namespace {

constexpr const char* kMagic = "privehd-model";
constexpr int kVersion = 1;

void write_value(std::ostream& os, double v) {
    if (v == std::floor(v) && std::fabs(v) < 9.0e15) {
        os << static_cast<long long>(v);
    } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%a", v); // hexfloat: exact round trip
        os << buf;
    }
}

double read_value(std::istream& is, const char* what) {
    std::string tok;
    if (!(is >> tok)) throw io_error(std::string("model file: missing ") + what);
    try {
        return std::stod(tok);
    } catch (const std::exception&) {
        throw io_error(std::string("model file: bad value for ") + what + ": " + tok);
    }
}

const char* variant_name(EncodingVariant v) {
    return v == EncodingVariant::scalar ? "scalar" : "level";
}

const char* source_name(ThresholdSource s) {
    return s == ThresholdSource::theoretical ? "theoretical" : "empirical";
}

} // namespace

void save_model(const Model& model, std::ostream& os) {
    os << kMagic << " v" << kVersion << "\n";
    os << "codebook_seed " << model.config.codebook_seed << "\n";
    os << "d_iv " << model.config.d_iv << "\n";
    os << "d_hv " << model.config.d_hv << "\n";
    os << "levels " << model.config.levels << "\n";
    os << "variant " << variant_name(model.config.variant) << "\n";
    os << "scheme " << quant_kind_name(model.config.scheme.kind) << " "
       << source_name(model.config.scheme.source) << "\n";
    os << "num_classes " << model.num_classes() << "\n";
    os << "private " << (model.is_private ? 1 : 0) << "\n";

    // Run-length encoded kept bitmap: first bit value, then run lengths.
    os << "mask_rle " << (model.mask.kept.empty() ? 0 : int(model.mask.kept[0]));
    std::size_t run = 0;
    std::uint8_t cur = model.mask.kept.empty() ? 0 : model.mask.kept[0];
    for (std::uint8_t b : model.mask.kept) {
        if (b == cur) {
            ++run;
        } else {
            os << " " << run;
            cur = b;
            run = 1;
        }
    }
    if (run > 0) os << " " << run;
    os << "\n";

    os << "train_counts";
    for (auto c : model.train_counts) os << " " << c;
    os << "\n";

    for (std::size_t l = 0; l < model.num_classes(); ++l) {
        os << "class " << l;
        for (double v : model.classes[l].values) {
            os << " ";
            write_value(os, v);
        }
        os << "\n";
    }
    os << "end\n";
}

void save_model(const Model& model, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open model file for writing: " + path);
    save_model(model, os);
    if (!os) throw io_error("write failure on model file: " + path);
}

Model load_model(std::istream& is) {
    std::string magic, version;
    if (!(is >> magic >> version) || magic != kMagic || version != "v1") {
        throw io_error("not a privehd model file (bad magic/version)");
    }
    Model m;
    auto expect_key = [&](const char* key) {
        std::string k;
        if (!(is >> k) || k != key) {
            throw io_error(std::string("model file: expected key '") + key + "'");
        }
    };

    expect_key("codebook_seed");
    is >> m.config.codebook_seed;
    expect_key("d_iv");
    is >> m.config.d_iv;
    expect_key("d_hv");
    is >> m.config.d_hv;
    expect_key("levels");
    is >> m.config.levels;
    expect_key("variant");
    {
        std::string v;
        is >> v;
        if (v == "scalar") m.config.variant = EncodingVariant::scalar;
        else if (v == "level") m.config.variant = EncodingVariant::level;
        else throw io_error("model file: unknown encoding variant: " + v);
    }
    expect_key("scheme");
    {
        std::string k, s;
        is >> k >> s;
        m.config.scheme.kind = quant_kind_from_name(k);
        if (s == "theoretical") m.config.scheme.source = ThresholdSource::theoretical;
        else if (s == "empirical") m.config.scheme.source = ThresholdSource::empirical;
        else throw io_error("model file: unknown threshold source: " + s);
    }
    std::size_t num_classes = 0;
    expect_key("num_classes");
    is >> num_classes;
    expect_key("private");
    {
        int p = 0;
        is >> p;
        m.is_private = p != 0;
    }

    expect_key("mask_rle");
    {
        int first = 0;
        is >> first;
        m.mask.kept.clear();
        m.mask.kept.reserve(m.config.d_hv);
        std::uint8_t cur = first ? 1 : 0;
        while (m.mask.kept.size() < m.config.d_hv) {
            std::size_t run = 0;
            if (!(is >> run)) throw io_error("model file: truncated mask RLE");
            m.mask.kept.insert(m.mask.kept.end(), run, cur);
            cur = cur ? 0 : 1;
        }
        if (m.mask.kept.size() != m.config.d_hv) {
            throw io_error("model file: mask RLE length mismatch");
        }
        m.mask.recount();
    }

    expect_key("train_counts");
    m.train_counts.resize(num_classes);
    for (auto& c : m.train_counts) {
        if (!(is >> c)) throw io_error("model file: truncated train_counts");
    }

    m.classes.assign(num_classes, Hypervector(m.config.d_hv, HvKind::integer));
    for (std::size_t l = 0; l < num_classes; ++l) {
        expect_key("class");
        std::size_t idx = 0;
        is >> idx;
        if (idx != l) throw io_error("model file: class blocks out of order");
        for (std::size_t j = 0; j < m.config.d_hv; ++j) {
            m.classes[l][j] = read_value(is, "class value");
        }
    }
    expect_key("end");
    m.class_norms.resize(num_classes);
    m.refresh_all_norms();
    return m;
}

Model load_model(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open model file: " + path);
    return load_model(is);
}

} // namespace privehd
