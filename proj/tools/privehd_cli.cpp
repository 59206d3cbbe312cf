// privehd: experiment driver for hyperdimensional classification with
// differentially private model release, inference obfuscation, the encoding
// reversal attack, and the approximate-hardware encoder simulation.
//
// Every run is reproducible from --master-seed: unset sub-seeds are derived
// from it with a fixed splitting rule (codebook=1, noise=2, split=3, ties=4,
// data=5 via splitmix64). All experiment output is JSON-lines, one record per
// measurement, each embedding the fully resolved configuration.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "privehd/data_io.hpp"
#include "privehd/hwsim.hpp"
#include "privehd/model.hpp"
#include "privehd/privacy.hpp"
#include "privehd/reconstruction.hpp"
#include "privehd/rng.hpp"

using nlohmann::json;
using namespace privehd;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitConfig = 3;
constexpr int kExitContract = 4;

constexpr std::uint64_t kSeedUnset = std::numeric_limits<std::uint64_t>::max();

struct RunConfig {
    // data
    std::string dataset_path;
    bool synthetic = false;
    std::size_t classes = 4;
    std::size_t d_iv = 64;
    std::size_t samples_per_class = 200;
    double cluster_std = 0.08;
    double train_fraction = 0.75;
    // encoding
    std::string variant = "level";
    std::size_t d_hv = 10000;
    std::size_t levels = 16;
    std::string scheme = "none";
    std::string threshold_source = "theoretical";
    // pipeline
    double prune_percent = 0.0;
    int epochs = 0;
    double epsilon = 1.0;
    double delta = 1e-5;
    std::size_t mask_size = 0; // dims masked out for inference obfuscation
    // seeds
    std::uint64_t master_seed = 42;
    std::uint64_t codebook_seed = kSeedUnset;
    std::uint64_t noise_seed = kSeedUnset;
    std::uint64_t split_seed_v = kSeedUnset;
    std::uint64_t ties_seed = kSeedUnset;
    std::uint64_t data_seed = kSeedUnset;
    // io
    std::string output_path; // JSON-lines; empty = stdout
    std::string model_in;
    std::string model_out;
    std::string csv_out;

    void resolve_seeds() {
        if (codebook_seed == kSeedUnset) codebook_seed = privehd::split_seed(master_seed, 1);
        if (noise_seed == kSeedUnset) noise_seed = privehd::split_seed(master_seed, 2);
        if (split_seed_v == kSeedUnset) split_seed_v = privehd::split_seed(master_seed, 3);
        if (ties_seed == kSeedUnset) ties_seed = privehd::split_seed(master_seed, 4);
        if (data_seed == kSeedUnset) data_seed = privehd::split_seed(master_seed, 5);
    }

    QuantScheme quant_scheme() const {
        QuantScheme s;
        s.kind = quant_kind_from_name(scheme);
        s.source = threshold_source == "empirical" ? ThresholdSource::empirical
                                                   : ThresholdSource::theoretical;
        return s;
    }

    EncodingVariant encoding_variant() const {
        if (variant == "scalar") return EncodingVariant::scalar;
        if (variant == "level") return EncodingVariant::level;
        throw config_error("unknown encoding variant: " + variant);
    }

    json to_json() const {
        json j;
        j["dataset"] = synthetic ? "synthetic" : dataset_path;
        if (synthetic) {
            j["classes"] = classes;
            j["d_iv"] = d_iv;
            j["samples_per_class"] = samples_per_class;
            j["cluster_std"] = cluster_std;
        }
        j["train_fraction"] = train_fraction;
        j["variant"] = variant;
        j["d_hv"] = d_hv;
        j["levels"] = levels;
        j["scheme"] = scheme;
        j["threshold_source"] = threshold_source;
        j["prune_percent"] = prune_percent;
        j["epochs"] = epochs;
        j["epsilon"] = std::isinf(epsilon) ? json("inf") : json(epsilon);
        j["delta"] = delta;
        j["mask_size"] = mask_size;
        j["master_seed"] = master_seed;
        j["codebook_seed"] = codebook_seed;
        j["noise_seed"] = noise_seed;
        j["split_seed"] = split_seed_v;
        j["ties_seed"] = ties_seed;
        j["data_seed"] = data_seed;
        return j;
    }
};

class RecordSink {
public:
    explicit RecordSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw io_error("cannot open output file: " + path);
        }
    }
    void emit(const json& record) {
        std::ostream& os = file_.is_open() ? file_ : std::cout;
        os << record.dump() << "\n";
    }

private:
    std::ofstream file_;
};

Dataset load_dataset(const RunConfig& cfg) {
    if (cfg.synthetic) {
        SyntheticSpec spec;
        spec.num_classes = cfg.classes;
        spec.d_iv = cfg.d_iv;
        spec.samples_per_class = cfg.samples_per_class;
        spec.cluster_std = cfg.cluster_std;
        spec.seed = cfg.data_seed;
        return gen_synthetic(spec);
    }
    if (cfg.dataset_path.empty()) {
        throw config_error("either --dataset or --synthetic is required");
    }
    return load_csv(cfg.dataset_path);
}

std::vector<Hypervector> encode_dataset(const Dataset& ds, const CodebookSet& cb,
                                        EncodingVariant variant, QuantScheme scheme) {
    std::vector<Hypervector> out;
    out.reserve(ds.size());
    for (const auto& s : ds.samples) {
        out.push_back(quantize(encode(s, cb, variant), scheme, cb.d_iv));
    }
    return out;
}

double evaluate(const Model& model, const CodebookSet& cb, const Dataset& test,
                QuantScheme query_scheme, const DimensionMask* mask) {
    std::size_t correct = 0;
    for (std::size_t i = 0; i < test.size(); ++i) {
        Hypervector q = encode(test.samples[i], cb, model.config.variant);
        q = quantize(q, query_scheme, cb.d_iv);
        if (mask != nullptr) apply_mask(q, *mask);
        if (predict(model, q).label == test.labels[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

EncodingConfig encoding_config(const RunConfig& cfg, std::size_t d_iv) {
    EncodingConfig enc;
    enc.codebook_seed = cfg.codebook_seed;
    enc.d_iv = d_iv;
    enc.d_hv = cfg.d_hv;
    enc.levels = cfg.levels;
    enc.variant = cfg.encoding_variant();
    enc.scheme = cfg.quant_scheme();
    return enc;
}

// --- subcommands -----------------------------------------------------------

int cmd_gen_data(const RunConfig& cfg) {
    RunConfig c = cfg;
    c.synthetic = true;
    Dataset ds = load_dataset(c);
    if (cfg.csv_out.empty()) throw config_error("gen-data requires --csv-out");
    save_csv(ds, cfg.csv_out);
    RecordSink sink(cfg.output_path);
    json rec;
    rec["record"] = "gen-data";
    rec["config"] = c.to_json();
    rec["samples"] = ds.size();
    rec["path"] = cfg.csv_out;
    sink.emit(rec);
    return 0;
}

int cmd_train(const RunConfig& cfg) {
    Dataset ds = load_dataset(cfg);
    auto [train_set, test_set] = split(ds, cfg.train_fraction, cfg.split_seed_v);
    EncodingConfig enc = encoding_config(cfg, ds.d_iv());
    const CodebookSet cb = enc.make_codebook();

    auto encoded = encode_dataset(train_set, cb, enc.variant, enc.scheme);
    Model model = train(encoded, train_set.labels, ds.num_classes, enc);
    const double train_acc = evaluate(model, cb, train_set, enc.scheme, nullptr);
    const double test_acc = evaluate(model, cb, test_set, enc.scheme, nullptr);

    if (!cfg.model_out.empty()) save_model(model, cfg.model_out);

    RecordSink sink(cfg.output_path);
    json rec;
    rec["record"] = "train";
    rec["config"] = cfg.to_json();
    rec["train_accuracy"] = train_acc;
    rec["test_accuracy"] = test_acc;
    rec["train_samples"] = train_set.size();
    rec["test_samples"] = test_set.size();
    sink.emit(rec);
    return 0;
}

int cmd_predict(const RunConfig& cfg) {
    if (cfg.model_in.empty()) throw config_error("predict requires --model");
    Model model = load_model(cfg.model_in);
    Dataset ds = load_dataset(cfg);
    const CodebookSet cb = model.config.make_codebook();

    DimensionMask mask = DimensionMask::full(model.d_hv());
    const DimensionMask* mask_ptr = nullptr;
    if (cfg.mask_size > 0) {
        mask = DimensionMask::random(cfg.noise_seed, model.d_hv(),
                                     model.d_hv() - cfg.mask_size);
        mask_ptr = &mask;
    }
    const double acc = evaluate(model, cb, ds, cfg.quant_scheme(), mask_ptr);

    RecordSink sink(cfg.output_path);
    json rec;
    rec["record"] = "predict";
    rec["config"] = cfg.to_json();
    rec["model"] = cfg.model_in;
    rec["accuracy"] = acc;
    rec["samples"] = ds.size();
    sink.emit(rec);
    return 0;
}

int cmd_retrain(const RunConfig& cfg) {
    if (cfg.model_in.empty()) throw config_error("retrain requires --model");
    Model model = load_model(cfg.model_in);
    Dataset ds = load_dataset(cfg);
    const CodebookSet cb = model.config.make_codebook();
    auto encoded = encode_dataset(ds, cb, model.config.variant, model.config.scheme);

    RecordSink sink(cfg.output_path);
    for (int e = 0; e < std::max(cfg.epochs, 1); ++e) {
        const std::size_t miss = retrain_epoch(model, encoded, ds.labels);
        json rec;
        rec["record"] = "retrain";
        rec["config"] = cfg.to_json();
        rec["epoch"] = e;
        rec["mispredictions"] = miss;
        sink.emit(rec);
    }
    if (!cfg.model_out.empty()) save_model(model, cfg.model_out);
    return 0;
}

int cmd_prune(const RunConfig& cfg) {
    if (cfg.model_in.empty()) throw config_error("prune requires --model");
    Model model = load_model(cfg.model_in);
    const DimensionMask mask = prune(model, cfg.prune_percent);
    if (!cfg.model_out.empty()) save_model(model, cfg.model_out);

    RecordSink sink(cfg.output_path);
    json rec;
    rec["record"] = "prune";
    rec["config"] = cfg.to_json();
    rec["dims_kept"] = mask.count_kept;
    rec["dims_masked"] = mask.size() - mask.count_kept;
    sink.emit(rec);
    return 0;
}

int cmd_dp_train(const RunConfig& cfg) {
    Dataset ds = load_dataset(cfg);
    auto [train_set, test_set] = split(ds, cfg.train_fraction, cfg.split_seed_v);

    DpPipelineConfig pc;
    pc.num_classes = ds.num_classes;
    pc.d_iv = ds.d_iv();
    pc.d_hv = cfg.d_hv;
    pc.levels = cfg.levels;
    pc.variant = cfg.encoding_variant();
    pc.scheme = cfg.quant_scheme();
    pc.prune_percent = cfg.prune_percent;
    pc.retrain_epochs = cfg.epochs;
    pc.epsilon = cfg.epsilon;
    pc.delta = cfg.delta;
    pc.codebook_seed = cfg.codebook_seed;
    pc.noise_seed = cfg.noise_seed;

    DpPipelineResult res = dp_train_pipeline(train_set.samples, train_set.labels, pc);
    const CodebookSet cb = res.model.config.make_codebook();
    const double acc = evaluate(res.model, cb, test_set, pc.scheme, nullptr);

    if (!cfg.model_out.empty()) save_model(res.model, cfg.model_out);

    RecordSink sink(cfg.output_path);
    json rec;
    rec["record"] = "dp-train";
    rec["config"] = cfg.to_json();
    rec["epsilon"] = std::isinf(res.params.epsilon) ? json("inf") : json(res.params.epsilon);
    rec["delta"] = res.params.delta;
    rec["sigma"] = res.params.sigma;
    rec["delta_f"] = res.params.delta_f;
    rec["sensitivity_l1"] = res.sensitivity.l1;
    rec["sensitivity_l2"] = res.sensitivity.l2;
    rec["dims_kept"] = res.model.mask.count_kept;
    rec["test_accuracy"] = acc;
    sink.emit(rec);
    return 0;
}

int cmd_attack(const RunConfig& cfg, const std::string& mode, std::size_t sample_index,
               const std::string& pgm_prefix, std::size_t pgm_width) {
    Dataset ds = load_dataset(cfg);
    if (sample_index >= ds.size()) throw config_error("attack: --sample index out of range");
    const FeatureVector& target = ds.samples[sample_index];

    EncodingConfig enc = encoding_config(cfg, ds.d_iv());
    enc.variant = EncodingVariant::scalar; // the reversal attack inverts the scalar encoding
    const CodebookSet cb = enc.make_codebook();

    RecordSink sink(cfg.output_path);
    json rec;
    rec["record"] = "attack";
    rec["config"] = cfg.to_json();
    rec["mode"] = mode;
    rec["sample"] = sample_index;

    ReconstructionReport rep;
    if (mode == "query") {
        Hypervector h = encode_scalar(target, cb);
        DimensionMask mask = cfg.mask_size > 0
                                 ? DimensionMask::random(cfg.noise_seed, cfg.d_hv,
                                                         cfg.d_hv - cfg.mask_size)
                                 : DimensionMask::full(cfg.d_hv);
        Hypervector q = obfuscate_query(h, cfg.quant_scheme(), cb.d_iv, mask);
        rep = breach_from_query(q, cb, target, cfg.quant_scheme().kind, cfg.mask_size);
    } else if (mode == "adjacent") {
        // Train twice on streams differing only in the target sample; decode
        // the class-vector difference.
        std::vector<Hypervector> enc_all, enc_without;
        std::vector<std::size_t> lab_all, lab_without;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            Hypervector h = encode_scalar(ds.samples[i], cb);
            enc_all.push_back(h);
            lab_all.push_back(ds.labels[i]);
            if (i != sample_index) {
                enc_without.push_back(std::move(h));
                lab_without.push_back(ds.labels[i]);
            }
        }
        Model with = train(enc_all, lab_all, ds.num_classes, enc);
        Model without = train(enc_without, lab_without, ds.num_classes, enc);
        rep = breach_from_models(with, without, cb, target);
    } else {
        throw config_error("attack: --mode must be query or adjacent");
    }

    rec["mse"] = rep.fid.mse;
    rec["psnr_db"] = rep.fid.psnr_infinite ? json("inf") : json(rep.fid.psnr_db);
    sink.emit(rec);

    if (!pgm_prefix.empty()) {
        const std::size_t w = pgm_width ? pgm_width : ds.d_iv();
        const std::size_t h = ds.d_iv() / w;
        if (w * h != ds.d_iv()) throw config_error("attack: --pgm-width does not tile d_iv");
        const int max_gray = std::max(1, static_cast<int>(std::lround(ds.feature_max)));
        write_pgm(pgm_prefix + "_original.pgm", target.values, w, h, max_gray);
        write_pgm(pgm_prefix + "_recovered.pgm", rep.recovered, w, h, max_gray);
    }
    return 0;
}

int cmd_hw_sim(const RunConfig& cfg, std::size_t trials) {
    RecordSink sink(cfg.output_path);
    for (hwsim::HwMode mode : {hwsim::HwMode::binary, hwsim::HwMode::ternary}) {
        const hwsim::LutCostReport cost = hwsim::lut_cost(cfg.d_iv, mode);
        json rec;
        rec["record"] = "hw-sim-cost";
        rec["config"] = cfg.to_json();
        rec["mode"] = mode == hwsim::HwMode::binary ? "binary" : "ternary";
        rec["n_lut_approx"] = cost.n_lut_approx;
        rec["n_lut_exact"] = cost.n_lut_exact;
        rec["savings_percent"] = cost.savings_percent;
        sink.emit(rec);
    }

    // Per-column agreement of the approximate sign against the exact popcount.
    hwsim::TieBreakTable ties(cfg.ties_seed);
    Rng rng(cfg.data_seed);
    std::size_t agree = 0, decided = 0;
    std::vector<bool> column(cfg.d_iv);
    for (std::size_t t = 0; t < trials; ++t) {
        int sum = 0;
        for (std::size_t k = 0; k < cfg.d_iv; ++k) {
            column[k] = rng.coin();
            sum += column[k] ? 1 : -1;
        }
        if (sum == 0) continue; // exact sign undefined on ties
        ++decided;
        const bool approx = hwsim::approx_sign_accumulate(column, ties);
        if (approx == (sum > 0)) ++agree;
    }
    json rec;
    rec["record"] = "hw-sim-agreement";
    rec["config"] = cfg.to_json();
    rec["trials"] = trials;
    rec["decided"] = decided;
    rec["agreement"] = decided ? static_cast<double>(agree) / static_cast<double>(decided) : 0.0;
    sink.emit(rec);
    return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::vector<std::string>& schemes,
              const std::vector<std::size_t>& d_hv_list,
              const std::vector<std::size_t>& mask_list) {
    Dataset ds = load_dataset(cfg);
    auto [train_set, test_set] = split(ds, cfg.train_fraction, cfg.split_seed_v);

    RecordSink sink(cfg.output_path);
    std::ofstream csv;
    if (!cfg.csv_out.empty()) {
        csv.open(cfg.csv_out);
        if (!csv) throw io_error("cannot open CSV output: " + cfg.csv_out);
        csv << "scheme,d_hv,mask_size,test_accuracy\n";
    }

    for (const auto& scheme_name : schemes) {
        for (std::size_t d_hv : d_hv_list) {
            RunConfig c = cfg;
            c.scheme = scheme_name;
            c.d_hv = d_hv;
            EncodingConfig enc = encoding_config(c, ds.d_iv());
            const CodebookSet cb = enc.make_codebook();
            auto encoded = encode_dataset(train_set, cb, enc.variant, enc.scheme);
            Model model = train(encoded, train_set.labels, ds.num_classes, enc);

            for (std::size_t mask_size : mask_list) {
                if (mask_size >= d_hv) continue;
                DimensionMask mask = mask_size > 0
                                         ? DimensionMask::random(c.noise_seed, d_hv,
                                                                 d_hv - mask_size)
                                         : DimensionMask::full(d_hv);
                const double acc = evaluate(model, cb, test_set, enc.scheme,
                                            mask_size > 0 ? &mask : nullptr);
                json rec;
                rec["record"] = "sweep";
                rec["config"] = c.to_json();
                rec["scheme"] = scheme_name;
                rec["d_hv"] = d_hv;
                rec["mask_size"] = mask_size;
                rec["test_accuracy"] = acc;
                sink.emit(rec);
                if (csv.is_open()) {
                    csv << scheme_name << "," << d_hv << "," << mask_size << "," << acc << "\n";
                }
            }
        }
    }
    return 0;
}

void add_common_options(CLI::App* app, RunConfig& cfg) {
    app->add_option("--dataset", cfg.dataset_path, "CSV dataset path");
    app->add_flag("--synthetic", cfg.synthetic, "use a seeded synthetic dataset");
    app->add_option("--classes", cfg.classes, "synthetic: number of classes");
    app->add_option("--d-iv", cfg.d_iv, "feature count (synthetic / hw-sim)");
    app->add_option("--samples-per-class", cfg.samples_per_class, "synthetic: samples per class");
    app->add_option("--cluster-std", cfg.cluster_std, "synthetic: cluster standard deviation");
    app->add_option("--train-fraction", cfg.train_fraction, "train split fraction");
    app->add_option("--variant", cfg.variant, "encoding variant: scalar|level");
    app->add_option("--d-hv", cfg.d_hv, "hypervector dimensionality");
    app->add_option("--levels", cfg.levels, "feature quantization levels");
    app->add_option("--scheme", cfg.scheme,
                    "quantization: none|binary|ternary|ternary_biased|two_bit");
    app->add_option("--threshold-source", cfg.threshold_source, "theoretical|empirical");
    app->add_option("--s", cfg.prune_percent, "prune percentage");
    app->add_option("--epochs", cfg.epochs, "retraining epochs");
    app->add_option("--epsilon", cfg.epsilon, "privacy budget (inf to disable noise)");
    app->add_option("--delta", cfg.delta, "privacy delta");
    app->add_option("--mask-size", cfg.mask_size, "query dimensions masked to zero");
    app->add_option("--master-seed", cfg.master_seed, "master seed deriving all sub-seeds");
    app->add_option("--codebook-seed", cfg.codebook_seed, "override derived codebook seed");
    app->add_option("--noise-seed", cfg.noise_seed, "override derived noise seed");
    app->add_option("--split-seed", cfg.split_seed_v, "override derived split seed");
    app->add_option("--ties-seed", cfg.ties_seed, "override derived tie-break seed");
    app->add_option("--data-seed", cfg.data_seed, "override derived synthetic-data seed");
    app->add_option("--output", cfg.output_path, "JSON-lines output path (default stdout)");
    app->add_option("--model", cfg.model_in, "input model file");
    app->add_option("--model-out", cfg.model_out, "output model file");
    app->add_option("--csv-out", cfg.csv_out, "CSV output path");
    app->set_config("--config", "", "key = value config file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"privehd: privacy-preserving hyperdimensional classification toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string attack_mode = "query";
    std::size_t attack_sample = 0;
    std::string pgm_prefix;
    std::size_t pgm_width = 0;
    std::size_t hw_trials = 10000;
    std::vector<std::string> sweep_schemes = {"none", "binary", "ternary_biased"};
    std::vector<std::size_t> sweep_d_hv = {1000, 2000, 4000};
    std::vector<std::size_t> sweep_masks = {0};

    auto* c_train = app.add_subcommand("train", "encode and train a model");
    auto* c_predict = app.add_subcommand("predict", "evaluate a model on a dataset");
    auto* c_retrain = app.add_subcommand("retrain", "retraining passes over a dataset");
    auto* c_prune = app.add_subcommand("prune", "mask low-magnitude model dimensions");
    auto* c_dp = app.add_subcommand("dp-train", "differentially private training pipeline");
    auto* c_attack = app.add_subcommand("attack", "encoding reversal attack");
    auto* c_hw = app.add_subcommand("hw-sim", "approximate hardware encoder study");
    auto* c_sweep = app.add_subcommand("sweep", "accuracy grids over scheme/dims/mask");
    auto* c_gen = app.add_subcommand("gen-data", "generate a synthetic CSV dataset");

    for (auto* sc : {c_train, c_predict, c_retrain, c_prune, c_dp, c_attack, c_hw, c_sweep, c_gen}) {
        add_common_options(sc, cfg);
    }
    c_attack->add_option("--mode", attack_mode, "query|adjacent");
    c_attack->add_option("--sample", attack_sample, "index of the targeted sample");
    c_attack->add_option("--pgm-out", pgm_prefix, "prefix for original/recovered PGM dumps");
    c_attack->add_option("--pgm-width", pgm_width, "PGM row width (default d_iv x 1)");
    c_hw->add_option("--trials", hw_trials, "Monte-Carlo columns for agreement stats");
    c_sweep->add_option("--schemes", sweep_schemes, "schemes to sweep");
    c_sweep->add_option("--d-hv-list", sweep_d_hv, "dimensionalities to sweep");
    c_sweep->add_option("--mask-list", sweep_masks, "mask sizes to sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        cfg.resolve_seeds();
        if (c_train->parsed()) return cmd_train(cfg);
        if (c_predict->parsed()) return cmd_predict(cfg);
        if (c_retrain->parsed()) return cmd_retrain(cfg);
        if (c_prune->parsed()) return cmd_prune(cfg);
        if (c_dp->parsed()) return cmd_dp_train(cfg);
        if (c_attack->parsed()) return cmd_attack(cfg, attack_mode, attack_sample, pgm_prefix, pgm_width);
        if (c_hw->parsed()) return cmd_hw_sim(cfg, hw_trials);
        if (c_sweep->parsed()) return cmd_sweep(cfg, sweep_schemes, sweep_d_hv, sweep_masks);
        if (c_gen->parsed()) return cmd_gen_data(cfg);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const dimension_error& e) {
        std::cerr << "contract error: " << e.what() << "\n";
        return kExitContract;
    } catch (const contract_error& e) {
        std::cerr << "contract error: " << e.what() << "\n";
        return kExitContract;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContract;
    }
    return kExitUsage;
}
