#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "privehd/reconstruction.hpp"
#include "privehd/rng.hpp"

using namespace privehd;

TEST_CASE("decode_scalar is exact for a single feature") {
    auto cb = CodebookSet::generate(3, 1, 512, 2);
    FeatureVector v;
    v.values = {42.0};
    v.max = 255.0;
    Hypervector h = encode_scalar(v, cb);
    auto rec = decode_scalar(h, cb);
    REQUIRE(rec.size() == 1);
    CHECK(rec[0] == 42.0);
}

TEST_CASE("decode_scalar cross-talk stays within three sigma") {
    // dot(H, B_m)/d_hv = v_m + sum_{k!=m} v_k * dot(B_k, B_m)/d_hv; the
    // cross-talk term has std sqrt(sum_{k!=m} v_k^2 / d_hv)
    const std::size_t d_iv = 32, d_hv = 10000;
    auto cb = CodebookSet::generate(13, d_iv, d_hv, 2);
    Rng rng(14);
    FeatureVector v;
    v.max = 255.0;
    v.values.resize(d_iv);
    for (auto& x : v.values) x = std::floor(256.0 * rng.uniform());
    Hypervector h = encode_scalar(v, cb);
    auto rec = decode_scalar(h, cb);

    double sumsq = 0.0;
    for (double x : v.values) sumsq += x * x;
    for (std::size_t m = 0; m < d_iv; ++m) {
        const double sigma = std::sqrt((sumsq - v.values[m] * v.values[m]) /
                                       static_cast<double>(d_hv));
        CHECK(std::fabs(rec[m] - v.values[m]) <= 3.0 * sigma);
    }
}

TEST_CASE("decode_level inverts a clean level encoding") {
    const std::size_t d_iv = 24, levels = 8;
    auto cb = CodebookSet::generate(21, d_iv, 8000, levels);
    Rng rng(22);
    std::vector<std::size_t> idx(d_iv);
    for (auto& i : idx) i = rng.below(levels);
    CHECK(decode_level(encode_level(idx, cb), cb) == idx);
}

TEST_CASE("decode size contracts") {
    auto cb = CodebookSet::generate(1, 2, 100, 2);
    Hypervector wrong(99, HvKind::integer);
    CHECK_THROWS_AS(decode_scalar(wrong, cb), dimension_error);
    CHECK_THROWS_AS(decode_level(wrong, cb), dimension_error);
}

TEST_CASE("fidelity mse and psnr") {
    Fidelity f = fidelity({0, 255}, {0, 255}, 255);
    CHECK(f.mse == 0.0);
    CHECK(f.psnr_infinite);

    // mse 2 over peak 255: psnr = 10*log10(255^2/2)
    Fidelity g = fidelity({10, 20}, {12, 20}, 255);
    CHECK(g.mse == 2.0);
    CHECK_FALSE(g.psnr_infinite);
    CHECK(g.psnr_db == doctest::Approx(10.0 * std::log10(255.0 * 255.0 / 2.0)));

    CHECK_THROWS_AS(fidelity({1.0}, {1.0, 2.0}, 1.0), dimension_error);
    CHECK_THROWS_AS(fidelity({}, {}, 1.0), dimension_error);
}

TEST_CASE("quantization and masking degrade the reconstruction") {
    const std::size_t d_iv = 256, d_hv = 10000;
    auto cb = CodebookSet::generate(31, d_iv, d_hv, 2);
    Rng rng(32);
    FeatureVector img;
    img.max = 255.0;
    img.values.resize(d_iv);
    for (auto& x : img.values) x = std::floor(256.0 * rng.uniform());

    Hypervector h = encode_scalar(img, cb);
    auto plain = breach_from_query(h, cb, img);

    Hypervector obf = obfuscate_query(h, {QuantKind::binary, ThresholdSource::empirical}, d_iv,
                                      DimensionMask::random(33, d_hv, d_hv / 2));
    auto hard = breach_from_query(obf, cb, img, QuantKind::binary, d_hv / 2);

    CHECK(hard.fid.mse > plain.fid.mse);
    CHECK(plain.fid.psnr_db > hard.fid.psnr_db);
    CHECK(hard.masked_dims == d_hv / 2);
    CHECK(hard.scheme == QuantKind::binary);
}

TEST_CASE("adjacent models leak the missing sample") {
    const std::size_t d_iv = 16, d_hv = 4000;
    EncodingConfig cfg;
    cfg.codebook_seed = 41;
    cfg.d_iv = d_iv;
    cfg.d_hv = d_hv;
    cfg.levels = 4;
    cfg.variant = EncodingVariant::scalar;
    auto cb = cfg.make_codebook();

    Rng rng(42);
    std::vector<FeatureVector> samples(9);
    std::vector<std::size_t> labels;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i].max = 255.0;
        samples[i].values.resize(d_iv);
        for (auto& x : samples[i].values) x = std::floor(256.0 * rng.uniform());
        labels.push_back(i % 3);
    }

    std::vector<Hypervector> enc;
    for (const auto& s : samples) enc.push_back(encode_scalar(s, cb));

    Model with = train(enc, labels, 3, cfg);
    std::vector<Hypervector> enc_without(enc.begin(), enc.end() - 1);
    std::vector<std::size_t> labels_without(labels.begin(), labels.end() - 1);
    Model without = train(enc_without, labels_without, 3, cfg);

    auto rep = breach_from_models(with, without, cb, samples.back());
    // the class difference is exactly the missing sample's encoding, so the
    // decode error is pure cross-talk
    double sumsq = 0.0;
    for (double x : samples.back().values) sumsq += x * x;
    for (std::size_t m = 0; m < d_iv; ++m) {
        const double truth = samples.back().values[m];
        const double sigma = std::sqrt((sumsq - truth * truth) / static_cast<double>(d_hv));
        CHECK(std::fabs(rep.recovered[m] - truth) <= 3.0 * sigma);
    }

    CHECK_THROWS_AS(breach_from_models(with, with, cb, samples.back()), contract_error);
    Model mismatched = train(enc_without, labels_without, 3, cfg);
    mismatched.classes[0][0] += 1.0;
    mismatched.classes[1][0] += 1.0;
    CHECK_THROWS_AS(breach_from_models(with, mismatched, cb, samples.back()), contract_error);
}

TEST_CASE("write_pgm emits a plain P2 image with clamped grays") {
    const std::string path = "test_recon_tmp.pgm";
    write_pgm(path, {0.0, 300.0, -5.0, 128.4}, 2, 2, 255);
    std::ifstream is(path);
    REQUIRE(is);
    std::stringstream ss;
    ss << is.rdbuf();
    CHECK(ss.str() == "P2\n2 2\n255\n0 255\n0 128\n");
    std::remove(path.c_str());

    CHECK_THROWS_AS(write_pgm(path, {1.0, 2.0}, 2, 2, 255), dimension_error);
}
