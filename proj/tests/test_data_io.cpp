#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "privehd/data_io.hpp"
#include "privehd/rng.hpp"

using namespace privehd;

TEST_CASE("load_csv parses rows, labels, and the observed feature range") {
    std::istringstream is("0.5, 1.5, 0\n"
                          "\n"
                          "-2.0, 3.0, 1\n");
    Dataset ds = load_csv(is, "inline");
    REQUIRE(ds.size() == 2);
    CHECK(ds.d_iv() == 2);
    CHECK(ds.labels == std::vector<std::size_t>{0, 1});
    CHECK(ds.num_classes == 2);
    CHECK(ds.feature_min == -2.0);
    CHECK(ds.feature_max == 3.0);
    CHECK(ds.samples[0].min == -2.0);
    CHECK(ds.samples[0].max == 3.0);
}

TEST_CASE("load_csv honors the header line") {
    std::istringstream is("# privehd-csv v1 d_iv=2 classes=5 min=0 max=255\n"
                          "10, 20, 3\n");
    Dataset ds = load_csv(is, "inline");
    CHECK(ds.num_classes == 5);
    CHECK(ds.feature_min == 0.0);
    CHECK(ds.feature_max == 255.0);
}

TEST_CASE("load_csv reports parse errors with line numbers") {
    auto line_of = [](const std::string& text) {
        std::istringstream is(text);
        try {
            load_csv(is, "inline");
        } catch (const parse_error& e) {
            return e.line_number;
        }
        return std::size_t{0};
    };
    CHECK(line_of("1,2,0\n1,2\n") == 2);        // ragged
    CHECK(line_of("1,x,0\n") == 1);             // non-numeric cell
    CHECK(line_of("1,2,0\n1,2,1.5\n") == 2);    // fractional label
    CHECK(line_of("1,2,0\n1,2,-1\n") == 2);     // negative label
    CHECK(line_of("# privehd-csv v1 d_iv=zz\n1,2,0\n") == 1);
    CHECK(line_of("") == 0);                    // empty input: no parse line
    std::istringstream empty("");
    CHECK_THROWS_AS(load_csv(empty, "inline"), parse_error);
}

TEST_CASE("save_csv then load_csv round trips the dataset") {
    SyntheticSpec spec;
    spec.num_classes = 3;
    spec.d_iv = 5;
    spec.samples_per_class = 4;
    spec.seed = 63;
    Dataset ds = gen_synthetic(spec);

    const std::string path = "test_data_io_tmp.csv";
    save_csv(ds, path);
    Dataset back = load_csv(path);
    std::remove(path.c_str());

    REQUIRE(back.size() == ds.size());
    CHECK(back.num_classes == ds.num_classes);
    CHECK(back.labels == ds.labels);
    CHECK(back.feature_min == ds.feature_min);
    CHECK(back.feature_max == ds.feature_max);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t k = 0; k < ds.d_iv(); ++k) {
            CHECK(back.samples[i].values[k] ==
                  doctest::Approx(ds.samples[i].values[k]).epsilon(1e-8));
        }
    }
}

TEST_CASE("gen_synthetic is seeded and clustered") {
    SyntheticSpec spec;
    spec.num_classes = 4;
    spec.d_iv = 16;
    spec.samples_per_class = 10;
    spec.cluster_std = 0.05;
    spec.seed = 7;
    Dataset a = gen_synthetic(spec);
    Dataset b = gen_synthetic(spec);
    REQUIRE(a.size() == 40);
    CHECK(a.labels == b.labels);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.samples[i].values == b.samples[i].values);
        for (double v : a.samples[i].values) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }

    // same-class samples are closer than cross-class ones on average
    auto dist = [&](std::size_t i, std::size_t j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < spec.d_iv; ++k) {
            const double d = a.samples[i].values[k] - a.samples[j].values[k];
            acc += d * d;
        }
        return std::sqrt(acc);
    };
    double within = 0.0, across = 0.0;
    std::size_t nw = 0, na = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a.labels[i] == a.labels[j]) {
                within += dist(i, j);
                ++nw;
            } else {
                across += dist(i, j);
                ++na;
            }
        }
    }
    CHECK(within / double(nw) < across / double(na));

    spec.num_classes = 1;
    CHECK_THROWS_AS(gen_synthetic(spec), config_error);
}

TEST_CASE("split is stratified, seeded, and loses no sample") {
    SyntheticSpec spec;
    spec.num_classes = 3;
    spec.d_iv = 4;
    spec.samples_per_class = 20;
    spec.seed = 90;
    Dataset ds = gen_synthetic(spec);

    auto [tr, te] = split(ds, 0.75, 5);
    CHECK(tr.size() + te.size() == ds.size());
    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t n_tr = 0, n_te = 0;
        for (auto l : tr.labels) n_tr += l == c ? 1 : 0;
        for (auto l : te.labels) n_te += l == c ? 1 : 0;
        CHECK(n_tr == 15);
        CHECK(n_te == 5);
    }

    auto [tr2, te2] = split(ds, 0.75, 5);
    CHECK(tr.labels == tr2.labels);
    for (std::size_t i = 0; i < tr.size(); ++i) {
        CHECK(tr.samples[i].values == tr2.samples[i].values);
    }

    // extreme fractions still leave at least one sample on each side
    auto [tr3, te3] = split(ds, 0.99, 5);
    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t n_te = 0;
        for (auto l : te3.labels) n_te += l == c ? 1 : 0;
        CHECK(n_te >= 1);
    }

    CHECK_THROWS_AS(split(ds, 0.0, 1), config_error);
    CHECK_THROWS_AS(split(ds, 1.0, 1), config_error);
}

TEST_CASE("query record round trips through the binary wire format") {
    Rng rng(44);
    const std::size_t d_hv = 777;
    Hypervector q(d_hv, HvKind::quantized);
    for (auto& v : q.values) v = static_cast<double>(static_cast<int>(rng.below(3)) - 1);
    DimensionMask mask = DimensionMask::random(45, d_hv, 400);
    apply_mask(q, mask);

    QueryRecord rec = make_query_record(q, QuantKind::ternary, mask);
    std::stringstream ss(std::ios::in | std::ios::out | std::ios::binary);
    write_query_record(ss, rec);

    // fixed wire prefix: magic, version, d_hv, scheme tag
    const std::string bytes = ss.str();
    REQUIRE(bytes.size() > 14);
    CHECK(bytes.substr(0, 8) == "PRIVEHDQ");
    CHECK(bytes[8] == 1);
    CHECK(static_cast<unsigned char>(bytes[9]) == (d_hv & 0xff));
    CHECK(static_cast<unsigned char>(bytes[10]) == (d_hv >> 8));

    QueryRecord back = read_query_record(ss);
    CHECK(back.d_hv == d_hv);
    CHECK(back.scheme == QuantKind::ternary);
    CHECK(back.mask.kept == mask.kept);
    CHECK(back.mask.count_kept == 400);
    CHECK(back.dims == rec.dims);
    for (std::size_t i = 0; i < d_hv; ++i) {
        CHECK(static_cast<double>(back.dims[i]) == q[i]);
    }
}

TEST_CASE("query record rejects corrupt streams") {
    std::stringstream bad1(std::string("WRONGMAG") + std::string(8, '\0'));
    CHECK_THROWS_AS(read_query_record(bad1), io_error);
    std::stringstream bad2(std::string("PRIVEHDQ") + '\x02');
    CHECK_THROWS_AS(read_query_record(bad2), io_error);
    std::stringstream bad3(std::string("PRIVEHDQ") + '\x01' + "ab");
    CHECK_THROWS_AS(read_query_record(bad3), io_error);
}
