#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "privehd/encoding.hpp"

namespace privehd {

struct Dataset {
    std::vector<FeatureVector> samples;
    std::vector<std::size_t> labels;
    std::size_t num_classes = 0;
    double feature_min = 0.0;
    double feature_max = 1.0;
    std::string name;

    std::size_t size() const { return samples.size(); }
    std::size_t d_iv() const { return samples.empty() ? 0 : samples.front().size(); }
};

struct SyntheticSpec {
    std::size_t num_classes = 2;
    std::size_t d_iv = 64;
    std::size_t samples_per_class = 100;
    double cluster_std = 0.05;
    std::uint64_t seed = 0;
};

// CSV: one sample per row, d_iv numeric columns then an integer label column.
// Optional first line: `# privehd-csv v1 d_iv=<n> classes=<m> min=<x> max=<y>`.
Dataset load_csv(const std::string& path);
Dataset load_csv(std::istream& is, const std::string& name);
void save_csv(const Dataset& ds, const std::string& path);

// Gaussian clusters: class means uniform in [0,1]^d_iv, samples clipped to [0,1].
Dataset gen_synthetic(const SyntheticSpec& spec);

// Seeded, class-stratified split into (train, test).
std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction, std::uint64_t seed);

// Obfuscated-query wire record: little-endian fixed-width binary with an
// 8-byte magic and a version byte; d_hv, scheme tag, mask RLE, dims as int32.
struct QueryRecord {
    std::uint32_t d_hv = 0;
    QuantKind scheme = QuantKind::none;
    DimensionMask mask;
    std::vector<std::int32_t> dims;
};

void write_query_record(std::ostream& os, const QueryRecord& rec);
void write_query_record(const std::string& path, const QueryRecord& rec);
QueryRecord read_query_record(std::istream& is);
QueryRecord read_query_record(const std::string& path);

QueryRecord make_query_record(const Hypervector& query, QuantKind scheme,
                              const DimensionMask& mask);

} // namespace privehd
