#include "privehd/data_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "privehd/rng.hpp"

namespace privehd {

namespace {

constexpr char kQueryMagic[8] = {'P', 'R', 'I', 'V', 'E', 'H', 'D', 'Q'};
constexpr std::uint8_t kQueryVersion = 1;

bool parse_double(const std::string& tok, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(tok, &pos);
        return pos == tok.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    return cells;
}

void write_le_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_le_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw io_error("query record: truncated");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

} // namespace

Dataset load_csv(std::istream& is, const std::string& name) {
    Dataset ds;
    ds.name = name;
    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_cols = 0;
    bool have_header_range = false;
    double min_seen = std::numeric_limits<double>::infinity();
    double max_seen = -std::numeric_limits<double>::infinity();
    std::size_t max_label = 0;

    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (line[0] == '#') {
            // Optional header: # privehd-csv v1 d_iv=<n> classes=<m> min=<x> max=<y>
            std::stringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                const auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = tok.substr(0, eq);
                const std::string val = tok.substr(eq + 1);
                double d = 0.0;
                if (!parse_double(val, d)) {
                    throw parse_error("bad header value: " + tok, line_no);
                }
                if (key == "d_iv") expected_cols = static_cast<std::size_t>(d) + 1;
                else if (key == "classes") ds.num_classes = static_cast<std::size_t>(d);
                else if (key == "min") { ds.feature_min = d; have_header_range = true; }
                else if (key == "max") { ds.feature_max = d; have_header_range = true; }
            }
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() < 2) {
            throw parse_error("row needs at least one feature column and a label", line_no);
        }
        if (expected_cols == 0) {
            expected_cols = cells.size();
        } else if (cells.size() != expected_cols) {
            throw parse_error("ragged row: expected " + std::to_string(expected_cols) +
                                  " columns, got " + std::to_string(cells.size()),
                              line_no);
        }
        FeatureVector fv;
        fv.values.reserve(cells.size() - 1);
        for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
            double v = 0.0;
            if (!parse_double(cells[i], v)) {
                throw parse_error("non-numeric cell '" + cells[i] + "'", line_no);
            }
            fv.values.push_back(v);
            min_seen = std::min(min_seen, v);
            max_seen = std::max(max_seen, v);
        }
        double lab = 0.0;
        if (!parse_double(cells.back(), lab) || lab != std::floor(lab) || lab < 0) {
            throw parse_error("label column must be a non-negative integer, got '" +
                                  cells.back() + "'",
                              line_no);
        }
        const std::size_t l = static_cast<std::size_t>(lab);
        max_label = std::max(max_label, l);
        ds.labels.push_back(l);
        ds.samples.push_back(std::move(fv));
    }
    if (ds.samples.empty()) {
        throw parse_error("no data rows", line_no);
    }
    if (!have_header_range) {
        ds.feature_min = min_seen;
        ds.feature_max = max_seen;
    }
    if (ds.num_classes == 0) ds.num_classes = max_label + 1;
    for (auto& s : ds.samples) {
        s.min = ds.feature_min;
        s.max = ds.feature_max;
    }
    return ds;
}

Dataset load_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open dataset: " + path);
    return load_csv(is, path);
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open dataset for writing: " + path);
    os << "# privehd-csv v1 d_iv=" << ds.d_iv() << " classes=" << ds.num_classes
       << " min=" << ds.feature_min << " max=" << ds.feature_max << "\n";
    os.precision(9);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (double v : ds.samples[i].values) os << v << ",";
        os << ds.labels[i] << "\n";
    }
    if (!os) throw io_error("write failure on dataset: " + path);
}

Dataset gen_synthetic(const SyntheticSpec& spec) {
    if (spec.num_classes < 2 || spec.d_iv == 0 || spec.samples_per_class == 0 ||
        spec.cluster_std < 0.0) {
        throw config_error("gen_synthetic: invalid spec");
    }
    Rng rng(spec.seed);
    Dataset ds;
    ds.name = "synthetic";
    ds.num_classes = spec.num_classes;
    ds.feature_min = 0.0;
    ds.feature_max = 1.0;

    std::vector<std::vector<double>> means(spec.num_classes);
    for (auto& m : means) {
        m.resize(spec.d_iv);
        for (auto& v : m) v = rng.uniform();
    }
    for (std::size_t c = 0; c < spec.num_classes; ++c) {
        for (std::size_t s = 0; s < spec.samples_per_class; ++s) {
            FeatureVector fv;
            fv.min = 0.0;
            fv.max = 1.0;
            fv.values.resize(spec.d_iv);
            for (std::size_t k = 0; k < spec.d_iv; ++k) {
                double v = means[c][k] + spec.cluster_std * rng.normal();
                if (v < 0.0) v = 0.0;
                if (v > 1.0) v = 1.0;
                fv.values[k] = v;
            }
            ds.samples.push_back(std::move(fv));
            ds.labels.push_back(c);
        }
    }
    return ds;
}

std::pair<Dataset, Dataset> split(const Dataset& ds, double train_fraction, std::uint64_t seed) {
    if (train_fraction <= 0.0 || train_fraction >= 1.0) {
        throw config_error("split: train fraction must lie in (0, 1)");
    }
    std::vector<std::vector<std::size_t>> by_class(ds.num_classes);
    for (std::size_t i = 0; i < ds.size(); ++i) by_class[ds.labels[i]].push_back(i);
    for (const auto& idxs : by_class) {
        if (idxs.size() < 2) {
            throw config_error("split: every class needs at least 2 samples for stratification");
        }
    }
    Rng rng(seed);
    Dataset train, test;
    for (Dataset* part : {&train, &test}) {
        part->num_classes = ds.num_classes;
        part->feature_min = ds.feature_min;
        part->feature_max = ds.feature_max;
        part->name = ds.name;
    }
    for (auto& idxs : by_class) {
        for (std::size_t i = idxs.size() - 1; i > 0; --i) {
            std::size_t j = rng.below(i + 1);
            std::swap(idxs[i], idxs[j]);
        }
        std::size_t n_train = static_cast<std::size_t>(
            std::lround(train_fraction * static_cast<double>(idxs.size())));
        if (n_train == 0) n_train = 1;
        if (n_train == idxs.size()) n_train = idxs.size() - 1;
        for (std::size_t i = 0; i < idxs.size(); ++i) {
            Dataset& part = i < n_train ? train : test;
            part.samples.push_back(ds.samples[idxs[i]]);
            part.labels.push_back(ds.labels[idxs[i]]);
        }
    }
    return {train, test};
}

QueryRecord make_query_record(const Hypervector& query, QuantKind scheme,
                              const DimensionMask& mask) {
    QueryRecord rec;
    rec.d_hv = static_cast<std::uint32_t>(query.size());
    rec.scheme = scheme;
    rec.mask = mask;
    rec.dims.resize(query.size());
    for (std::size_t i = 0; i < query.size(); ++i) {
        rec.dims[i] = static_cast<std::int32_t>(query[i]);
    }
    return rec;
}

void write_query_record(std::ostream& os, const QueryRecord& rec) {
    os.write(kQueryMagic, 8);
    os.put(static_cast<char>(kQueryVersion));
    write_le_u32(os, rec.d_hv);
    os.put(static_cast<char>(rec.scheme));

    // Mask RLE: first bit value, run count, then run lengths.
    std::vector<std::uint32_t> runs;
    std::uint8_t first = rec.mask.kept.empty() ? 1 : rec.mask.kept[0];
    std::uint8_t cur = first;
    std::uint32_t run = 0;
    for (std::uint8_t b : rec.mask.kept) {
        if (b == cur) {
            ++run;
        } else {
            runs.push_back(run);
            cur = b;
            run = 1;
        }
    }
    if (run > 0) runs.push_back(run);
    os.put(static_cast<char>(first));
    write_le_u32(os, static_cast<std::uint32_t>(runs.size()));
    for (auto r : runs) write_le_u32(os, r);

    for (std::int32_t d : rec.dims) {
        write_le_u32(os, static_cast<std::uint32_t>(d));
    }
    if (!os) throw io_error("query record: write failure");
}

void write_query_record(const std::string& path, const QueryRecord& rec) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw io_error("cannot open query record for writing: " + path);
    write_query_record(os, rec);
}

QueryRecord read_query_record(std::istream& is) {
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kQueryMagic, 8) != 0) {
        throw io_error("query record: bad magic");
    }
    const int version = is.get();
    if (version != kQueryVersion) {
        throw io_error("query record: unsupported version " + std::to_string(version));
    }
    QueryRecord rec;
    rec.d_hv = read_le_u32(is);
    const int scheme = is.get();
    if (scheme < 0 || scheme > static_cast<int>(QuantKind::two_bit)) {
        throw io_error("query record: bad scheme tag");
    }
    rec.scheme = static_cast<QuantKind>(scheme);

    const int first = is.get();
    const std::uint32_t n_runs = read_le_u32(is);
    rec.mask.kept.clear();
    rec.mask.kept.reserve(rec.d_hv);
    std::uint8_t cur = first ? 1 : 0;
    for (std::uint32_t i = 0; i < n_runs; ++i) {
        const std::uint32_t run = read_le_u32(is);
        rec.mask.kept.insert(rec.mask.kept.end(), run, cur);
        cur = cur ? 0 : 1;
    }
    if (rec.mask.kept.size() != rec.d_hv) {
        throw io_error("query record: mask RLE length mismatch");
    }
    rec.mask.recount();

    rec.dims.resize(rec.d_hv);
    for (auto& d : rec.dims) {
        d = static_cast<std::int32_t>(read_le_u32(is));
    }
    return rec;
}

QueryRecord read_query_record(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw io_error("cannot open query record: " + path);
    return read_query_record(is);
}

} // namespace privehd
