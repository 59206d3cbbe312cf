#include "privehd/codebook.hpp"

#include <algorithm>
#include <numeric>

#include "privehd/rng.hpp"

namespace privehd {

std::vector<Hypervector> gen_base(std::uint64_t seed, std::size_t d_iv, std::size_t d_hv) {
    if (d_iv == 0 || d_hv == 0) {
        throw config_error("gen_base: d_iv and d_hv must be positive");
    }
    Rng rng(seed);
    std::vector<Hypervector> rows;
    rows.reserve(d_iv);
    for (std::size_t k = 0; k < d_iv; ++k) {
        Hypervector row(d_hv, HvKind::bipolar);
        for (std::size_t j = 0; j < d_hv; ++j) {
            row[j] = rng.bipolar();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Hypervector> gen_levels(std::uint64_t seed, std::size_t levels, std::size_t d_hv) {
    if (levels < 2) {
        throw config_error("gen_levels: at least 2 levels required");
    }
    if (d_hv == 0) {
        throw config_error("gen_levels: d_hv must be positive");
    }
    Rng rng(seed);
    std::vector<Hypervector> table;
    table.reserve(levels);

    Hypervector first(d_hv, HvKind::bipolar);
    for (std::size_t j = 0; j < d_hv; ++j) {
        first[j] = rng.bipolar();
    }
    table.push_back(std::move(first));

    // One seeded permutation of all positions; consecutive chunks give the
    // per-step flip sets, disjoint by construction. Total flips stay below
    // d_hv/2 for any level count.
    std::vector<std::size_t> perm(d_hv);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = d_hv - 1; i > 0; --i) {
        std::size_t j = rng.below(i + 1);
        std::swap(perm[i], perm[j]);
    }

    const std::size_t flips = d_hv / (2 * levels);
    std::size_t cursor = 0;
    for (std::size_t k = 1; k < levels; ++k) {
        Hypervector next = table.back();
        for (std::size_t f = 0; f < flips; ++f) {
            const std::size_t pos = perm[cursor++];
            next[pos] = -next[pos];
        }
        table.push_back(std::move(next));
    }
    return table;
}

CodebookSet CodebookSet::generate(std::uint64_t seed, std::size_t d_iv, std::size_t d_hv,
                                  std::size_t levels) {
    CodebookSet cb;
    cb.seed = seed;
    cb.d_iv = d_iv;
    cb.d_hv = d_hv;
    cb.levels = levels;
    cb.base = gen_base(split_seed(seed, 0), d_iv, d_hv);
    cb.level_table = gen_levels(split_seed(seed, 1), levels, d_hv);
    return cb;
}

} // namespace privehd
