#include <doctest.h>

#include <cmath>

#include "privehd/codebook.hpp"
#include "privehd/rng.hpp"

using namespace privehd;

TEST_CASE("gen_base is deterministic in the seed") {
    auto a = gen_base(7, 1, 8);
    auto b = gen_base(7, 1, 8);
    REQUIRE(a.size() == 1);
    CHECK(a[0].size() == 8);
    for (double v : a[0].values) CHECK(std::fabs(v) == 1.0);
    CHECK(a[0] == b[0]);

    auto c = gen_base(8, 2, 10000);
    auto d = gen_base(7, 2, 10000);
    CHECK_FALSE(c[0] == d[0]);
}

TEST_CASE("gen_base rejects zero shapes") {
    CHECK_THROWS_AS(gen_base(1, 0, 8), config_error);
    CHECK_THROWS_AS(gen_base(1, 8, 0), config_error);
}

TEST_CASE("base rows are statistically orthogonal") {
    auto rows = gen_base(7, 50, 10000);
    double max_abs = 0.0;
    double sum_abs = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const double c = std::fabs(cosine(rows[i], rows[j]));
            max_abs = std::max(max_abs, c);
            sum_abs += c;
            ++pairs;
        }
    }
    // cos std = 1/sqrt(d_hv) = 0.01 for i.i.d. bipolar rows
    CHECK(max_abs < 0.05);
    CHECK(sum_abs / static_cast<double>(pairs) < 0.01);
}

TEST_CASE("gen_levels flips the exact count per step") {
    auto small = gen_levels(3, 2, 8);
    CHECK(hamming(small[0], small[1]) == 2); // floor(8/4)

    auto table = gen_levels(3, 10, 10000);
    for (std::size_t k = 0; k + 1 < table.size(); ++k) {
        CHECK(hamming(table[k], table[k + 1]) == 500);
    }
    // disjoint flips accumulate: 9 * 500
    CHECK(hamming(table[0], table[9]) == 4500);
    CHECK(cosine(table[0], table[1]) == doctest::Approx(0.9));
}

TEST_CASE("gen_levels rejects fewer than two levels") {
    CHECK_THROWS_AS(gen_levels(1, 1, 100), config_error);
}

TEST_CASE("cosine equals 1 - 2*hamming/d for bipolar pairs") {
    auto table = gen_levels(11, 8, 4096);
    for (std::size_t k = 0; k + 1 < table.size(); ++k) {
        const double expect =
            1.0 - 2.0 * static_cast<double>(hamming(table[0], table[k])) / 4096.0;
        CHECK(cosine(table[0], table[k]) == doctest::Approx(expect));
    }
}

TEST_CASE("dot identities") {
    auto rows = gen_base(5, 2, 8);
    Hypervector x = rows[0];
    CHECK(dot(x, x) == 8.0);
    Hypervector nx = x;
    for (auto& v : nx.values) v = -v;
    CHECK(dot(x, nx) == -8.0);

    // symmetry and scaling
    Hypervector y = rows[1];
    CHECK(dot(x, y) == dot(y, x));
    Hypervector y3 = y;
    for (auto& v : y3.values) v *= 3.0;
    CHECK(dot(x, y3) == 3.0 * dot(x, y));
    CHECK(cosine(x, y3) == doctest::Approx(cosine(x, y)));
}

TEST_CASE("random bipolar dot concentrates") {
    auto rows = gen_base(123, 2, 10000);
    CHECK(std::fabs(dot(rows[0], rows[1])) < 500.0); // 5 sigma
}

TEST_CASE("cosine boundary cases") {
    Hypervector x(std::vector<double>{1, -1, 1, 1}, HvKind::bipolar);
    CHECK(cosine(x, x) == doctest::Approx(1.0));
    Hypervector z(4, HvKind::integer);
    CHECK_THROWS_AS(cosine(x, z), contract_error);
    Hypervector shorter(3, HvKind::integer);
    CHECK_THROWS_AS(dot(x, shorter), dimension_error);
}

TEST_CASE("codebook set regenerates bit-identically") {
    auto a = CodebookSet::generate(42, 10, 1000, 4);
    auto b = CodebookSet::generate(42, 10, 1000, 4);
    CHECK(a.base == b.base);
    CHECK(a.level_table == b.level_table);
}
