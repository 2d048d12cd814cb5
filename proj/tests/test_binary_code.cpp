#include <doctest.h>

#include <bit>
#include <random>

#include "test_util.hpp"

using namespace bhsd;

TEST_CASE("bit packing and strings") {
    const auto words = pack_bit_string("0110");
    CHECK(words.size() == 1);
    CHECK(words[0] == 0b0110);
    CHECK(unpack_bit_string(words, 4) == "0110");
    CHECK_THROWS_AS(pack_bit_string("01x"), std::invalid_argument);

    BinaryCode c = BinaryCode::from_string_rows({"0110", "1001"});
    CHECK(c.row_string(0) == "0110");
    CHECK(c.row_weight(0) == 2);
    CHECK(c.get(1, 0));
}

TEST_CASE("extended Hamming code is self-dual Type II") {
    const BinaryCode h = testutil::hamming84();
    CHECK(h.is_self_dual());
    CHECK(h.is_type_ii());
    const auto dist = testutil::brute_force_distribution(h);
    CHECK(dist.at(0) == 1);
    CHECK(dist.at(4) == 14);
    CHECK(dist.at(8) == 1);
}

TEST_CASE("standard form") {
    const BinaryCode h = testutil::hamming84();
    SUBCASE("already standard input is unchanged") {
        const StandardForm sf = standard_form(h);
        CHECK(sf.code == h);
        CHECK(sf.column_swaps.empty());
    }
    SUBCASE("row permutations do not change the standard form") {
        BinaryCode shuffled = BinaryCode::from_string_rows({
            h.row_string(2),
            h.row_string(0),
            h.row_string(3),
            h.row_string(1),
        });
        CHECK(standard_form(shuffled).code == h);
    }
    SUBCASE("row sums do not change the standard form") {
        BinaryCode mixed = h;
        for (int j = 0; j < h.words(); ++j) mixed.row(0)[j] ^= h.row(1)[j];
        CHECK(standard_form(mixed).code == h);
    }
}

TEST_CASE("standard form of random full-rank generators keeps the row space") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        // Random 8x16 full-rank matrix: random rows, retry until rank 8.
        std::vector<std::vector<uint64_t>> rows;
        for (int i = 0; i < 8; ++i) rows.push_back({rng() & 0xFFFF});
        BinaryCode reduced = [&] {
            try {
                return reduce_rows(16, rows);
            } catch (...) {
                return BinaryCode();
            }
        }();
        if (reduced.dimension() != 8) continue;
        const StandardForm sf = standard_form(reduced);
        if (!sf.column_swaps.empty()) continue;  // column-permuted row space differs; skip
        for (int i = 0; i < 8; ++i) {
            CHECK(reduced.contains(sf.code.row(i)));
            CHECK(sf.code.contains(reduced.row(i)));
        }
    }
}

TEST_CASE("second generator spans the same self-dual code") {
    const BinaryCode h = testutil::hamming84();
    const BinaryCode g2 = second_generator(h);
    for (int i = 0; i < 4; ++i) {
        CHECK(h.contains(g2.row(i)));
        CHECK(g2.contains(h.row(i)));
    }
}

TEST_CASE("reduce_rows drops dependent rows") {
    std::vector<std::vector<uint64_t>> rows = {
        pack_bit_string("1100"),
        pack_bit_string("0110"),
        pack_bit_string("1010"),  // sum of the first two
    };
    const BinaryCode c = reduce_rows(4, rows);
    CHECK(c.dimension() == 2);
}

TEST_CASE("membership") {
    const BinaryCode h = testutil::hamming84();
    auto w = pack_bit_string("11001100");  // row0 + row1
    CHECK(h.contains(w.data()));
    auto all_ones = pack_bit_string("11111111");  // sum of all rows
    CHECK(h.contains(all_ones.data()));
    // x of odd weight cannot lie in a self-orthogonal code
    auto odd = pack_bit_string("10000000");
    CHECK_FALSE(h.contains(odd.data()));
}
