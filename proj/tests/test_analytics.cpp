#include <doctest.h>

#include <random>

#include "bhsd/analytics.hpp"
#include "bhsd/construction.hpp"
#include "bhsd/enumeration.hpp"
#include "test_util.hpp"

using namespace bhsd;

TEST_CASE("rains bound") {
    CHECK(extremal_bound(64) == 12);
    CHECK(extremal_bound(68) == 12);
    CHECK(extremal_bound(72) == 16);
    CHECK(extremal_bound(80) == 16);
    CHECK(extremal_bound(22) == 6);
    CHECK(extremal_bound(8) == 4);
    CHECK(extremal_bound(24) == 8);
    CHECK(extremal_bound(48) == 12);
    CHECK_THROWS_AS(extremal_bound(7), std::invalid_argument);
    CHECK_THROWS_AS(extremal_bound(0), std::invalid_argument);
}

TEST_CASE("weight counting against full enumeration on the Hamming code") {
    CodeAnalyzer an(testutil::hamming84());
    CHECK(an.count_weight(0) == 1);
    CHECK(an.count_weight(4) == 14);
    CHECK(an.count_weight(8) == 1);
    CHECK(an.count_weight(2) == 0);
    CHECK(an.codewords_of_weight(4).size() == 14);
    CHECK(an.min_distance() == 4);
    const DistanceVerdict v = an.min_distance_verify(4);
    CHECK(v.confirmed);
    CHECK(v.found_weight == 4);
    CHECK(popcount_words(v.witness.data(), 1) == 4);
    CHECK_FALSE(an.min_distance_verify(6).confirmed);
    CHECK(an.exists_word_below(6));
    CHECK_FALSE(an.exists_word_below(4));
}

TEST_CASE("repetition code sanity") {
    const BinaryCode rep = BinaryCode::from_string_rows({"11"});
    CodeAnalyzer an(rep);
    CHECK(an.min_distance_verify(2).confirmed);
    CHECK(an.count_weight(2) == 1);
}

TEST_CASE("count_weight and min_distance match brute force on random self-dual codes") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 200) {
        // Random self-dual codes of length <= 24 via condition-passing recipes,
        // some of them grown by one extension step.
        const Ring ring = (rng() % 2) ? Ring::F2 : Ring::F2U;
        const int n = ring == Ring::F2 ? 1 + int(rng() % 3) : 1;
        Recipe r;
        r.variant = Variant::Theorem31;
        r.ring = ring;
        r.lambda = ring_one(ring);
        for (Vec* v : {&r.r_a, &r.r_b, &r.r_c, &r.r_d}) {
            *v = Vec(ring, size_t(n));
            for (auto& e : v->e) e = uint8_t(rng() % ring_size(ring));
        }
        if (!check_conditions(r).ok()) continue;
        Mat g = build_baumert_hall(r);
        if (rng() % 2) {
            // extension step with a random valid (c, X)
            for (int attempt = 0; attempt < 100; ++attempt) {
                Vec x(ring, size_t(g.cols));
                for (auto& e : x.e) e = uint8_t(rng() % ring_size(ring));
                Elem c{uint8_t(rng() % ring_size(ring)), ring};
                if (!is_self_inverse_unit(c) || dot(x, x).bits != 1) continue;
                g = extend_code(ring_standard_form(g).generator, c, x);
                break;
            }
        }
        const BinaryCode bin = gray_image(g);
        REQUIRE(bin.is_self_dual());
        if (bin.length() > 24) continue;
        ++done;

        CodeAnalyzer an(bin);
        const auto oracle = testutil::brute_force_distribution(bin);
        long long total = 0;
        for (int w = 0; w <= bin.length(); ++w) {
            const auto it = oracle.find(w);
            const long long expected = it == oracle.end() ? 0 : it->second;
            CHECK(an.count_weight(w) == expected);
            total += expected;
        }
        CHECK(total == (1LL << bin.dimension()));
        CHECK(an.min_distance() == testutil::brute_force_min_distance(bin));
    }
}

TEST_CASE("enumerator classification") {
    SUBCASE("length 64") {
        const EnumeratorFit fit = classify_enumerator(64, {{12, 1376}, {14, 23040 - 64 * 4}});
        CHECK(fit.family == Family::W64_2);
        CHECK(fit.beta == 4);
        const EnumeratorFit f1 = classify_enumerator(64, {{12, 1312 + 16 * 14}, {14, 22016 - 64 * 14}});
        CHECK(f1.family == Family::W64_1);
        CHECK(f1.beta == 14);
    }
    SUBCASE("length 68") {
        const EnumeratorFit fit = classify_enumerator(68, {{12, 806}, {14, 13464}});
        CHECK(fit.family == Family::W68_2);
        CHECK(fit.beta == 91);
        CHECK(fit.gamma == 3);
        const EnumeratorFit f1 = classify_enumerator(68, {{12, 442 + 4 * 10}, {14, 10864 - 80}});
        CHECK(f1.family == Family::W68_1);
        CHECK(f1.beta == 10);
    }
    SUBCASE("length 72") {
        const EnumeratorFit fit = classify_enumerator(72, {{12, 1662}});
        CHECK(fit.family == Family::W72);
        CHECK(fit.alpha == -2736);
    }
    SUBCASE("length 80") {
        CHECK(classify_enumerator(80, {{16, 97565}}).family == Family::W80);
        CHECK_FALSE(classify_enumerator(80, {{16, 97564}}).ok());
    }
    SUBCASE("no family fits") {
        const EnumeratorFit fit = classify_enumerator(64, {{12, 1376}, {14, 5}});
        CHECK_FALSE(fit.ok());
        CHECK_FALSE(fit.note.empty());
        CHECK_THROWS_AS(classify_enumerator(64, {{12, 1376}}), std::invalid_argument);
    }
}

TEST_CASE("design counting identities") {
    // 97565 * C(16,3) / C(80,3) = 665 exactly.
    CHECK(97565LL * (16 * 15 * 14) == 665LL * (80 * 79 * 78));
    // 1-design value: 97565 * 16 / 80 = 19513.
    CHECK(97565LL * 16 / 80 == 19513);

    // The [8,4,4] code's weight-4 words form the 3-(8,4,1) design.
    CodeAnalyzer an(testutil::hamming84());
    CHECK(design_lambda(an, 4, 3, 60, 7) == 1);
    CHECK(design_lambda(an, 4, 1, 60, 7) == 7);
    CHECK(design_lambda(an, 4, 2, 60, 7) == 3);
}

TEST_CASE("profile of the worked length-72 example") {
    Recipe r;
    r.variant = Variant::Amicable;
    r.ring = Ring::F2;
    r.lambda = ring_one(Ring::F2);
    r.r_a = vec_from_string(Ring::F2, "001101000");
    r.r_b = vec_from_string(Ring::F2, "100100100");
    r.r_c = vec_from_string(Ring::F2, "000101001");
    r.r_d = vec_from_string(Ring::F2, "111111000");
    const BinaryCode bin = gray_image(build_baumert_hall(r));
    CodeAnalyzer an(bin);
    const WeightProfile p = profile_code(an);
    CHECK(p.min_distance == 12);
    CHECK(p.type_two);
    CHECK(p.family == Family::W72);
    CHECK(p.alpha == -3618);
}

TEST_CASE("column permutations do not change counts") {
    std::mt19937_64 rng(29);
    const BinaryCode h = testutil::hamming84();
    std::vector<int> perm(8);
    for (int i = 0; i < 8; ++i) perm[i] = i;
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        const BinaryCode p = permute_columns(h, perm);
        CodeAnalyzer an(p);
        CHECK(an.count_weight(4) == 14);
        CHECK(an.min_distance() == 4);
    }
}

TEST_CASE("enumeration budget guard") {
    CodeAnalyzer an(testutil::hamming84());
    CHECK_THROWS_AS(an.count_weight(8, 3), std::invalid_argument);
    CHECK(combination_count(4, 2) == 10);
    CHECK(combination_count(40, 8) == 100146724ULL - 1ULL);  // excludes the empty set
}
