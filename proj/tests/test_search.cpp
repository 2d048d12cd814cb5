#include <doctest.h>

#include <sstream>

#include "bhsd/search.hpp"

using namespace bhsd;

namespace {

SearchConfig small_random_config() {
    SearchConfig cfg;
    cfg.ring = Ring::F4U;
    cfg.variant = Variant::Theorem31;
    cfg.lambda_candidates = {hex_decode('3')};
    cfg.n = 2;
    cfg.mode = SearchMode::Random;
    cfg.seed = 1234;
    cfg.budget = 6000;
    cfg.ranges = 16;
    cfg.target.length = 64;
    cfg.target.min_distance = 12;
    return cfg;
}

std::vector<std::string> hit_keys(const std::vector<SearchHit>& hits) {
    std::vector<std::string> keys;
    for (const auto& h : hits) keys.push_back(serialize_record(h.record));
    return keys;
}

}  // namespace

TEST_CASE("random search is deterministic and partition-independent") {
    const SearchConfig cfg = small_random_config();
    const auto one = run_search(cfg, 1);
    const auto two = run_search(cfg, 2);
    const auto eight = run_search(cfg, 8);
    CHECK(hit_keys(one) == hit_keys(two));
    CHECK(hit_keys(one) == hit_keys(eight));
    const auto rerun = run_search(cfg, 1);
    CHECK(hit_keys(one) == hit_keys(rerun));

    // Every hit verifies from scratch.
    for (const auto& hit : one) {
        const RowCheck rc = verify_record(hit.record);
        CHECK(rc.pass);
    }
}

TEST_CASE("exhaustive search over a tiny space") {
    SearchConfig cfg;
    cfg.ring = Ring::F2;
    cfg.variant = Variant::Theorem31;
    cfg.lambda_candidates = {ring_one(Ring::F2)};
    cfg.n = 1;
    cfg.mode = SearchMode::Exhaustive;
    cfg.budget = 100;  // space is 16
    cfg.ranges = 4;
    cfg.target.length = 8;
    const auto hits = run_search(cfg, 2);
    // Gram condition: a+b+c+d must have odd weight; 8 of 16 candidates pass.
    CHECK(hits.size() == 8);
    for (const auto& hit : hits) {
        const RealizedCode rc = realize(hit.record);
        CHECK(rc.binary.is_self_dual());
    }
    SearchConfig too_small = cfg;
    too_small.budget = 10;
    CHECK_THROWS_AS(run_search(too_small, 1), std::invalid_argument);
}

TEST_CASE("exhaustive symmetric search over F2U blocks") {
    SearchConfig cfg;
    cfg.ring = Ring::F2U;
    cfg.variant = Variant::Symmetric;
    cfg.lambda_candidates = {ring_one(Ring::F2U)};
    cfg.n = 2;
    cfg.mode = SearchMode::Exhaustive;
    cfg.budget = 1 << 20;  // space is 4^6 = 4096
    cfg.ranges = 8;
    cfg.target.length = 32;
    const auto hits = run_search(cfg, 2);
    CHECK(hits.size() > 0);
    for (size_t i = 0; i < hits.size(); i += 7) {
        const RealizedCode rc = realize(hits[i].record);
        CHECK(rc.binary.is_self_dual());
    }
}

TEST_CASE("dedupe keeps one representative per fingerprint") {
    SearchHit a, b, c;
    a.fingerprint = {1376, 22784};
    b.fingerprint = {1376, 22784};
    c.fingerprint = {1392, 22720};
    a.record.id = "a";
    b.record.id = "b";
    c.record.id = "c";
    const auto out = dedupe_hits({a, b, c});
    REQUIRE(out.size() == 2);
    CHECK(out[0].record.id == "a");
    CHECK(out[1].record.id == "c");
    CHECK(dedupe_hits({}).empty());
}

TEST_CASE("search config round trip through manifest text") {
    SearchConfig cfg = small_random_config();
    cfg.target.family = Family::W64_2;
    const std::string text = serialize_search_config(cfg);
    CHECK(text.find("ring=F4U") != std::string::npos);
    CHECK(text.find("seed=1234") != std::string::npos);
    CHECK(text.find("target_family=W64_2") != std::string::npos);
}

TEST_CASE("lambda candidates are validated") {
    SearchConfig cfg = small_random_config();
    cfg.lambda_candidates = {Elem{0x2, Ring::F4U}};  // u is not a unit
    CHECK_THROWS_AS(run_search(cfg, 1), std::invalid_argument);
    cfg.lambda_candidates.clear();
    CHECK_THROWS_AS(run_search(cfg, 1), std::invalid_argument);
}
