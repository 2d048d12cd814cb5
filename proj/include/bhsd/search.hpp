#pragma once

#include "bhsd/pipeline.hpp"

namespace bhsd {

enum class SearchMode : uint8_t { Random, Exhaustive };

struct SearchTarget {
    int length = 0;
    int min_distance = 0;
    std::optional<Family> family;
    std::optional<long long> beta, gamma, alpha;

    bool matches(const WeightProfile& p) const;
};

/// A deterministic scan over recipe space. Candidates are drawn from a fixed
/// number of sub-seeded ranges, so the hit set depends only on (seed, budget,
/// ranges) and never on how many workers process the ranges.
struct SearchConfig {
    Ring ring = Ring::F4U;
    Variant variant = Variant::Theorem31;
    std::vector<Elem> lambda_candidates;
    int n = 2;
    SearchMode mode = SearchMode::Random;
    uint64_t seed = 0;
    uint64_t budget = 10000;
    int ranges = 256;
    SearchTarget target;
    bool i16_fingerprint = false;  // pairwise-distance fingerprint for length-80 hits
};

struct SearchHit {
    RecipeRecord record;  // recipe with the computed profile frozen into expect_*
    WeightProfile profile;
    std::pair<long long, long long> fingerprint;
};

std::vector<SearchHit> run_search(const SearchConfig& config, int workers = 1);

/// Keeps one representative per fingerprint. Equal fingerprints are necessary
/// but not sufficient for code equivalence; distinct fingerprints do separate
/// inequivalent codes.
std::vector<SearchHit> dedupe_hits(std::vector<SearchHit> hits);

/// Manifest file I/O (key=value lines mirroring SearchConfig).
SearchConfig load_search_manifest(const std::string& path);
std::string serialize_search_config(const SearchConfig& config);

}  // namespace bhsd
