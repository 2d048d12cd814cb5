#include "bhsd/search.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace bhsd {

bool SearchTarget::matches(const WeightProfile& p) const {
    if (min_distance && p.min_distance != min_distance) return false;
    if (family && p.family != *family) return false;
    if (beta && p.beta != beta) return false;
    if (gamma && p.gamma != gamma) return false;
    if (alpha && p.alpha != alpha) return false;
    return true;
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Free coordinates of one candidate: full rows for C and D always; for the
// symmetric variant A and B are determined by floor(n/2)+1 leading entries.
struct CandidateShape {
    int n;
    int free_ab;  // free entries per A/B row
    int digits;   // total ring digits per candidate
};

CandidateShape shape_for(const SearchConfig& cfg) {
    CandidateShape s;
    s.n = cfg.n;
    s.free_ab = cfg.variant == Variant::Symmetric ? cfg.n / 2 + 1 : cfg.n;
    s.digits = 2 * s.free_ab + 2 * cfg.n;
    return s;
}

Vec mirror_complete(Ring ring, const std::vector<uint8_t>& free_entries, int n) {
    Vec full(ring, size_t(n));
    for (int i = 0; i < int(free_entries.size()); ++i) full.e[i] = free_entries[i];
    for (int i = int(free_entries.size()); i < n; ++i) full.e[i] = full.e[n - i];
    return full;
}

Recipe recipe_from_digits(const SearchConfig& cfg, Elem lambda,
                          const std::vector<uint8_t>& digits) {
    const CandidateShape s = shape_for(cfg);
    Recipe r;
    r.variant = cfg.variant;
    r.ring = cfg.ring;
    r.lambda = lambda;
    auto cut = [&](int offset, int count) {
        Vec v(cfg.ring, size_t(count));
        for (int i = 0; i < count; ++i) v.e[i] = digits[offset + i];
        return v;
    };
    if (cfg.variant == Variant::Symmetric) {
        r.r_a = mirror_complete(cfg.ring, {digits.begin(), digits.begin() + s.free_ab}, s.n);
        r.r_b = mirror_complete(
            cfg.ring, {digits.begin() + s.free_ab, digits.begin() + 2 * s.free_ab}, s.n);
    } else {
        r.r_a = cut(0, s.n);
        r.r_b = cut(s.n, s.n);
    }
    r.r_c = cut(2 * s.free_ab, s.n);
    r.r_d = cut(2 * s.free_ab + s.n, s.n);
    return r;
}

/// Runs one candidate through conditions, build, Gray map, the early-exit
/// distance filter and full profiling. Returns a hit when the target matches.
std::optional<SearchHit> try_candidate(const SearchConfig& cfg, const Recipe& recipe) {
    if (!check_conditions(recipe).ok()) return std::nullopt;
    const Mat g = build_baumert_hall(recipe);
    const BinaryCode bin = gray_image(g);
    if (bin.length() != 2 * bin.dimension()) return std::nullopt;
    if (cfg.target.length && bin.length() != cfg.target.length) return std::nullopt;
    if (!bin.is_self_dual()) return std::nullopt;
    CodeAnalyzer an(bin);
    if (cfg.target.min_distance > 1 && an.exists_word_below(cfg.target.min_distance))
        return std::nullopt;
    SearchHit hit;
    hit.profile = profile_code(an);
    if (!cfg.target.matches(hit.profile)) return std::nullopt;

    hit.record.recipe = recipe;
    hit.record.expect.d = hit.profile.min_distance;
    hit.record.expect.type_two = hit.profile.type_two;
    if (hit.profile.family != Family::None) hit.record.expect.family = hit.profile.family;
    hit.record.expect.beta = hit.profile.beta;
    hit.record.expect.gamma = hit.profile.gamma;
    hit.record.expect.alpha = hit.profile.alpha;

    if (cfg.i16_fingerprint && bin.length() == 80) {
        const PairDistanceInvariant inv = i16_invariant(an);
        hit.record.expect.i16 = inv.i16;
        hit.fingerprint = {(long long)inv.i16, 0};
    } else {
        auto get = [&](int w) {
            auto it = hit.profile.counts.find(w);
            return it == hit.profile.counts.end() ? -1LL : it->second;
        };
        long long first = get(12);
        if (first < 0) first = get(16);
        hit.fingerprint = {first, get(14)};
    }
    return hit;
}

std::vector<SearchHit> scan_random_range(const SearchConfig& cfg, int range, uint64_t count) {
    const CandidateShape s = shape_for(cfg);
    std::mt19937_64 rng(splitmix64(cfg.seed ^ (0x5eedULL + uint64_t(range) * 0x9e37U)));
    std::uniform_int_distribution<int> digit(0, ring_size(cfg.ring) - 1);
    std::uniform_int_distribution<size_t> lam(0, cfg.lambda_candidates.size() - 1);
    std::vector<SearchHit> hits;
    std::vector<uint8_t> digits(s.digits);
    for (uint64_t c = 0; c < count; ++c) {
        const Elem lambda = cfg.lambda_candidates[lam(rng)];
        for (auto& d : digits) d = uint8_t(digit(rng));
        Recipe recipe = recipe_from_digits(cfg, lambda, digits);
        if (auto hit = try_candidate(cfg, recipe)) {
            hit->record.id = "hit_r" + std::to_string(range) + "_" + std::to_string(c);
            hits.push_back(std::move(*hit));
        }
    }
    return hits;
}

std::vector<SearchHit> scan_exhaustive_range(const SearchConfig& cfg, int range, uint64_t begin,
                                             uint64_t end) {
    const CandidateShape s = shape_for(cfg);
    const uint64_t base = ring_size(cfg.ring);
    std::vector<SearchHit> hits;
    std::vector<uint8_t> digits(s.digits);
    for (uint64_t index = begin; index < end; ++index) {
        uint64_t v = index;
        const Elem lambda = cfg.lambda_candidates[v % cfg.lambda_candidates.size()];
        v /= cfg.lambda_candidates.size();
        for (int i = 0; i < s.digits; ++i) {
            digits[i] = uint8_t(v % base);
            v /= base;
        }
        Recipe recipe = recipe_from_digits(cfg, lambda, digits);
        if (auto hit = try_candidate(cfg, recipe)) {
            hit->record.id = "hit_x" + std::to_string(index);
            hits.push_back(std::move(*hit));
        }
        (void)range;
    }
    return hits;
}

}  // namespace

std::vector<SearchHit> run_search(const SearchConfig& config, int workers) {
    if (config.lambda_candidates.empty())
        throw std::invalid_argument("run_search: no lambda candidates");
    for (Elem l : config.lambda_candidates)
        if (l.ring != config.ring || !is_self_inverse_unit(l))
            throw std::invalid_argument("run_search: lambda candidates must satisfy lambda^2 = 1");
    if (config.n <= 0) throw std::invalid_argument("run_search: n must be positive");
    if (workers <= 0) workers = 1;

    const int ranges = std::max(1, config.ranges);
    // Per-range candidate counts (random) or index intervals (exhaustive),
    // fixed by the config alone.
    std::vector<std::pair<uint64_t, uint64_t>> slices(ranges);
    uint64_t space = config.budget;
    if (config.mode == SearchMode::Exhaustive) {
        const CandidateShape s = shape_for(config);
        long double total = (long double)config.lambda_candidates.size();
        for (int i = 0; i < s.digits; ++i) {
            total *= ring_size(config.ring);
            if (total > 2e18L) throw std::invalid_argument("run_search: exhaustive space too big");
        }
        space = uint64_t(total);
        if (space > config.budget)
            throw std::invalid_argument("run_search: exhaustive space exceeds the budget");
    }
    {
        const uint64_t per = space / ranges, extra = space % ranges;
        uint64_t at = 0;
        for (int r = 0; r < ranges; ++r) {
            const uint64_t len = per + (uint64_t(r) < extra ? 1 : 0);
            slices[r] = {at, at + len};
            at += len;
        }
    }

    std::vector<std::vector<SearchHit>> results(ranges);
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= ranges) return;
            if (slices[r].first == slices[r].second) continue;
            results[r] = config.mode == SearchMode::Random
                             ? scan_random_range(config, r, slices[r].second - slices[r].first)
                             : scan_exhaustive_range(config, r, slices[r].first, slices[r].second);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    std::vector<SearchHit> merged;
    for (auto& part : results)
        for (auto& hit : part) merged.push_back(std::move(hit));
    return merged;
}

std::vector<SearchHit> dedupe_hits(std::vector<SearchHit> hits) {
    std::map<std::pair<long long, long long>, bool> seen;
    std::vector<SearchHit> out;
    for (auto& hit : hits)
        if (seen.emplace(hit.fingerprint, true).second) out.push_back(std::move(hit));
    return out;
}

std::string serialize_search_config(const SearchConfig& config) {
    std::ostringstream out;
    out << "ring=" << ring_name(config.ring) << "\n";
    out << "variant=" << variant_name(config.variant) << "\n";
    out << "lambda=";
    for (size_t i = 0; i < config.lambda_candidates.size(); ++i)
        out << (i ? "," : "") << hex_encode(config.lambda_candidates[i]);
    out << "\n";
    out << "n=" << config.n << "\n";
    out << "mode=" << (config.mode == SearchMode::Random ? "random" : "exhaustive") << "\n";
    out << "seed=" << config.seed << "\n";
    out << "budget=" << config.budget << "\n";
    out << "ranges=" << config.ranges << "\n";
    if (config.target.length) out << "target_length=" << config.target.length << "\n";
    if (config.target.min_distance) out << "target_d=" << config.target.min_distance << "\n";
    if (config.target.family) out << "target_family=" << family_name(*config.target.family) << "\n";
    if (config.target.beta) out << "target_beta=" << *config.target.beta << "\n";
    if (config.target.gamma) out << "target_gamma=" << *config.target.gamma << "\n";
    if (config.target.alpha) out << "target_alpha=" << *config.target.alpha << "\n";
    if (config.i16_fingerprint) out << "i16_fingerprint=1\n";
    return out.str();
}

SearchConfig load_search_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open search manifest: " + path);
    SearchConfig cfg;
    cfg.lambda_candidates.clear();
    std::string line;
    std::map<std::string, std::string> kv;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("search manifest: expected key=value: '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto get = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };
    if (auto v = get("ring")) cfg.ring = ring_from_name(*v);
    if (auto v = get("variant")) cfg.variant = variant_from_name(*v);
    if (auto v = get("lambda")) {
        std::istringstream ls(*v);
        std::string tok;
        while (std::getline(ls, tok, ','))
            if (!tok.empty()) cfg.lambda_candidates.push_back(hex_decode(tok[0], cfg.ring));
    }
    if (cfg.lambda_candidates.empty()) cfg.lambda_candidates = {ring_one(cfg.ring)};
    if (auto v = get("n")) cfg.n = std::stoi(*v);
    if (auto v = get("mode")) {
        if (*v == "random")
            cfg.mode = SearchMode::Random;
        else if (*v == "exhaustive")
            cfg.mode = SearchMode::Exhaustive;
        else
            throw std::invalid_argument("search manifest: mode must be random or exhaustive");
    }
    if (auto v = get("seed")) cfg.seed = std::stoull(*v);
    if (auto v = get("budget")) cfg.budget = std::stoull(*v);
    if (auto v = get("ranges")) cfg.ranges = std::stoi(*v);
    if (auto v = get("target_length")) cfg.target.length = std::stoi(*v);
    if (auto v = get("target_d")) cfg.target.min_distance = std::stoi(*v);
    if (auto v = get("target_family")) cfg.target.family = family_from_name(*v);
    if (auto v = get("target_beta")) cfg.target.beta = std::stoll(*v);
    if (auto v = get("target_gamma")) cfg.target.gamma = std::stoll(*v);
    if (auto v = get("target_alpha")) cfg.target.alpha = std::stoll(*v);
    if (auto v = get("i16_fingerprint")) cfg.i16_fingerprint = (*v == "1" || *v == "true");
    return cfg;
}

}  // namespace bhsd
