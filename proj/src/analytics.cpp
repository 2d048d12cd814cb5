#include "bhsd/analytics.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <thread>

#include "bhsd/enumeration.hpp"

namespace bhsd {

uint64_t combination_count(int k, int t) {
    uint64_t total = 0;
    long double c = 1;
    for (int r = 1; r <= t && r <= k; ++r) {
        c = c * (k - r + 1) / r;
        if (c > 1e18L) return UINT64_MAX;
        total += uint64_t(c + 0.5L);
    }
    return total;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::W64_1: return "W64_1";
        case Family::W64_2: return "W64_2";
        case Family::W68_1: return "W68_1";
        case Family::W68_2: return "W68_2";
        case Family::W72: return "W72";
        case Family::W80: return "W80";
        default: return "none";
    }
}

Family family_from_name(std::string_view name) {
    for (Family f : {Family::W64_1, Family::W64_2, Family::W68_1, Family::W68_2, Family::W72,
                     Family::W80, Family::None})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown enumerator family: " + std::string(name));
}

CodeAnalyzer::CodeAnalyzer(const BinaryCode& code) : code_(code) {
    if (code.length() != 2 * code.dimension())
        throw std::invalid_argument("CodeAnalyzer: needs a rate-1/2 code");
    if (!code.is_self_orthogonal())
        throw std::invalid_argument("CodeAnalyzer: code is not self-dual");
    StandardForm sf = standard_form(code);
    standard_ = std::move(sf.code);
    column_swaps_ = std::move(sf.column_swaps);
    second_ = second_generator(standard_);
}

void CodeAnalyzer::unpermute(uint64_t* word) const {
    // Standard-form column swaps were applied left to right; undo in reverse.
    for (auto it = column_swaps_.rbegin(); it != column_swaps_.rend(); ++it) {
        const auto [a, b] = *it;
        const uint64_t va = (word[a >> 6] >> (a & 63)) & 1, vb = (word[b >> 6] >> (b & 63)) & 1;
        if (va != vb) {
            word[a >> 6] ^= uint64_t(1) << (a & 63);
            word[b >> 6] ^= uint64_t(1) << (b & 63);
        }
    }
}

namespace {

void check_budget(int k, int t, uint64_t max_nodes) {
    if (combination_count(k, t) > max_nodes)
        throw std::invalid_argument("enumeration budget exceeded: C(" + std::to_string(k) +
                                    ", <=" + std::to_string(t) + ") combinations");
}

}  // namespace

long long CodeAnalyzer::count_weight(int w, uint64_t max_nodes) const {
    if (w == 0) return 1;
    if (w < 0 || w > code_.length()) return 0;
    const int k = code_.dimension(), words = code_.words();
    const int t = w / 2;
    check_budget(k, t, max_nodes);
    long long total = 0;
    // Pass 1: first-half weight = message weight <= t.
    for_each_combination_dyn(standard_.row(0), k, words, t, [&](const uint64_t* acc, int) {
        if (popcount_words(acc, words) == w) ++total;
        return true;
    });
    // Pass 2: second-half weight = message weight r, keep first half > t,
    // i.e. r < w - t. Disjoint from pass 1 and covers the rest.
    const int t2 = std::min(t, w - t - 1);
    if (t2 > 0)
        for_each_combination_dyn(second_.row(0), k, words, t2, [&](const uint64_t* acc, int r) {
            if (popcount_words(acc, words) == w && r < w - t) ++total;
            return true;
        });
    return total;
}

void CodeAnalyzer::for_each_word_of_weight(int w, const std::function<void(const uint64_t*)>& fn,
                                           uint64_t max_nodes) const {
    if (w <= 0 || w > code_.length()) return;
    const int k = code_.dimension(), words = code_.words();
    const int t = w / 2;
    check_budget(k, t, max_nodes);
    std::vector<uint64_t> buf(words);
    auto emit = [&](const uint64_t* acc) {
        std::copy(acc, acc + words, buf.begin());
        unpermute(buf.data());
        fn(buf.data());
    };
    for_each_combination_dyn(standard_.row(0), k, words, t, [&](const uint64_t* acc, int) {
        if (popcount_words(acc, words) == w) emit(acc);
        return true;
    });
    const int t2 = std::min(t, w - t - 1);
    if (t2 > 0)
        for_each_combination_dyn(second_.row(0), k, words, t2, [&](const uint64_t* acc, int r) {
            if (popcount_words(acc, words) == w && r < w - t) emit(acc);
            return true;
        });
}

std::vector<std::vector<uint64_t>> CodeAnalyzer::codewords_of_weight(int w,
                                                                     uint64_t max_nodes) const {
    std::vector<std::vector<uint64_t>> out;
    const int words = code_.words();
    for_each_word_of_weight(
        w, [&](const uint64_t* word) { out.emplace_back(word, word + words); }, max_nodes);
    return out;
}

DistanceVerdict CodeAnalyzer::min_distance_verify(int d_claim, uint64_t max_nodes) const {
    if (d_claim <= 0) throw std::invalid_argument("min_distance_verify: claim must be positive");
    const int k = code_.dimension(), words = code_.words();
    const int t = d_claim / 2;
    check_budget(k, t, max_nodes);
    DistanceVerdict v;
    int best = d_claim + 1;
    std::vector<uint64_t> witness(words, 0);
    auto scan = [&](const BinaryCode& gen) {
        for_each_combination_dyn(gen.row(0), k, words, t, [&](const uint64_t* acc, int) {
            const int wt = popcount_words(acc, words);
            if (wt < best) {
                best = wt;
                std::copy(acc, acc + words, witness.begin());
            }
            return true;
        });
    };
    scan(standard_);
    scan(second_);
    if (best <= d_claim) {
        v.found_weight = best;
        unpermute(witness.data());
        v.witness = std::move(witness);
        v.confirmed = (best == d_claim);
    }
    return v;
}

int CodeAnalyzer::min_distance(uint64_t max_nodes) const {
    const DistanceVerdict v = min_distance_verify(extremal_bound(code_.length()), max_nodes);
    if (v.found_weight == 0)
        throw std::logic_error("min_distance: no codeword within the extremal bound");
    return v.found_weight;
}

bool CodeAnalyzer::exists_word_below(int d, uint64_t max_nodes) const {
    const int k = code_.dimension(), words = code_.words();
    const int t = (d - 1) / 2;
    check_budget(k, t, max_nodes);
    bool found = false;
    auto scan = [&](const BinaryCode& gen) {
        if (found) return;
        for_each_combination_dyn(gen.row(0), k, words, t, [&](const uint64_t* acc, int) {
            if (popcount_words(acc, words) < d) {
                found = true;
                return false;
            }
            return true;
        });
    };
    scan(standard_);
    scan(second_);
    return found;
}

EnumeratorFit classify_enumerator(int length, const std::map<int, long long>& counts) {
    EnumeratorFit fit;
    auto need = [&](int w) -> long long {
        auto it = counts.find(w);
        if (it == counts.end())
            throw std::invalid_argument("classify_enumerator: A_" + std::to_string(w) +
                                        " not provided for length " + std::to_string(length));
        return it->second;
    };
    switch (length) {
        case 64: {
            const long long a12 = need(12), a14 = need(14);
            if ((a12 - 1312) % 16 != 0 || a12 < 1312) {
                fit.note = "A12 does not fit 1312 + 16*beta";
                return fit;
            }
            const long long beta = (a12 - 1312) / 16;
            if (a14 == 22016 - 64 * beta)
                fit.family = Family::W64_1;
            else if (a14 == 23040 - 64 * beta)
                fit.family = Family::W64_2;
            else {
                fit.note = "A14 matches neither length-64 family";
                return fit;
            }
            fit.beta = beta;
            return fit;
        }
        case 68: {
            const long long a12 = need(12), a14 = need(14);
            if ((a12 - 442) % 4 != 0 || a12 < 442) {
                fit.note = "A12 does not fit 442 + 4*beta";
                return fit;
            }
            const long long beta = (a12 - 442) / 4;
            if (a14 == 10864 - 8 * beta) {
                fit.family = Family::W68_1;
                fit.beta = beta;
                return fit;
            }
            const long long rem = 14960 - 8 * beta - a14;
            if (rem % 256 == 0 && rem / 256 >= 0 && rem / 256 <= 9) {
                fit.family = Family::W68_2;
                fit.beta = beta;
                fit.gamma = rem / 256;
                return fit;
            }
            fit.note = "A14 matches neither length-68 family (gamma out of 0..9)";
            return fit;
        }
        case 72: {
            fit.family = Family::W72;
            fit.alpha = need(12) - 4398;
            return fit;
        }
        case 80: {
            if (need(16) != 97565) {
                fit.note = "A16 != 97565; not the extremal length-80 enumerator";
                return fit;
            }
            fit.family = Family::W80;
            return fit;
        }
        default: fit.note = "no enumerator family catalogued for this length"; return fit;
    }
}

PairDistanceInvariant i16_invariant(const CodeAnalyzer& an, int threads) {
    const BinaryCode& code = an.code();
    if (code.length() != 80 || code.dimension() != 40)
        throw std::invalid_argument("i16_invariant: expects an [80,40] code");
    const auto words = an.codewords_of_weight(16);
    const size_t m = words.size();
    // Flatten to two words per codeword.
    std::vector<uint64_t> flat(2 * m);
    for (size_t i = 0; i < m; ++i) {
        flat[2 * i] = words[i][0];
        flat[2 * i + 1] = words[i][1];
    }

    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<uint64_t>> hists(threads, std::vector<uint64_t>(81, 0));
    auto work = [&](int tid) {
        auto& hist = hists[tid];
        // Strided rows balance the triangular loop.
        for (size_t i = tid; i < m; i += size_t(threads)) {
            const uint64_t a0 = flat[2 * i], a1 = flat[2 * i + 1];
            for (size_t j = i + 1; j < m; ++j) {
                const int d =
                    std::popcount(a0 ^ flat[2 * j]) + std::popcount(a1 ^ flat[2 * j + 1]);
                ++hist[d];
            }
        }
    };
    std::vector<std::thread> pool;
    for (int tdx = 1; tdx < threads; ++tdx) pool.emplace_back(work, tdx);
    work(0);
    for (auto& th : pool) th.join();

    PairDistanceInvariant inv;
    inv.histogram.assign(81, 0);
    for (const auto& h : hists)
        for (int d = 0; d <= 80; ++d) inv.histogram[d] += h[d];
    inv.i16 = inv.histogram[16];
    inv.word_count = m;
    inv.pair_count = m * (m - 1) / 2;
    return inv;
}

std::optional<long long> design_lambda(const CodeAnalyzer& an, int w, int t_size, int trials,
                                       uint64_t seed) {
    const int n = an.code().length();
    if (t_size <= 0 || t_size > n) throw std::invalid_argument("design_lambda: bad subset size");
    const auto words = an.codewords_of_weight(w);
    std::mt19937_64 rng(seed);
    std::vector<int> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = i;

    std::optional<long long> common;
    for (int trial = 0; trial < trials; ++trial) {
        // Draw t_size distinct coordinates.
        for (int i = 0; i < t_size; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(coords[i], coords[pick(rng)]);
        }
        long long covering = 0;
        for (const auto& word : words) {
            bool all = true;
            for (int i = 0; i < t_size && all; ++i) {
                const int c = coords[i];
                all = (word[c >> 6] >> (c & 63)) & 1;
            }
            covering += all;
        }
        if (!common)
            common = covering;
        else if (*common != covering)
            return std::nullopt;
    }
    return common;
}

int extremal_bound(int n) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("extremal_bound: length must be a positive even integer");
    return n % 24 == 22 ? 4 * (n / 24) + 6 : 4 * (n / 24) + 4;
}

WeightProfile profile_code(const CodeAnalyzer& an) {
    WeightProfile p;
    const int n = an.code().length();
    p.min_distance = an.min_distance();
    p.type_two = an.code().is_type_ii();
    std::vector<int> weights;
    switch (n) {
        case 64: weights = {12, 14}; break;
        case 68: weights = {12, 14}; break;
        case 72: weights = {12}; break;
        case 80: weights = {16}; break;
        default: break;
    }
    for (int w : weights) p.counts[w] = an.count_weight(w);
    if (!weights.empty()) {
        const EnumeratorFit fit = classify_enumerator(n, p.counts);
        p.family = fit.family;
        p.beta = fit.beta;
        p.gamma = fit.gamma;
        p.alpha = fit.alpha;
        p.note = fit.note;
    }
    return p;
}

BinaryCode permute_columns(const BinaryCode& code, const std::vector<int>& perm) {
    if (int(perm.size()) != code.length())
        throw std::invalid_argument("permute_columns: permutation length mismatch");
    BinaryCode out(code.length(), code.dimension());
    for (int i = 0; i < code.dimension(); ++i)
        for (int j = 0; j < code.length(); ++j)
            if (code.get(i, j)) out.set(i, perm[j], true);
    return out;
}

}  // namespace bhsd
