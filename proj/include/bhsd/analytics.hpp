#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bhsd/binary_code.hpp"

namespace bhsd {

/// Extremal weight-enumerator families with their free parameters.
enum class Family : uint8_t { None, W64_1, W64_2, W68_1, W68_2, W72, W80 };

const char* family_name(Family f);
Family family_from_name(std::string_view name);

struct WeightProfile {
    int min_distance = 0;
    std::map<int, long long> counts;  // A_w for the computed weights
    bool type_two = false;
    Family family = Family::None;
    std::optional<long long> beta, gamma, alpha;
    std::string note;
};

struct DistanceVerdict {
    bool confirmed = false;
    int found_weight = 0;              // smallest nonzero weight at most the claim; 0 if none
    std::vector<uint64_t> witness;     // a codeword of found_weight (original coordinates)
};

/// Caches the two information-set generators [I|M] and [M^T|I] of a binary
/// self-dual code; every weight enumeration below runs over both so that any
/// codeword with light first OR second half is seen.
class CodeAnalyzer {
  public:
    explicit CodeAnalyzer(const BinaryCode& code);

    const BinaryCode& code() const { return code_; }
    const BinaryCode& standard() const { return standard_; }
    const BinaryCode& second() const { return second_; }

    /// Exact A_w. Enumerates messages of weight <= floor(w/2) over both
    /// generators; the two passes partition the weight-w codewords by
    /// "first half weight <= t" vs "second half <= t and first half > t".
    long long count_weight(int w, uint64_t max_nodes = kDefaultBudget) const;

    /// Calls fn once per codeword of weight w (original coordinates).
    void for_each_word_of_weight(int w, const std::function<void(const uint64_t*)>& fn,
                                 uint64_t max_nodes = kDefaultBudget) const;

    std::vector<std::vector<uint64_t>> codewords_of_weight(
        int w, uint64_t max_nodes = kDefaultBudget) const;

    /// Confirms or refutes d(C) = d_claim by enumerating all codewords of
    /// weight <= d_claim (message weight <= floor(d_claim/2) on either
    /// information set covers them all).
    DistanceVerdict min_distance_verify(int d_claim, uint64_t max_nodes = kDefaultBudget) const;

    /// True minimum distance; sound for self-dual codes because the Rains
    /// bound caps d, so enumerating up to the bound always finds a minimum
    /// weight word.
    int min_distance(uint64_t max_nodes = kDefaultBudget) const;

    /// Early-exit filter: true iff some nonzero codeword has weight < d.
    bool exists_word_below(int d, uint64_t max_nodes = kDefaultBudget) const;

    static constexpr uint64_t kDefaultBudget = 6'000'000'000ULL;

  private:
    void unpermute(uint64_t* word) const;

    BinaryCode code_;
    BinaryCode standard_;
    BinaryCode second_;
    std::vector<std::pair<int, int>> column_swaps_;
};

struct EnumeratorFit {
    Family family = Family::None;
    std::optional<long long> beta, gamma, alpha;
    std::string note;
    bool ok() const { return family != Family::None; }
};

/// Reads the family parameters out of the counted A_w values:
/// length 64 needs A12+A14, 68 needs A12+A14, 72 needs A12, 80 needs A16.
EnumeratorFit classify_enumerator(int length, const std::map<int, long long>& counts);

struct PairDistanceInvariant {
    std::vector<uint64_t> histogram;  // index = pairwise Hamming distance
    uint64_t i16 = 0;
    uint64_t pair_count = 0;
    uint64_t word_count = 0;
};

/// All-pairs distance histogram over the weight-16 codewords of an
/// [80,40,16] code; the distance-16 entry separates inequivalent codes.
/// threads = 0 picks the hardware concurrency.
PairDistanceInvariant i16_invariant(const CodeAnalyzer& an, int threads = 0);

/// Counts the weight-w codewords covering `trials` random t_size-subsets of
/// coordinates; returns the common count when it is constant, nullopt when
/// the counts differ (not a design at this weight).
std::optional<long long> design_lambda(const CodeAnalyzer& an, int w, int t_size, int trials,
                                       uint64_t seed);

/// Rains upper bound on the minimum distance of a binary self-dual code.
int extremal_bound(int n);

/// Full profile for one of the table lengths: counts the weights the family
/// formulas constrain, verifies the minimum distance, and classifies.
WeightProfile profile_code(const CodeAnalyzer& an);

BinaryCode permute_columns(const BinaryCode& code, const std::vector<int>& perm);

}  // namespace bhsd
