#pragma once

#include "bhsd/files.hpp"

namespace bhsd {

/// Result of running a record through construction -> (extension) ->
/// Gray map -> (neighbor).
struct RealizedCode {
    BinaryCode binary;
    ConditionReport conditions;
    bool neighbor_x_was_in_code = false;
};

RealizedCode realize(const RecipeRecord& rec);

/// Per-row reproduction outcome: the recomputed profile compared against the
/// record's published values. `slow` additionally checks the pair-distance
/// invariant / heavy counts when the record expects them.
struct RowCheck {
    std::string id;
    bool pass = false;
    bool low_confidence = false;
    std::string detail;
    WeightProfile profile;
};

RowCheck verify_record(const RecipeRecord& rec, bool slow = false, int threads = 0);

/// Expands nb_x (half or full length) into a packed x vector for `length`.
std::vector<uint64_t> expand_neighbor_x(const std::string& bits, int length);

}  // namespace bhsd
