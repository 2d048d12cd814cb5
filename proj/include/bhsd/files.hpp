#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "bhsd/analytics.hpp"
#include "bhsd/construction.hpp"

namespace bhsd {

/// One fixture or search-log record: a construction recipe, optionally chained
/// with a building-up extension and a neighbor step, plus the published values
/// the rebuilt code must reproduce. Text form is one line of key=value tokens.
struct RecipeRecord {
    std::string id;
    Recipe recipe;

    // Extension step (applied to the base code mapped down to ext ring).
    std::optional<Elem> ext_c;
    std::optional<Vec> ext_x;

    // Neighbor step on the binary image. Either the full-length bit string or
    // just the lower half (the upper half is then taken as all zero).
    std::optional<std::string> nb_x;

    bool low_confidence = false;  // transcription flagged as uncertain
    std::string aut;              // reported automorphism group order; unchecked metadata

    struct Expect {
        std::optional<int> d;
        std::optional<Family> family;
        std::optional<long long> beta, gamma, alpha;
        std::optional<long long> a16, a20;
        std::optional<uint64_t> i16;
        std::optional<bool> type_two;
    } expect;
};

RecipeRecord parse_recipe_line(const std::string& line);
std::vector<RecipeRecord> parse_recipe_stream(std::istream& in);
std::vector<RecipeRecord> load_recipe_file(const std::string& path);
std::string serialize_record(const RecipeRecord& rec);

/// Binary code artifact: header plus hex-packed generator rows (4 coordinates
/// per digit, coordinate 0 in the high bit of the first digit).
struct CodeArtifact {
    std::string id;
    BinaryCode code;
    WeightProfile profile;
};

std::string hex_pack_row(const uint64_t* words, int nbits);
std::vector<uint64_t> hex_unpack_row(const std::string& hex, int nbits);

void write_artifact(std::ostream& out, const CodeArtifact& art);
void write_artifact_file(const std::string& path, const CodeArtifact& art);
CodeArtifact read_artifact(std::istream& in);
CodeArtifact read_artifact_file(const std::string& path);

}  // namespace bhsd
