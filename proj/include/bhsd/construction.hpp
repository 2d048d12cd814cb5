#pragma once

#include <optional>
#include <string>

#include "bhsd/binary_code.hpp"
#include "bhsd/ring_matrix.hpp"

namespace bhsd {

/// Which condition set a recipe must satisfy. `Theorem31` takes the paired
/// skew condition as one equation; `Amicable` splits it into the two
/// amicability equations; `Symmetric` requires A and B symmetric circulant
/// and only the (C, D) amicability equation.
enum class Variant : uint8_t { Theorem31, Amicable, Symmetric };

const char* variant_name(Variant v);
Variant variant_from_name(std::string_view name);

/// First rows of the four circulant blocks plus the twist unit; fully
/// determines one generator matrix. For the Symmetric variant r_a and r_b
/// may be given as printed half rows (mirror-expanded against the length
/// of r_c).
struct Recipe {
    Variant variant = Variant::Theorem31;
    Ring ring = Ring::F2;
    Elem lambda{1, Ring::F2};
    Vec r_a, r_b, r_c, r_d;
};

/// The four full first rows after half-row expansion, all of length n.
struct ExpandedRows {
    int n = 0;
    Vec a, b, c, d;
};

ExpandedRows expand_recipe_rows(const Recipe& recipe);

/// Builds the four blocks (A symmetric blocks use lambda = 1).
struct Blocks {
    Mat a, b, c, d;
};

Blocks build_blocks(const Recipe& recipe);

/// Outcome of evaluating the variant's equation set. `failed` names each
/// violated condition: "lambda", "symmetry", "gram" (the Gram sum must equal
/// the identity), "pair_ab", "pair_cd", "pair_sum".
struct ConditionReport {
    bool shape_ok = false;
    bool gram_ok = false;
    bool skew_ok = false;
    std::vector<std::string> failed;
    std::optional<Mat> gram_residual;  // Gram sum minus identity, when nonzero

    bool ok() const { return shape_ok && gram_ok && skew_ok; }
    std::string summary() const;
};

ConditionReport check_conditions(const Recipe& recipe);

/// The 4n x 8n generator [I | N] with N the four-block array
///   ( A    B    C    D  )
///   (-B    A   -D    C  )
///   (-C^T  D^T  A^T -B^T)
///   (-D^T -C^T  B^T  A^T).
/// Throws when check_conditions fails, naming the violated conditions.
Mat build_baumert_hall(const Recipe& recipe);

/// F2U image of an F4U generator: each row r contributes the images of r and
/// w*r, giving a 2k x 2n generator of the same code read over F2U.
Mat gray_matrix_f4u_to_f2u(const Mat& generator);

/// Generator G * G^T == 0 over the ring.
bool ring_self_orthogonal(const Mat& generator);

/// Number of unit-pivot steps Gaussian elimination achieves; equals the rank
/// of the free part. Our self-dual generators must achieve full row count.
int ring_free_rank(const Mat& generator);

/// Ring-level standard form [I_k | M]; throws when no unit pivot can be
/// found (the code would not be free on an information set).
struct RingStandardForm {
    Mat generator;
    std::vector<std::pair<int, int>> column_swaps;
};

RingStandardForm ring_standard_form(const Mat& generator);

/// Building-up extension over a characteristic-2 ring (F2 or F2U): borders a
/// self-dual k x n generator into a (k+1) x (n+2) one,
///   ( 1    0    | X  )
///   ( y_i  c y_i| r_i)   with y_i = <r_i, X>.
/// Requires c^2 = 1 and <X,X> = 1; the output is verified self-dual.
Mat extend_code(const Mat& generator, Elem c, const Vec& X);

/// Neighbor of a binary self-dual [2k,k] code: D = < <x>-perp intersect C, x >.
/// x must have even weight; when x lies in C the result is C itself, flagged.
struct NeighborResult {
    BinaryCode code;
    bool x_was_in_code = false;
};

NeighborResult neighbor(const BinaryCode& self_dual, const std::vector<uint64_t>& x);

}  // namespace bhsd
