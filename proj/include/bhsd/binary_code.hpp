#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bhsd/ring_matrix.hpp"

namespace bhsd {

/// Bit-packed generator matrix of a binary linear code. Bit j of row i lives
/// in word j/64, bit j%64. Rows are kept full rank; use `reduce_rows` when
/// assembling from a possibly dependent spanning set.
class BinaryCode {
  public:
    BinaryCode() = default;
    BinaryCode(int length, int dimension);

    static BinaryCode from_string_rows(const std::vector<std::string>& rows);

    int length() const { return n_; }
    int dimension() const { return k_; }
    int words() const { return w_; }

    const uint64_t* row(int i) const { return data_.data() + size_t(i) * w_; }
    uint64_t* row(int i) { return data_.data() + size_t(i) * w_; }
    bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    void set(int i, int j, bool v);

    std::string row_string(int i) const;

    /// G * G^T == 0 and n == 2k.
    bool is_self_dual() const;
    /// G * G^T == 0 (no dimension requirement).
    bool is_self_orthogonal() const;
    /// Doubly-even test; valid via generator rows only once self-orthogonality
    /// is established (weights add mod 4 when intersections are even).
    bool is_type_ii() const;

    int row_weight(int i) const;

    /// True iff x (packed, length() bits) lies in the row space.
    bool contains(const uint64_t* x) const;

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

  private:
    int n_ = 0, k_ = 0, w_ = 0;
    std::vector<uint64_t> data_;
};

/// Row-reduces a spanning set in place and returns the independent rows; the
/// row space is unchanged.
BinaryCode reduce_rows(int length, std::vector<std::vector<uint64_t>> rows);

/// Standard form [I_k | M] of a full-rank code, together with any column
/// swaps that were needed when the leading k x k block was singular.
struct StandardForm {
    BinaryCode code;
    std::vector<std::pair<int, int>> column_swaps;  // applied left to right
};

StandardForm standard_form(const BinaryCode& code);

/// Second information-set generator [M^T | I_k] derived from [I_k | M].
/// For a self-dual code it generates the same code (it is the parity check,
/// and C = C-perp).
BinaryCode second_generator(const BinaryCode& standard);

/// Binary Gray image of the row space of a generator matrix over a ring:
/// the F2-span of the images of all F2-basis multiples of the rows,
/// row-reduced to a full-rank generator.
BinaryCode gray_image(const Mat& generator);

std::vector<uint64_t> pack_bit_string(const std::string& s);
std::string unpack_bit_string(const std::vector<uint64_t>& words, int nbits);
int popcount_words(const uint64_t* w, int nwords);

}  // namespace bhsd
