#pragma once

#include "bhsd/ring.hpp"

namespace bhsd {

/// Dense matrix over one of the three rings, row-major packed element bits.
struct Mat {
    Ring ring = Ring::F2;
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> a;

    Mat() = default;
    Mat(Ring r, int m, int n) : ring(r), rows(m), cols(n), a(size_t(m) * n, 0) {
        if (m <= 0 || n <= 0) throw std::invalid_argument("Mat: dimensions must be positive");
    }

    Elem at(int i, int j) const { return {a[size_t(i) * cols + j], ring}; }
    uint8_t bits(int i, int j) const { return a[size_t(i) * cols + j]; }
    void set(int i, int j, Elem v);
    void set_bits(int i, int j, uint8_t b) { a[size_t(i) * cols + j] = b; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);

    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_identity(Ring r, int n);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& m);
bool is_identity(const Mat& m);
bool is_zero(const Mat& m);
bool is_symmetric(const Mat& m);

/// Horizontal concatenation [x | y].
Mat mat_hcat(const Mat& x, const Mat& y);

/// The lambda-circular shift: (a_1,...,a_n) -> (lambda*a_n, a_1,...,a_{n-1}).
Vec lambda_shift(Elem lambda, const Vec& row);

/// Describes one lambda-circulant block. For symmetric blocks lambda must be 1
/// and the first row must satisfy row[i] = row[n-i] for 1 <= i <= n-1.
struct CirculantSpec {
    Ring ring = Ring::F2;
    Elem lambda;
    Vec first_row;
    bool symmetric = false;
};

/// Stacks first_row, shift(first_row), ..., shift^{n-1}(first_row).
/// Throws if lambda is not a self-inverse unit or a symmetric spec is violated.
Mat build_circulant(const CirculantSpec& spec);

inline Mat build_circulant(Elem lambda, const Vec& first_row) {
    return build_circulant({first_row.ring, lambda, first_row, false});
}

/// Mirror-expands the printed half of a symmetric first row: given the first
/// (n+1)/2 entries, fills row[i] = row[n-i]. Only odd n is meaningful here.
Vec expand_symmetric_half(const Vec& half, int n);

/// True iff row[i] == row[n-i] for all 1 <= i <= n-1 (so circ(row) is symmetric).
bool is_mirror_row(const Vec& row);

/// Amicability test: A*B^T + B*A^T == 0 (characteristic-2 form of AB^T = BA^T).
bool check_amicable(const Mat& x, const Mat& y);

}  // namespace bhsd
