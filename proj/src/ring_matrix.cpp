#include "bhsd/ring_matrix.hpp"

namespace bhsd {

void Mat::set(int i, int j, Elem v) {
    if (v.ring != ring) throw std::invalid_argument("Mat::set: ring mismatch");
    a[size_t(i) * cols + j] = v.bits;
}

Vec Mat::row(int i) const {
    Vec v(ring, cols);
    std::copy(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols, v.e.begin());
    return v;
}

void Mat::set_row(int i, const Vec& v) {
    if (v.ring != ring || int(v.size()) != cols)
        throw std::invalid_argument("Mat::set_row: shape or ring mismatch");
    std::copy(v.e.begin(), v.e.end(), a.begin() + size_t(i) * cols);
}

Mat mat_identity(Ring r, int n) {
    Mat m(r, n, n);
    for (int i = 0; i < n; ++i) m.set_bits(i, i, 1);
    return m;
}

Mat mat_add(const Mat& x, const Mat& y) {
    if (x.ring != y.ring || x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("mat_add: shape or ring mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] ^= y.a[i];
    return r;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.ring != y.ring) throw std::invalid_argument("mat_mul: ring mismatch");
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: inner dimensions differ");
    Mat r(x.ring, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int l = 0; l < x.cols; ++l) {
            const Elem xi = x.at(i, l);
            if (xi.bits == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                r.a[size_t(i) * r.cols + j] ^= ring_mul(xi, y.at(l, j)).bits;
        }
    return r;
}

Mat mat_transpose(const Mat& m) {
    Mat r(m.ring, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.set_bits(j, i, m.bits(i, j));
    return r;
}

bool is_identity(const Mat& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.bits(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool is_zero(const Mat& m) {
    for (uint8_t b : m.a)
        if (b) return false;
    return true;
}

bool is_symmetric(const Mat& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (m.bits(i, j) != m.bits(j, i)) return false;
    return true;
}

Mat mat_hcat(const Mat& x, const Mat& y) {
    if (x.ring != y.ring || x.rows != y.rows)
        throw std::invalid_argument("mat_hcat: shape or ring mismatch");
    Mat r(x.ring, x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r.set_bits(i, j, x.bits(i, j));
        for (int j = 0; j < y.cols; ++j) r.set_bits(i, x.cols + j, y.bits(i, j));
    }
    return r;
}

Vec lambda_shift(Elem lambda, const Vec& row) {
    const size_t n = row.size();
    Vec out(row.ring, n);
    if (n == 0) return out;
    out.e[0] = ring_mul(lambda, row.at(n - 1)).bits;
    for (size_t i = 1; i < n; ++i) out.e[i] = row.e[i - 1];
    return out;
}

bool is_mirror_row(const Vec& row) {
    const size_t n = row.size();
    for (size_t i = 1; i < n; ++i)
        if (row.e[i] != row.e[n - i]) return false;
    return true;
}

Mat build_circulant(const CirculantSpec& spec) {
    if (spec.lambda.ring != spec.ring || spec.first_row.ring != spec.ring)
        throw std::invalid_argument("build_circulant: ring mismatch in spec");
    if (!is_self_inverse_unit(spec.lambda))
        throw std::invalid_argument("build_circulant: lambda is not a unit with lambda^2 = 1");
    if (spec.symmetric) {
        if (spec.lambda.bits != 1)
            throw std::invalid_argument("build_circulant: symmetric block requires lambda = 1");
        if (!is_mirror_row(spec.first_row))
            throw std::invalid_argument("build_circulant: first row is not mirror-symmetric");
    }
    const int n = int(spec.first_row.size());
    Mat m(spec.ring, n, n);
    Vec r = spec.first_row;
    for (int i = 0; i < n; ++i) {
        m.set_row(i, r);
        if (i + 1 < n) r = lambda_shift(spec.lambda, r);
    }
    return m;
}

Vec expand_symmetric_half(const Vec& half, int n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("expand_symmetric_half: n must be odd and positive");
    if (int(half.size()) != (n + 1) / 2)
        throw std::invalid_argument("expand_symmetric_half: half row must have (n+1)/2 entries");
    Vec full(half.ring, size_t(n));
    for (int i = 0; i < (n + 1) / 2; ++i) full.e[i] = half.e[i];
    for (int i = (n + 1) / 2; i < n; ++i) full.e[i] = full.e[n - i];
    return full;
}

bool check_amicable(const Mat& x, const Mat& y) {
    if (x.rows != x.cols || y.rows != y.cols || x.rows != y.rows || x.ring != y.ring)
        throw std::invalid_argument("check_amicable: expects square matrices of equal size");
    return is_zero(mat_add(mat_mul(x, mat_transpose(y)), mat_mul(y, mat_transpose(x))));
}

}  // namespace bhsd
