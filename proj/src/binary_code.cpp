#include "bhsd/binary_code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bhsd {

int popcount_words(const uint64_t* w, int nwords) {
    int c = 0;
    for (int i = 0; i < nwords; ++i) c += std::popcount(w[i]);
    return c;
}

BinaryCode::BinaryCode(int length, int dimension)
    : n_(length), k_(dimension), w_((length + 63) / 64), data_(size_t(dimension) * w_, 0) {
    if (length <= 0 || dimension <= 0 || dimension > length)
        throw std::invalid_argument("BinaryCode: bad dimensions");
}

void BinaryCode::set(int i, int j, bool v) {
    uint64_t& word = row(i)[j >> 6];
    const uint64_t mask = uint64_t(1) << (j & 63);
    word = v ? (word | mask) : (word & ~mask);
}

BinaryCode BinaryCode::from_string_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_string_rows: no rows");
    BinaryCode c(int(rows[0].size()), int(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("from_string_rows: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] == '1')
                c.set(int(i), int(j), true);
            else if (rows[i][j] != '0')
                throw std::invalid_argument("from_string_rows: not a binary string");
    }
    return c;
}

std::string BinaryCode::row_string(int i) const {
    std::string s(n_, '0');
    for (int j = 0; j < n_; ++j)
        if (get(i, j)) s[j] = '1';
    return s;
}

int BinaryCode::row_weight(int i) const { return popcount_words(row(i), w_); }

namespace {

bool rows_orthogonal(const uint64_t* a, const uint64_t* b, int w) {
    uint64_t acc = 0;
    for (int i = 0; i < w; ++i) acc ^= a[i] & b[i];
    return std::popcount(acc) % 2 == 0;
}

}  // namespace

bool BinaryCode::is_self_orthogonal() const {
    for (int i = 0; i < k_; ++i)
        for (int j = i; j < k_; ++j)
            if (!rows_orthogonal(row(i), row(j), w_)) return false;
    return true;
}

bool BinaryCode::is_self_dual() const { return n_ == 2 * k_ && is_self_orthogonal(); }

bool BinaryCode::is_type_ii() const {
    if (!is_self_orthogonal()) return false;
    for (int i = 0; i < k_; ++i)
        if (row_weight(i) % 4 != 0) return false;
    return true;
}

bool BinaryCode::contains(const uint64_t* x) const {
    // Reduce a copy of x against the rows (they are kept in reduced form with
    // distinct leading bits after reduce_rows/standard_form; for safety this
    // performs a full elimination against an echelonized copy).
    std::vector<std::vector<uint64_t>> rows;
    rows.reserve(k_ + 1);
    for (int i = 0; i < k_; ++i) rows.emplace_back(row(i), row(i) + w_);
    std::vector<uint64_t> v(x, x + w_);

    std::vector<int> lead(k_, -1);
    // echelonize
    int r = 0;
    for (int col = 0; col < n_ && r < k_; ++col) {
        int piv = -1;
        for (int i = r; i < k_; ++i)
            if ((rows[i][col >> 6] >> (col & 63)) & 1) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < k_; ++i)
            if (i != r && ((rows[i][col >> 6] >> (col & 63)) & 1))
                for (int w = 0; w < w_; ++w) rows[i][w] ^= rows[r][w];
        lead[r] = col;
        ++r;
    }
    for (int i = 0; i < r; ++i) {
        const int col = lead[i];
        if ((v[col >> 6] >> (col & 63)) & 1)
            for (int w = 0; w < w_; ++w) v[w] ^= rows[i][w];
    }
    for (int w = 0; w < w_; ++w)
        if (v[w]) return false;
    return true;
}

BinaryCode reduce_rows(int length, std::vector<std::vector<uint64_t>> rows) {
    const int w = (length + 63) / 64;
    int r = 0;
    for (int col = 0; col < length && r < int(rows.size()); ++col) {
        int piv = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if ((rows[i][col >> 6] >> (col & 63)) & 1) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < int(rows.size()); ++i)
            if (i != r && ((rows[i][col >> 6] >> (col & 63)) & 1))
                for (int j = 0; j < w; ++j) rows[i][j] ^= rows[r][j];
        ++r;
    }
    if (r == 0) throw std::invalid_argument("reduce_rows: zero code");
    BinaryCode c(length, r);
    for (int i = 0; i < r; ++i) std::copy(rows[i].begin(), rows[i].end(), c.row(i));
    return c;
}

namespace {

void swap_columns(BinaryCode& c, int a, int b) {
    for (int i = 0; i < c.dimension(); ++i) {
        const bool va = c.get(i, a), vb = c.get(i, b);
        c.set(i, a, vb);
        c.set(i, b, va);
    }
}

}  // namespace

StandardForm standard_form(const BinaryCode& code) {
    StandardForm sf;
    sf.code = code;
    BinaryCode& c = sf.code;
    const int k = c.dimension(), n = c.length(), w = c.words();
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int i = col; i < k; ++i)
            if (c.get(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // leading block singular at this column: bring in a later column
            int fix = -1;
            for (int j = k; j < n && fix < 0; ++j)
                for (int i = col; i < k; ++i)
                    if (c.get(i, j)) {
                        fix = j;
                        break;
                    }
            if (fix < 0) throw std::invalid_argument("standard_form: rank-deficient generator");
            swap_columns(c, col, fix);
            sf.column_swaps.emplace_back(col, fix);
            for (int i = col; i < k; ++i)
                if (c.get(i, col)) {
                    piv = i;
                    break;
                }
        }
        if (piv != col)
            for (int j = 0; j < w; ++j) std::swap(c.row(col)[j], c.row(piv)[j]);
        for (int i = 0; i < k; ++i)
            if (i != col && c.get(i, col))
                for (int j = 0; j < w; ++j) c.row(i)[j] ^= c.row(col)[j];
    }
    return sf;
}

BinaryCode second_generator(const BinaryCode& standard) {
    const int k = standard.dimension(), n = standard.length();
    if (n != 2 * k) throw std::invalid_argument("second_generator: needs a rate-1/2 code");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (standard.get(i, j) != (i == j))
                throw std::invalid_argument("second_generator: generator is not in [I|M] form");
    BinaryCode g2(n, k);
    for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) g2.set(j, i, standard.get(i, k + j));  // M^T
        g2.set(j, k + j, true);
    }
    return g2;
}

BinaryCode gray_image(const Mat& generator) {
    std::vector<uint8_t> basis;
    switch (generator.ring) {
        case Ring::F2: basis = {1}; break;
        case Ring::F2U: basis = {1, 2}; break;
        default: basis = {1, 4, 2, 8}; break;  // 1, w, u, uw
    }
    std::vector<std::vector<uint64_t>> rows;
    int length = 0;
    for (int i = 0; i < generator.rows; ++i) {
        const Vec r = generator.row(i);
        for (uint8_t s : basis) {
            const Vec image = gray_to_binary(scalar_mul(Elem{s, generator.ring}, r));
            length = int(image.size());
            std::vector<uint64_t> packed((length + 63) / 64, 0);
            for (int j = 0; j < length; ++j)
                if (image.e[j]) packed[j >> 6] |= uint64_t(1) << (j & 63);
            rows.push_back(std::move(packed));
        }
    }
    return reduce_rows(length, std::move(rows));
}

std::vector<uint64_t> pack_bit_string(const std::string& s) {
    std::vector<uint64_t> words((s.size() + 63) / 64, 0);
    for (size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1')
            words[j >> 6] |= uint64_t(1) << (j & 63);
        else if (s[j] != '0')
            throw std::invalid_argument("pack_bit_string: not a binary string");
    }
    return words;
}

std::string unpack_bit_string(const std::vector<uint64_t>& words, int nbits) {
    std::string s(nbits, '0');
    for (int j = 0; j < nbits; ++j)
        if ((words[j >> 6] >> (j & 63)) & 1) s[j] = '1';
    return s;
}

}  // namespace bhsd
