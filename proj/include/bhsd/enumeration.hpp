#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace bhsd {

/// Walks the XOR-accumulations of every nonempty subset of at most t rows,
/// depth first, so each step costs one row XOR. `rows` holds k rows of
/// `W` words each, contiguously. The visitor receives the accumulated word
/// block and the subset size; returning false aborts the walk.
/// Returns false iff the visitor aborted.
namespace detail {

template <int W, class V>
bool combo_rec(const uint64_t* rows, int k, int t, int start, int depth,
               std::array<uint64_t, W> acc, V& visit) {
    for (int i = start; i < k; ++i) {
        std::array<uint64_t, W> nxt = acc;
        const uint64_t* r = rows + size_t(i) * W;
        for (int w = 0; w < W; ++w) nxt[w] ^= r[w];
        if (!visit(nxt.data(), depth + 1)) return false;
        if (depth + 1 < t && !combo_rec<W, V>(rows, k, t, i + 1, depth + 1, nxt, visit))
            return false;
    }
    return true;
}

}  // namespace detail

template <int W, class V>
bool for_each_combination(const uint64_t* rows, int k, int t, V&& visit) {
    if (t <= 0) return true;
    std::array<uint64_t, W> zero{};
    return detail::combo_rec<W, V>(rows, k, t, 0, 0, zero, visit);
}

/// Runtime word-count dispatch (codes up to 256 bits; all shipped lengths
/// use one or two words).
template <class V>
bool for_each_combination_dyn(const uint64_t* rows, int k, int words, int t, V&& visit) {
    switch (words) {
        case 1: return for_each_combination<1>(rows, k, t, visit);
        case 2: return for_each_combination<2>(rows, k, t, visit);
        case 3: return for_each_combination<3>(rows, k, t, visit);
        case 4: return for_each_combination<4>(rows, k, t, visit);
        default: throw std::invalid_argument("for_each_combination: code longer than 256 bits");
    }
}

/// Sum_{r=1..t} C(k, r), saturating; the enumeration budget of one pass.
uint64_t combination_count(int k, int t);

}  // namespace bhsd
