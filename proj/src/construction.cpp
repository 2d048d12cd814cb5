#include "bhsd/construction.hpp"

#include <stdexcept>

namespace bhsd {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Theorem31: return "theorem31";
        case Variant::Amicable: return "amicable";
        default: return "symmetric";
    }
}

Variant variant_from_name(std::string_view name) {
    if (name == "theorem31") return Variant::Theorem31;
    if (name == "amicable") return Variant::Amicable;
    if (name == "symmetric") return Variant::Symmetric;
    throw std::invalid_argument("unknown construction variant: " + std::string(name));
}

ExpandedRows expand_recipe_rows(const Recipe& recipe) {
    ExpandedRows out;
    if (recipe.variant == Variant::Symmetric) {
        out.n = int(recipe.r_c.size());
        auto expand = [&](const Vec& r) {
            if (int(r.size()) == out.n) return r;
            if (out.n % 2 == 1 && int(r.size()) == (out.n + 1) / 2)
                return expand_symmetric_half(r, out.n);
            throw std::invalid_argument("symmetric recipe: r_a/r_b must be full or half rows");
        };
        out.a = expand(recipe.r_a);
        out.b = expand(recipe.r_b);
    } else {
        out.n = int(recipe.r_a.size());
        out.a = recipe.r_a;
        out.b = recipe.r_b;
    }
    out.c = recipe.r_c;
    out.d = recipe.r_d;
    if (int(out.a.size()) != out.n || int(out.b.size()) != out.n ||
        int(out.c.size()) != out.n || int(out.d.size()) != out.n)
        throw std::invalid_argument("recipe rows have inconsistent lengths");
    if (out.a.ring != recipe.ring || out.b.ring != recipe.ring || out.c.ring != recipe.ring ||
        out.d.ring != recipe.ring)
        throw std::invalid_argument("recipe rows not all over the recipe ring");
    return out;
}

Blocks build_blocks(const Recipe& recipe) {
    const ExpandedRows rows = expand_recipe_rows(recipe);
    const Elem one = ring_one(recipe.ring);
    if (recipe.variant == Variant::Symmetric) {
        return {build_circulant({recipe.ring, one, rows.a, true}),
                build_circulant({recipe.ring, one, rows.b, true}),
                build_circulant(recipe.lambda, rows.c), build_circulant(recipe.lambda, rows.d)};
    }
    return {build_circulant(recipe.lambda, rows.a), build_circulant(recipe.lambda, rows.b),
            build_circulant(recipe.lambda, rows.c), build_circulant(recipe.lambda, rows.d)};
}

std::string ConditionReport::summary() const {
    if (ok()) return "all conditions satisfied";
    std::string s = "failed:";
    for (const auto& f : failed) s += " " + f;
    return s;
}

ConditionReport check_conditions(const Recipe& recipe) {
    ConditionReport rep;
    rep.shape_ok = true;
    if (!is_self_inverse_unit(recipe.lambda)) {
        rep.shape_ok = false;
        rep.failed.push_back("lambda");
        return rep;
    }
    Blocks blk;
    try {
        blk = build_blocks(recipe);
    } catch (const std::invalid_argument&) {
        rep.shape_ok = false;
        rep.failed.push_back("symmetry");
        return rep;
    }
    if (recipe.variant == Variant::Symmetric && (!is_symmetric(blk.a) || !is_symmetric(blk.b))) {
        rep.shape_ok = false;
        rep.failed.push_back("symmetry");
        return rep;
    }

    const Mat at = mat_transpose(blk.a), bt = mat_transpose(blk.b), ct = mat_transpose(blk.c),
              dt = mat_transpose(blk.d);
    const Mat aat = mat_mul(blk.a, at), bbt = mat_mul(blk.b, bt), cct = mat_mul(blk.c, ct),
              ddt = mat_mul(blk.d, dt);
    Mat gram = mat_add(mat_add(aat, bbt), mat_add(cct, ddt));
    rep.gram_ok = is_identity(gram);
    if (!rep.gram_ok) {
        rep.failed.push_back("gram");
        rep.gram_residual = mat_add(gram, mat_identity(recipe.ring, gram.rows));
    }

    const Mat ab = mat_add(mat_mul(blk.a, bt), mat_mul(blk.b, at));  // AB^T - BA^T, char 2
    const Mat cd = mat_add(mat_mul(blk.c, dt), mat_mul(blk.d, ct));
    switch (recipe.variant) {
        case Variant::Theorem31:
            rep.skew_ok = is_zero(mat_add(ab, cd));
            if (!rep.skew_ok) rep.failed.push_back("pair_sum");
            break;
        case Variant::Amicable: {
            const bool ab_ok = is_zero(ab), cd_ok = is_zero(cd);
            rep.skew_ok = ab_ok && cd_ok;
            if (!ab_ok) rep.failed.push_back("pair_ab");
            if (!cd_ok) rep.failed.push_back("pair_cd");
            break;
        }
        case Variant::Symmetric:
            rep.skew_ok = is_zero(cd);
            if (!rep.skew_ok) rep.failed.push_back("pair_cd");
            break;
    }
    return rep;
}

Mat build_baumert_hall(const Recipe& recipe) {
    const ConditionReport rep = check_conditions(recipe);
    if (!rep.ok())
        throw std::invalid_argument("build_baumert_hall: " + rep.summary());

    const Blocks blk = build_blocks(recipe);
    const int n = blk.a.rows;
    const Mat at = mat_transpose(blk.a), bt = mat_transpose(blk.b), ct = mat_transpose(blk.c),
              dt = mat_transpose(blk.d);
    auto neg = [](const Mat& m) {
        Mat r = m;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = ring_neg(Elem{r.a[i], r.ring}).bits;
        return r;
    };

    const Mat* cells[4][4] = {
        {&blk.a, &blk.b, &blk.c, &blk.d},
        {nullptr, &blk.a, nullptr, &blk.c},
        {nullptr, &dt, &at, nullptr},
        {nullptr, nullptr, &bt, &at},
    };
    const Mat nb = neg(blk.b), nd = neg(blk.d), nct = neg(ct), ndt = neg(dt), nbt = neg(bt);
    cells[1][0] = &nb;
    cells[1][2] = &nd;
    cells[2][0] = &nct;
    cells[2][3] = &nbt;
    cells[3][0] = &ndt;
    cells[3][1] = &nct;

    Mat big(recipe.ring, 4 * n, 4 * n);
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    big.set_bits(bi * n + i, bj * n + j, cells[bi][bj]->bits(i, j));

    Mat g = mat_hcat(mat_identity(recipe.ring, 4 * n), big);
    if (!ring_self_orthogonal(g))
        throw std::logic_error("build_baumert_hall: generator failed the self-duality check");
    return g;
}

Mat gray_matrix_f4u_to_f2u(const Mat& generator) {
    if (generator.ring != Ring::F4U)
        throw std::invalid_argument("gray_matrix_f4u_to_f2u: expects an F4U generator");
    const Elem w{0x4, Ring::F4U};
    Mat out(Ring::F2U, 2 * generator.rows, 2 * generator.cols);
    for (int i = 0; i < generator.rows; ++i) {
        const Vec r = generator.row(i);
        out.set_row(2 * i, gray_f4u_to_f2u(r));
        out.set_row(2 * i + 1, gray_f4u_to_f2u(scalar_mul(w, r)));
    }
    return out;
}

bool ring_self_orthogonal(const Mat& generator) {
    for (int i = 0; i < generator.rows; ++i) {
        const Vec ri = generator.row(i);
        for (int j = i; j < generator.rows; ++j)
            if (dot(ri, generator.row(j)).bits != 0) return false;
    }
    return true;
}

namespace {

bool is_unit_bits(uint8_t b) { return (b & 0x5) != 0; }  // nonzero image mod <u>

uint8_t inverse_bits(uint8_t b, Ring ring) {
    for (int c = 0; c < ring_size(ring); ++c)
        if (ring_mul(Elem{uint8_t(c), ring}, Elem{b, ring}).bits == 1) return uint8_t(c);
    throw std::invalid_argument("inverse_bits: not a unit");
}

}  // namespace

int ring_free_rank(const Mat& generator) {
    Mat m = generator;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (is_unit_bits(m.bits(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) {
            const uint8_t t = m.bits(r, j);
            m.set_bits(r, j, m.bits(piv, j));
            m.set_bits(piv, j, t);
        }
        const Elem inv{inverse_bits(m.bits(r, col), m.ring), m.ring};
        for (int j = 0; j < m.cols; ++j) m.set_bits(r, j, ring_mul(inv, m.at(r, j)).bits);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const Elem f = m.at(i, col);
            if (f.bits == 0) continue;
            for (int j = 0; j < m.cols; ++j)
                m.set_bits(i, j, ring_add(m.at(i, j), ring_mul(f, m.at(r, j))).bits);
        }
        ++r;
    }
    return r;
}

RingStandardForm ring_standard_form(const Mat& generator) {
    RingStandardForm sf;
    sf.generator = generator;
    Mat& m = sf.generator;
    const int k = m.rows;
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int i = col; i < k; ++i)
            if (is_unit_bits(m.bits(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) {
            int fix = -1;
            for (int j = k; j < m.cols && fix < 0; ++j)
                for (int i = col; i < k; ++i)
                    if (is_unit_bits(m.bits(i, j))) {
                        fix = j;
                        break;
                    }
            if (fix < 0)
                throw std::invalid_argument("ring_standard_form: no unit pivot available");
            for (int i = 0; i < k; ++i) {
                const uint8_t t = m.bits(i, col);
                m.set_bits(i, col, m.bits(i, fix));
                m.set_bits(i, fix, t);
            }
            sf.column_swaps.emplace_back(col, fix);
            for (int i = col; i < k; ++i)
                if (is_unit_bits(m.bits(i, col))) {
                    piv = i;
                    break;
                }
        }
        if (piv != col)
            for (int j = 0; j < m.cols; ++j) {
                const uint8_t t = m.bits(col, j);
                m.set_bits(col, j, m.bits(piv, j));
                m.set_bits(piv, j, t);
            }
        const Elem inv{inverse_bits(m.bits(col, col), m.ring), m.ring};
        for (int j = 0; j < m.cols; ++j) m.set_bits(col, j, ring_mul(inv, m.at(col, j)).bits);
        for (int i = 0; i < k; ++i) {
            if (i == col) continue;
            const Elem f = m.at(i, col);
            if (f.bits == 0) continue;
            for (int j = 0; j < m.cols; ++j)
                m.set_bits(i, j, ring_add(m.at(i, j), ring_mul(f, m.at(col, j))).bits);
        }
    }
    return sf;
}

Mat extend_code(const Mat& generator, Elem c, const Vec& X) {
    const Ring ring = generator.ring;
    if (ring == Ring::F4U)
        throw std::invalid_argument("extend_code: extensions are supported over F2 and F2U only");
    if (c.ring != ring || X.ring != ring)
        throw std::invalid_argument("extend_code: ring mismatch");
    if (int(X.size()) != generator.cols)
        throw std::invalid_argument("extend_code: X length must match the code length");
    if (!is_self_inverse_unit(c))
        throw std::invalid_argument("extend_code: c must be a unit with c^2 = 1");
    if (dot(X, X).bits != 1) throw std::invalid_argument("extend_code: <X,X> must equal 1");
    if (generator.cols != 2 * generator.rows || !ring_self_orthogonal(generator) ||
        ring_free_rank(generator) != generator.rows)
        throw std::invalid_argument("extend_code: base generator is not self-dual");

    const int k = generator.rows, n = generator.cols;
    Mat out(ring, k + 1, n + 2);
    out.set_bits(0, 0, 1);
    for (int j = 0; j < n; ++j) out.set_bits(0, 2 + j, X.e[j]);
    for (int i = 0; i < k; ++i) {
        const Vec r = generator.row(i);
        const Elem y = dot(r, X);
        out.set_bits(i + 1, 0, y.bits);
        out.set_bits(i + 1, 1, ring_mul(c, y).bits);
        for (int j = 0; j < n; ++j) out.set_bits(i + 1, 2 + j, r.e[j]);
    }
    if (!ring_self_orthogonal(out))
        throw std::logic_error("extend_code: extension failed the self-duality check");
    return out;
}

NeighborResult neighbor(const BinaryCode& self_dual, const std::vector<uint64_t>& x) {
    const int k = self_dual.dimension(), n = self_dual.length(), w = self_dual.words();
    if (n != 2 * k || !self_dual.is_self_dual())
        throw std::invalid_argument("neighbor: base code must be binary self-dual");
    if (int(x.size()) != w) throw std::invalid_argument("neighbor: x has the wrong length");
    if (popcount_words(x.data(), w) % 2 != 0)
        throw std::invalid_argument("neighbor: x must have even weight");

    // <row_i, x> for each generator row; all zero means x lies in C-perp = C.
    std::vector<int> s(k);
    int pivot = -1;
    for (int i = 0; i < k; ++i) {
        uint64_t acc = 0;
        for (int j = 0; j < w; ++j) acc ^= self_dual.row(i)[j] & x[j];
        s[i] = popcount_words(&acc, 1) & 1;
        if (s[i] && pivot < 0) pivot = i;
    }
    if (pivot < 0) return {self_dual, true};

    BinaryCode d(n, k);
    int out = 0;
    for (int i = 0; i < k; ++i) {
        if (i == pivot) continue;
        for (int j = 0; j < w; ++j)
            d.row(out)[j] = self_dual.row(i)[j] ^ (s[i] ? self_dual.row(pivot)[j] : 0);
        ++out;
    }
    for (int j = 0; j < w; ++j) d.row(out)[j] = x[j];
    if (!d.is_self_dual()) throw std::logic_error("neighbor: result failed the self-duality check");
    return {d, false};
}

}  // namespace bhsd
