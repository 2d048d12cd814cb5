#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bhsd {

/// The three alphabets the constructions run over. F2U is F2+uF2 (u^2 = 0),
/// F4U is F4+uF4 = F2[w,u]/<u^2, w^2+w+1>, a commutative ring of size 16.
/// Each ring embeds in the next by zero-extending coefficients.
enum class Ring : uint8_t { F2, F2U, F4U };

const char* ring_name(Ring r);
Ring ring_from_name(std::string_view name);

/// Number of elements.
inline int ring_size(Ring r) {
    switch (r) {
        case Ring::F2: return 2;
        case Ring::F2U: return 4;
        default: return 16;
    }
}

/// Bitmask of coefficients an element of `r` may use.
inline uint8_t ring_mask(Ring r) {
    switch (r) {
        case Ring::F2: return 0x1;
        case Ring::F2U: return 0x3;
        default: return 0xF;
    }
}

/// An element x + y*w + z*u + t*u*w with GF(2) coefficients packed so that
/// the nibble equals the paper's hexadecimal codec over the ordered basis
/// {uw, w, u, 1}: bit0 = x (1), bit1 = z (u), bit2 = y (w), bit3 = t (uw).
/// Hex I/O is therefore a plain nibble copy.
struct Elem {
    uint8_t bits = 0;
    Ring ring = Ring::F2;

    friend bool operator==(const Elem&, const Elem&) = default;
};

inline Elem ring_zero(Ring r) { return {0, r}; }
inline Elem ring_one(Ring r) { return {1, r}; }

/// Coefficient-wise GF(2) sum. Requires matching rings.
Elem ring_add(Elem a, Elem b);

/// Product in the quotient ring (u^2 = 0, w^2 = w + 1). Requires matching rings.
Elem ring_mul(Elem a, Elem b);

/// Characteristic 2: negation is the identity. Kept explicit so the block
/// constructions can spell out the signs of the array they implement.
inline Elem ring_neg(Elem a) { return a; }

/// True iff e * e equals the multiplicative identity (the lambda condition).
bool is_self_inverse_unit(Elem e);

/// Hexadecimal codec for F4U elements: digit bits b3 b2 b1 b0 map to
/// coefficients of uw, w, u, 1 respectively.
Elem hex_decode(char digit, Ring ring = Ring::F4U);
char hex_encode(Elem e);

/// A vector with all entries in one ring.
struct Vec {
    Ring ring = Ring::F2;
    std::vector<uint8_t> e;  // packed element bits

    Vec() = default;
    Vec(Ring r, size_t n) : ring(r), e(n, 0) {}

    size_t size() const { return e.size(); }
    Elem at(size_t i) const { return {e[i], ring}; }
    void set(size_t i, Elem v);

    friend bool operator==(const Vec&, const Vec&) = default;
};

Vec vec_add(const Vec& a, const Vec& b);
Vec scalar_mul(Elem s, const Vec& v);

/// Standard (Euclidean) inner product over the ring.
Elem dot(const Vec& a, const Vec& b);

/// Zero-extend a vector into a larger ring of the tower F2 < F2U < F4U.
Vec embed(const Vec& v, Ring target);

/// Text codecs: F4U uses hex digits, F2U uses {0,1,u,3} (3 = 1+u),
/// F2 uses {0,1}.
Vec vec_from_string(Ring r, std::string_view s);
std::string vec_to_string(const Vec& v);

/// Gray map for F4U vectors: writing each entry as a*w + b*wbar with
/// a, b in F2+uF2, the image is the concatenation (a-vector || b-vector).
/// Doubles the length and preserves orthogonality.
Vec gray_f4u_to_f2u(const Vec& v);

/// Gray map phi_1 for F2U vectors: entry-wise a + u*b, image (B || A+B).
/// Doubles the length, preserves orthogonality, Lee weight -> Hamming weight.
Vec gray_f2u_to_f2(const Vec& v);

/// Composition down to F2: identity on F2, phi_1 on F2U, phi_1 after the
/// F4U map on F4U (length x4).
Vec gray_to_binary(const Vec& v);

}  // namespace bhsd
