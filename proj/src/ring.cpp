#include "bhsd/ring.hpp"

namespace bhsd {

namespace {

void require_same_ring(Elem a, Elem b, const char* op) {
    if (a.ring != b.ring)
        throw std::invalid_argument(std::string(op) + ": ring mismatch (" +
                                    ring_name(a.ring) + " vs " + ring_name(b.ring) + ")");
}

// Product of two packed elements. Basis products, characteristic 2:
//   w*w = 1 + w,  w*u = uw,  w*uw = u + uw,  u*u = u*uw = uw*uw = 0.
constexpr uint8_t mul_bits(uint8_t p, uint8_t q) {
    const uint8_t x = p & 1, z = (p >> 1) & 1, y = (p >> 2) & 1, t = (p >> 3) & 1;
    const uint8_t x2 = q & 1, z2 = (q >> 1) & 1, y2 = (q >> 2) & 1, t2 = (q >> 3) & 1;
    const uint8_t rx = (x & x2) ^ (y & y2);
    const uint8_t ry = (x & y2) ^ (y & x2) ^ (y & y2);
    const uint8_t rz = (x & z2) ^ (z & x2) ^ (y & t2) ^ (t & y2);
    const uint8_t rt = static_cast<uint8_t>((x & t2) ^ (t & x2) ^ (y & z2) ^ (z & y2) ^
                                            (y & t2) ^ (t & y2));
    return static_cast<uint8_t>(rx | (rz << 1) | (ry << 2) | (rt << 3));
}

}  // namespace

const char* ring_name(Ring r) {
    switch (r) {
        case Ring::F2: return "F2";
        case Ring::F2U: return "F2U";
        default: return "F4U";
    }
}

Ring ring_from_name(std::string_view name) {
    if (name == "F2") return Ring::F2;
    if (name == "F2U" || name == "F2u") return Ring::F2U;
    if (name == "F4U" || name == "F4u") return Ring::F4U;
    throw std::invalid_argument("unknown ring name: " + std::string(name));
}

Elem ring_add(Elem a, Elem b) {
    require_same_ring(a, b, "ring_add");
    return {static_cast<uint8_t>(a.bits ^ b.bits), a.ring};
}

Elem ring_mul(Elem a, Elem b) {
    require_same_ring(a, b, "ring_mul");
    return {mul_bits(a.bits, b.bits), a.ring};
}

bool is_self_inverse_unit(Elem e) { return mul_bits(e.bits, e.bits) == 1; }

Elem hex_decode(char digit, Ring ring) {
    uint8_t v;
    if (digit >= '0' && digit <= '9')
        v = static_cast<uint8_t>(digit - '0');
    else if (digit >= 'A' && digit <= 'F')
        v = static_cast<uint8_t>(digit - 'A' + 10);
    else if (digit >= 'a' && digit <= 'f')
        v = static_cast<uint8_t>(digit - 'a' + 10);
    else
        throw std::invalid_argument(std::string("hex_decode: not a hex digit: '") + digit + "'");
    if (v & ~ring_mask(ring))
        throw std::invalid_argument(std::string("hex_decode: digit '") + digit +
                                    "' is not an element of " + ring_name(ring));
    return {v, ring};
}

char hex_encode(Elem e) {
    return e.bits < 10 ? static_cast<char>('0' + e.bits) : static_cast<char>('A' + e.bits - 10);
}

void Vec::set(size_t i, Elem v) {
    if (v.ring != ring) throw std::invalid_argument("Vec::set: ring mismatch");
    e[i] = v.bits;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.ring != b.ring || a.size() != b.size())
        throw std::invalid_argument("vec_add: shape or ring mismatch");
    Vec r(a.ring, a.size());
    for (size_t i = 0; i < a.size(); ++i) r.e[i] = a.e[i] ^ b.e[i];
    return r;
}

Vec scalar_mul(Elem s, const Vec& v) {
    if (s.ring != v.ring) throw std::invalid_argument("scalar_mul: ring mismatch");
    Vec r(v.ring, v.size());
    for (size_t i = 0; i < v.size(); ++i) r.e[i] = mul_bits(s.bits, v.e[i]);
    return r;
}

Elem dot(const Vec& a, const Vec& b) {
    if (a.ring != b.ring || a.size() != b.size())
        throw std::invalid_argument("dot: shape or ring mismatch");
    uint8_t acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc ^= mul_bits(a.e[i], b.e[i]);
    return {acc, a.ring};
}

Vec embed(const Vec& v, Ring target) {
    if (ring_mask(target) < ring_mask(v.ring))
        throw std::invalid_argument("embed: target ring is smaller than source");
    Vec r = v;
    r.ring = target;
    return r;
}

Vec vec_from_string(Ring r, std::string_view s) {
    Vec v(r, s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (r == Ring::F2U) {
            // Table alphabet {0, 1, u, 3}; 3 = 1+u.
            if (c == 'u' || c == 'U') {
                v.e[i] = 0x2;
                continue;
            }
        }
        v.e[i] = hex_decode(c, r).bits;
    }
    return v;
}

std::string vec_to_string(const Vec& v) {
    std::string s(v.size(), '0');
    for (size_t i = 0; i < v.size(); ++i) {
        if (v.ring == Ring::F2U && v.e[i] == 0x2)
            s[i] = 'u';
        else
            s[i] = hex_encode(v.at(i));
    }
    return s;
}

Vec gray_f4u_to_f2u(const Vec& v) {
    if (v.ring != Ring::F4U) throw std::invalid_argument("gray_f4u_to_f2u: expects an F4U vector");
    const size_t n = v.size();
    Vec out(Ring::F2U, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        const uint8_t x = v.e[i] & 1, z = (v.e[i] >> 1) & 1, y = (v.e[i] >> 2) & 1,
                      t = (v.e[i] >> 3) & 1;
        // e = b + (a+b)w  with  b = x + z*u,  a = (x+y) + (z+t)*u.
        out.e[i] = static_cast<uint8_t>((x ^ y) | ((z ^ t) << 1));  // a
        out.e[n + i] = static_cast<uint8_t>(x | (z << 1));          // b
    }
    return out;
}

Vec gray_f2u_to_f2(const Vec& v) {
    if (v.ring != Ring::F2U) throw std::invalid_argument("gray_f2u_to_f2: expects an F2U vector");
    const size_t n = v.size();
    Vec out(Ring::F2, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        const uint8_t a = v.e[i] & 1, b = (v.e[i] >> 1) & 1;
        out.e[i] = b;
        out.e[n + i] = a ^ b;
    }
    return out;
}

Vec gray_to_binary(const Vec& v) {
    switch (v.ring) {
        case Ring::F2: return v;
        case Ring::F2U: return gray_f2u_to_f2(v);
        default: return gray_f2u_to_f2(gray_f4u_to_f2u(v));
    }
}

}  // namespace bhsd
