#include <doctest.h>

#include <random>

#include "bhsd/ring.hpp"

using namespace bhsd;

namespace {

Elem f4u(uint8_t bits) { return {bits, Ring::F4U}; }
Elem f2u(uint8_t bits) { return {bits, Ring::F2U}; }

constexpr uint8_t kOne = 0x1, kU = 0x2, kW = 0x4, kUW = 0x8;

Vec random_vec(Ring ring, size_t n, std::mt19937_64& rng) {
    Vec v(ring, n);
    std::uniform_int_distribution<int> d(0, ring_size(ring) - 1);
    for (auto& e : v.e) e = uint8_t(d(rng));
    return v;
}

}  // namespace

TEST_CASE("addition in characteristic 2") {
    CHECK(ring_add(f4u(kU), f4u(kU)) == f4u(0));                    // u + u = 0
    CHECK(ring_add(f4u(kOne), f4u(kU)) == f4u(0x3));                // 1 + u = hex 3
    CHECK(ring_add(f4u(kW), f4u(kW | kOne)) == f4u(kOne));          // w + (w+1) = 1
    CHECK(ring_neg(f4u(0xB)) == f4u(0xB));                          // negation is identity
    CHECK_THROWS_AS(ring_add(f4u(1), f2u(1)), std::invalid_argument);
}

TEST_CASE("multiplication in the quotient ring") {
    CHECK(ring_mul(f4u(kU), f4u(kU)) == f4u(0));            // u^2 = 0
    CHECK(ring_mul(f4u(kW), f4u(kW)) == f4u(kW | kOne));    // w^2 = w + 1
    CHECK(ring_mul(f4u(0x3), f4u(0x3)) == f4u(kOne));       // (1+u)^2 = 1
    CHECK(ring_mul(f4u(kW), f4u(kUW)) == f4u(kU | kUW));    // w * uw = u + uw
    CHECK_THROWS_AS(ring_mul(f4u(1), f2u(1)), std::invalid_argument);
}

TEST_CASE("multiplication is commutative, associative, distributive (exhaustive)") {
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            CHECK(ring_mul(f4u(a), f4u(b)) == ring_mul(f4u(b), f4u(a)));
            for (int c = 0; c < 16; ++c) {
                CHECK(ring_mul(ring_mul(f4u(a), f4u(b)), f4u(c)) ==
                      ring_mul(f4u(a), ring_mul(f4u(b), f4u(c))));
                CHECK(ring_mul(f4u(a), ring_add(f4u(b), f4u(c))) ==
                      ring_add(ring_mul(f4u(a), f4u(b)), ring_mul(f4u(a), f4u(c))));
            }
        }
}

TEST_CASE("self-inverse units") {
    CHECK(is_self_inverse_unit(f4u(0x3)));  // 1+u
    CHECK(is_self_inverse_unit(f4u(0x9)));  // 1+uw
    CHECK_FALSE(is_self_inverse_unit(f4u(kU)));

    // Exhaustive: exactly the four elements 1, 1+u, 1+uw, 1+u+uw square to 1
    // (x = 1, y = 0, since e^2 = (x+y) + y*w).
    std::vector<int> found;
    for (int e = 0; e < 16; ++e)
        if (is_self_inverse_unit(f4u(uint8_t(e)))) found.push_back(e);
    CHECK(found == std::vector<int>{0x1, 0x3, 0x9, 0xB});
}

TEST_CASE("hexadecimal codec") {
    CHECK(hex_decode('9') == f4u(kOne | kUW));  // 1 + uw is 1001
    CHECK(hex_decode('0') == f4u(0));
    CHECK(hex_decode('F') == f4u(kOne | kU | kW | kUW));
    CHECK_THROWS_AS(hex_decode('G'), std::invalid_argument);
    CHECK_THROWS_AS(hex_decode('7', Ring::F2U), std::invalid_argument);
    for (int v = 0; v < 16; ++v) {
        const char digit = hex_encode(f4u(uint8_t(v)));
        CHECK(hex_decode(digit) == f4u(uint8_t(v)));
    }
}

TEST_CASE("string codecs per ring") {
    const Vec x = vec_from_string(Ring::F2U, "1131113u3u");
    CHECK(x.size() == 10);
    CHECK(x.at(2) == f2u(0x3));
    CHECK(x.at(7) == f2u(kU));
    CHECK(vec_to_string(x) == "1131113u3u");

    CHECK(vec_to_string(vec_from_string(Ring::F4U, "1b7C")) == "1B7C");
    CHECK(vec_to_string(vec_from_string(Ring::F2, "0110")) == "0110");
    CHECK_THROWS_AS(vec_from_string(Ring::F2, "012"), std::invalid_argument);
}

TEST_CASE("gray map F4U -> F2U") {
    Vec zero(Ring::F4U, 1);
    CHECK(vec_to_string(gray_f4u_to_f2u(zero)) == "00");

    Vec w(Ring::F4U, 1);
    w.set(0, f4u(kW));
    CHECK(vec_to_string(gray_f4u_to_f2u(w)) == "10");  // w = 1*w + 0*wbar

    Vec nine(Ring::F4U, 1);
    nine.set(0, f4u(0x9));
    const Vec img = gray_f4u_to_f2u(nine);  // 1 + uw = (1+u)w + 1*wbar
    CHECK(img.at(0) == f2u(0x3));
    CHECK(img.at(1) == f2u(kOne));

    // Re-expand a*w + b*wbar and compare against the original entries.
    std::mt19937_64 rng(7);
    const Elem omega = f4u(kW), wbar = f4u(kW | kOne);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec v = random_vec(Ring::F4U, 6, rng);
        const Vec ab = gray_f4u_to_f2u(v);
        for (size_t i = 0; i < v.size(); ++i) {
            const Elem a{ab.e[i], Ring::F4U};
            const Elem b{ab.e[v.size() + i], Ring::F4U};
            CHECK(ring_add(ring_mul(a, omega), ring_mul(b, wbar)) == v.at(i));
        }
    }
}

TEST_CASE("gray map F2U -> F2") {
    Vec zero(Ring::F2U, 1);
    CHECK(vec_to_string(gray_f2u_to_f2(zero)) == "00");
    Vec three(Ring::F2U, 1);
    three.set(0, f2u(0x3));
    CHECK(vec_to_string(gray_f2u_to_f2(three)) == "10");  // a=1, b=1 -> (b, a+b)
    Vec u(Ring::F2U, 1);
    u.set(0, f2u(kU));
    CHECK(vec_to_string(gray_f2u_to_f2(u)) == "11");
}

TEST_CASE("gray composition to binary") {
    const Vec f2v = vec_from_string(Ring::F2, "101");
    CHECK(gray_to_binary(f2v) == f2v);

    // hex 9 maps through (1+u, 1): A = (1,1), B = (1,0), image (B || A+B).
    Vec nine(Ring::F4U, 1);
    nine.set(0, f4u(0x9));
    CHECK(vec_to_string(gray_to_binary(nine)) == "1001");

    Vec zero(Ring::F4U, 5);
    CHECK(vec_to_string(gray_to_binary(zero)) == std::string(20, '0'));
}

TEST_CASE("gray maps are GF(2)-linear") {
    std::mt19937_64 rng(42);
    for (Ring ring : {Ring::F2U, Ring::F4U}) {
        for (int trial = 0; trial < 10000; ++trial) {
            const Vec v = random_vec(ring, 8, rng), w = random_vec(ring, 8, rng);
            CHECK(gray_to_binary(vec_add(v, w)) ==
                  vec_add(gray_to_binary(v), gray_to_binary(w)));
        }
    }
}

TEST_CASE("gray maps preserve orthogonality") {
    std::mt19937_64 rng(43);
    for (Ring ring : {Ring::F2U, Ring::F4U}) {
        int done = 0;
        while (done < 10000) {
            const Vec v = random_vec(ring, 8, rng), w = random_vec(ring, 8, rng);
            if (dot(v, w).bits != 0) continue;
            ++done;
            const Vec bv = gray_to_binary(v), bw = gray_to_binary(w);
            CHECK(dot(bv, bw).bits == 0);
        }
    }
}

TEST_CASE("ring embeddings zero-extend") {
    const Vec v = vec_from_string(Ring::F2, "101");
    const Vec e = embed(v, Ring::F4U);
    CHECK(e.ring == Ring::F4U);
    CHECK(vec_to_string(e) == "101");
    CHECK_THROWS_AS(embed(vec_from_string(Ring::F4U, "9"), Ring::F2U), std::invalid_argument);
}
