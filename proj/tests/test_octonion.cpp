#include <doctest.h>

#include <set>

#include "af/octonion.hpp"
#include "af/rng.hpp"

using namespace af;

namespace {
Octonion e(const Field& f, int ord, uint16_t c = 1) { return Octonion::basis(f, ord, c); }
}

TEST_CASE("defining relations") {
    const Field& f = field_make(2, 1);
    // e_1 e_w = e_{-wb}
    CHECK(oct_mul(e(f, 1), e(f, 2)) == e(f, 7));
    // e_0 idempotent, e_0 e_{-0} = 0
    CHECK(oct_mul(e(f, 0), e(f, 0)) == e(f, 0));
    CHECK(oct_mul(e(f, 0), e(f, 4)).is_zero());
    // suffix scaling applied twice to e_1 e_w: e_w e_wb = e_{-1}
    CHECK(oct_mul(e(f, 2), e(f, 3)) == e(f, 5));
}

TEST_CASE("anti-signs survive in odd characteristic") {
    const Field& f = field_make(5, 1);
    // e_w e_1 = -e_{-wb}
    CHECK(oct_mul(e(f, 2), e(f, 1)) == e(f, 7, 4));
    // e_{-1} e_1 = -e_0
    CHECK(oct_mul(e(f, 5), e(f, 1)) == e(f, 0, 4));
}

TEST_CASE("conjugation and trace") {
    const Field& f = field_make(3, 1);
    CHECK(oct_conj(e(f, 0)) == e(f, 4));
    CHECK(oct_conj(e(f, 1)) == e(f, 1, 2));
    Octonion one = Octonion::one(f);
    CHECK(oct_conj(one) == one);
    CHECK(oct_trace(e(f, 0)).v == 1);
    CHECK(oct_norm(e(f, 1)).v == 0);
    // B(e_1, e_{-1}) = 1
    CHECK(oct_bilinear(e(f, 1), e(f, 5)).v == 1);
}

TEST_CASE("norm as x conj(x)") {
    const Field& f = field_make(5, 1);
    SplitMix64 rng(7);
    for (int n = 0; n < 200; ++n) {
        Octonion x = random_octonion(f, rng);
        Octonion xn = oct_mul(x, oct_conj(x));
        CHECK(oct_is_scalar(xn));
        CHECK(oct_as_scalar(xn).v == oct_norm(x).v);
        CHECK(oct_mul(oct_conj(x), x) == xn);
    }
}

TEST_CASE("prime and star over GF(4)") {
    const Field& f4 = field_make(2, 2);
    Octonion te1 = e(f4, 1, 2);  // t * e_1
    CHECK(oct_prime(te1) == e(f4, 1, 3));
    CHECK(oct_prime(e(f4, 1)) == e(f4, 1));
    CHECK(oct_star(e(f4, 0)) == e(f4, 4));
}

TEST_CASE("isotropic enumeration counts") {
    CHECK(count_isotropic(field_make(2, 1)) == 135);
    CHECK(count_isotropic(field_make(3, 1)) == 2240);
    // brute-force oracle at q = 2: filter all 255 nonzero octonions
    const Field& f = field_make(2, 1);
    uint64_t brute = 0;
    for (uint32_t code = 1; code < 256; ++code) {
        Octonion x(f);
        for (int i = 0; i < 8; ++i) x.c[i] = (code >> i) & 1;
        if (oct_norm(x).v == 0) ++brute;
    }
    CHECK(brute == 135);
    std::set<std::array<uint16_t, 8>> seen;
    enumerate_isotropic(f, [&](const Octonion& x) { seen.insert(x.c); });
    CHECK(seen.size() == 135);
}

TEST_CASE("mismatched specs rejected") {
    const Field& f2 = field_make(2, 1);
    const Field& f3 = field_make(3, 1);
    CHECK_THROWS_AS(oct_mul(Octonion::one(f2), Octonion::one(f3)), std::domain_error);
}
