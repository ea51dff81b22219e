#include <doctest.h>

#include "af/gf.hpp"

using namespace af;

TEST_CASE("lex-least irreducible moduli") {
    // GF(2): modulus x
    const Field& f2 = field_make(2, 1);
    CHECK(f2.modulus == std::vector<uint16_t>{0, 1});
    // GF(4): x^2 + x + 1 is the only irreducible monic quadratic over GF(2)
    const Field& f4 = field_make(2, 2);
    CHECK(f4.modulus == std::vector<uint16_t>{1, 1, 1});
    // GF(9): x^2 + 1 wins the low-degree-first lexicographic scan
    const Field& f9 = field_make(3, 2);
    CHECK(f9.modulus == std::vector<uint16_t>{1, 0, 1});
}

TEST_CASE("basic arithmetic examples") {
    const Field& f2 = field_make(2, 1);
    CHECK(f2.add(1, 1) == 0);
    const Field& f4 = field_make(2, 2);
    // t*t = t+1 in GF(4) = GF(2)[t]/(t^2+t+1); t has code 2, t+1 code 3
    CHECK(f4.mul(2, 2) == 3);
    const Field& f3 = field_make(3, 1);
    CHECK(f3.inv(2) == 2);
}

TEST_CASE("conj_q on quadratic extensions") {
    const Field& f4 = field_make(2, 2);
    CHECK(f4.conjq(2) == 3);  // t -> t+1
    CHECK(f4.conjq(1) == 1);
    const Field& f9 = field_make(3, 2);
    CHECK(f9.conjq(3) == 6);  // t -> 2t  (t code 3, 2t code 6)
    CHECK_THROWS_AS((void)field_make(5, 1).conjq(1), std::domain_error);
}

TEST_CASE("field axioms exhaustively for every prime power <= 64") {
    for (int q = 2; q <= 64; ++q) {
        int p, k;
        try {
            prime_power_split(q, p, k);
        } catch (const std::invalid_argument&) {
            continue;  // not a prime power
        }
        const Field& f = field_make(p, k);
        REQUIRE(f.q == static_cast<uint32_t>(q));
        bool axioms = true;
        for (uint32_t a = 0; a < f.q && axioms; ++a) {
            axioms = f.add(a, f.neg(a)) == 0;
            if (a) axioms = axioms && f.mul(a, f.inv(a)) == 1;
            axioms = axioms && f.pow(a, f.q) == a;  // Fermat property
            for (uint32_t b = 0; b < f.q && axioms; ++b) {
                axioms = f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                for (uint32_t c = 0; c < f.q && axioms; ++c)
                    axioms = f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c) &&
                             f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) &&
                             f.add(a, f.add(b, c)) == f.add(f.add(a, b), c);
            }
        }
        INFO("q=", q);
        CHECK(axioms);
    }
}

TEST_CASE("conj_q is an order-2 automorphism fixing exactly GF(q)") {
    for (auto& [p, k] : {std::pair<int, int>{2, 2}, {3, 2}, {2, 4}, {5, 2}, {7, 2}, {3, 4}}) {
        const Field& f = field_make(p, k);
        uint32_t fixed = 0;
        for (uint32_t a = 0; a < f.q; ++a) {
            CHECK(f.conjq(f.conjq(a)) == a);
            if (f.conjq(a) == a) ++fixed;
            for (uint32_t b = 0; b < f.q && b < 64; ++b) {
                CHECK(f.conjq(f.add(a, b)) == f.add(f.conjq(a), f.conjq(b)));
                CHECK(f.conjq(f.mul(a, b)) == f.mul(f.conjq(a), f.conjq(b)));
            }
        }
        CHECK(fixed == f.sqrt_order());
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(field_make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_make(2, 11), std::invalid_argument);
    const Field& f3 = field_make(3, 1);
    CHECK_THROWS_AS((void)f3.inv(0), std::domain_error);
    const Field& f5 = field_make(5, 1);
    CHECK_THROWS_AS((void)(f3.el(1) + f5.el(1)), std::domain_error);
}

TEST_CASE("prime power split") {
    int p, k;
    prime_power_split(8, p, k);
    CHECK(p == 2);
    CHECK(k == 3);
    prime_power_split(9, p, k);
    CHECK(p == 3);
    CHECK(k == 2);
    CHECK_THROWS_AS(prime_power_split(12, p, k), std::invalid_argument);
    CHECK(&field_of_order(9) == &field_make(3, 2));
}
