#include <doctest.h>

#include "af/albert.hpp"
#include "af/rng.hpp"
#include "af/serialize.hpp"

using namespace af;

TEST_CASE("forms on diagonal vectors") {
    const Field& f = field_make(5, 1);
    AlbertVector I = AlbertVector::identity(f);
    CHECK(alb_trace(I).v == 3);
    CHECK(alb_Q(I).v == f.neg(3));
    CHECK(alb_det(I).v == 1);
    AlbertVector X = AlbertVector::diag(f, 2, 3, 4);
    CHECK(alb_det(X).v == f.mul(f.mul(2, 3), 4));
    AlbertVector e1(f);
    e1.x[3 + 1] = 1;
    CHECK(alb_Q(e1).v == 0);
}

TEST_CASE("color classification examples") {
    const Field& f = field_make(2, 1);
    CHECK(classify_color(AlbertVector::basis(f, 0)) == Color::White);
    CHECK(classify_color(AlbertVector::identity(f)) == Color::Black);
    CHECK(classify_color(AlbertVector::diag(f, 1, 1, 0)) == Color::Grey);
    CHECK_THROWS_AS(classify_color(AlbertVector(f)), std::domain_error);
}

TEST_CASE("linear form extraction matches the classification") {
    const Field& f = field_make(3, 1);
    // W = (1,0,0|0,0,0) is white: zero linear term
    auto lin = linear_form_at(AlbertVector::basis(f, 0));
    for (uint16_t c : lin) CHECK(c == 0);
    // W = (1,1,0|0,0,0): the linear term is the single coordinate c
    auto lin2 = linear_form_at(AlbertVector::diag(f, 1, 1, 0));
    for (int i = 0; i < 27; ++i) CHECK(lin2[i] == (i == 2 ? 1 : 0));
    // W = I: linear part is a+b+c
    auto lin3 = linear_form_at(AlbertVector::identity(f));
    for (int i = 0; i < 27; ++i) CHECK(lin3[i] == (i < 3 ? 1 : 0));
}

TEST_CASE("det expansion constant is det") {
    const Field& f = field_make(5, 1);
    SplitMix64 rng(3);
    for (int n = 0; n < 50; ++n) {
        AlbertVector W = random_albert(f, rng);
        DetExpansion e = det_expand_at(W);
        CHECK(e.constant == alb_det(W).v);
        // full reconstruction: det(W+X) = const + lin(X) + quad(X) + det(X)
        AlbertVector X = random_albert(f, rng);
        uint16_t acc = e.constant;
        for (int i = 0; i < 27; ++i) acc = f.add(acc, f.mul(e.linear[i], X.x[i]));
        acc = f.add(acc, e.quadratic.evaluate(X.x));
        acc = f.add(acc, alb_det(X).v);
        CHECK(acc == alb_det(alb_add(W, X)).v);
    }
}

TEST_CASE("trilinear polarization values") {
    const Field& f = field_make(7, 1);
    AlbertVector E1 = AlbertVector::basis(f, 0), E2 = AlbertVector::basis(f, 1),
                 E3 = AlbertVector::basis(f, 2);
    CHECK(trilinear_det(E1, E2, E3).v == 1);
    CHECK(trilinear_det(E1, E1, E2).v == 0);
}

TEST_CASE("jordan product and Cayley-Hamilton") {
    const Field& f5 = field_make(5, 1);
    AlbertVector E1 = AlbertVector::basis(f5, 0);
    CHECK(jordan_mul(E1, E1) == E1);
    CHECK(cayley_hamilton_residual(AlbertVector::identity(f5)).is_zero());
    CHECK(cayley_hamilton_residual(E1).is_zero());
    SplitMix64 rng(11);
    const Field& f7 = field_make(7, 1);
    for (int n = 0; n < 100; ++n) {
        CHECK(cayley_hamilton_residual(random_albert(f7, rng)).is_zero());
        AlbertVector X = random_albert(f5, rng), Y = random_albert(f5, rng);
        CHECK(jordan_mul(X, Y) == jordan_mul(Y, X));
    }
    const Field& f2 = field_make(2, 1);
    CHECK_THROWS_AS(jordan_mul(AlbertVector::identity(f2), AlbertVector::identity(f2)),
                    std::domain_error);
}

TEST_CASE("dickson translation") {
    const Field& f101 = field_make(101, 1);
    AlbertVector I = AlbertVector::identity(f101);
    CHECK(alb_det(I).v == 1);
    CHECK(dickson_cubic(dickson_translate(I), f101).v == f101.neg(1));
    AlbertVector Z(f101);
    CHECK(dickson_cubic(dickson_translate(Z), f101).v == 0);
    SplitMix64 rng(17);
    for (int n = 0; n < 500; ++n) {
        AlbertVector X = random_albert(f101, rng);
        CHECK(f101.add(alb_det(X).v, dickson_cubic(dickson_translate(X), f101).v) == 0);
    }
}

TEST_CASE("dickson exact polynomial identity") {
    for (int p : {2, 3, 5, 101}) {
        const Field& f = field_make(p, 1);
        CubicPoly27 sum = det_poly(f);
        CHECK(sum.term_count() == 45);
        sum.add(dickson_poly_in_albert_coords(f));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("json round trips") {
    const Field& f9 = field_make(3, 2);
    SplitMix64 rng(23);
    AlbertVector X = random_albert(f9, rng);
    CHECK(albert_from_json(albert_json(X)) == X);
    Octonion x = random_octonion(f9, rng);
    CHECK(oct_from_json(oct_json(x), f9) == x);
    Fe e(5, f9);
    Fe back = fe_from_json(fe_json(e));
    CHECK(back.v == 5);
    CHECK(fe_json(e)["coeffs"].size() == 2);
}
