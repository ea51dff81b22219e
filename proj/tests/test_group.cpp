#include <doctest.h>

#include "af/group.hpp"
#include "af/rng.hpp"

using namespace af;

TEST_CASE("transvection action on the first diagonal unit") {
    const Field& f = field_make(3, 1);
    LinearOp27 op = Generator::transvection(0, 1, Octonion::basis(f, 1)).op();
    AlbertVector img = op.apply(AlbertVector::basis(f, 0));
    AlbertVector want = AlbertVector::basis(f, 0);
    want.x[19 + 1] = 1;  // (1,0,0|0,0,e_1)
    CHECK(img == want);
}

TEST_CASE("coordinate permutations") {
    const Field& f = field_make(5, 1);
    SplitMix64 rng(5);
    AlbertVector X = random_albert(f, rng);
    AlbertVector rc = Generator::cyclic_perm(f).op().apply(X);
    CHECK(rc.a() == X.c());
    CHECK(rc.A() == X.C());
    AlbertVector rs = Generator::swap_perm(f).op().apply(X);
    CHECK(rs.b() == X.c());
    CHECK(rs.A() == oct_conj(X.A()));
    CHECK(rs.C() == oct_conj(X.B()));
}

TEST_CASE("compose and invert") {
    const Field& f = field_make(3, 1);
    LinearOp27 op = Generator::transvection(1, 2, Octonion::basis(f, 2)).op();
    CHECK(op.compose(op.inverse()) == LinearOp27::identity(f));
    // M_x M_y = M_{x+y}
    SplitMix64 rng(9);
    Octonion x = random_octonion(f, rng), y = random_octonion(f, rng);
    LinearOp27 ox = Generator::transvection(2, 0, x).op();
    LinearOp27 oy = Generator::transvection(2, 0, y).op();
    CHECK(ox.compose(oy) == Generator::transvection(2, 0, oct_add(x, y)).op());
}

TEST_CASE("transvection order at q=2") {
    const Field& f = field_make(2, 1);
    LinearOp27 op = Generator::transvection(0, 1, Octonion::basis(f, 1)).op();
    CHECK(op.compose(op) == LinearOp27::identity(f));
}

TEST_CASE("determinant certificates") {
    const Field& f = field_make(5, 1);
    CHECK(preserves_det(Generator::transvection(0, 1, Octonion::basis(f, 3)).op()));
    CHECK(preserves_det(Generator::cyclic_perm(f).op()));
    // scalar: lambda^3 = 1 test; in GF(5) only lambda = 1 works
    CHECK(preserves_det(LinearOp27::scalar(f, 1)));
    CHECK(!preserves_det(LinearOp27::scalar(f, 2)));
    const Field& f4 = field_make(2, 2);
    for (uint16_t lam : {1, 2, 3}) CHECK(preserves_det(LinearOp27::scalar(f4, lam)));
}

TEST_CASE("generator parameter validation") {
    const Field& f = field_make(3, 1);
    // diagonal requires N(u) = 1
    CHECK_THROWS_AS(Generator::diagonal(Octonion::basis(f, 1), 0), std::invalid_argument);
    // F4 rotation requires N(x) = 0
    CHECK_THROWS_AS(Generator::f4_rotation(0, Octonion::one(f)), std::invalid_argument);
    CHECK_THROWS_AS(Generator::transvection(1, 1, Octonion::one(f)), std::invalid_argument);
    CHECK_THROWS_AS(Generator::twisted_transvection(0, 1, 1, f), std::invalid_argument);
}

TEST_CASE("subalgebra precondition") {
    const Field& f = field_make(2, 1);
    OctMatrix3 bad = OctMatrix3::identity(f);
    bad.at(0, 1) = Octonion::basis(f, 1);
    bad.at(1, 2) = Octonion::basis(f, 2);
    CHECK(!entries_in_two_dim_subalgebra(bad));
    CHECK_THROWS_AS(op_from_matrix(bad), std::domain_error);
    OctMatrix3 good = OctMatrix3::identity(f);
    good.at(0, 1) = Octonion::basis(f, 1);
    good.at(1, 0) = Octonion::basis(f, 1);
    CHECK(entries_in_two_dim_subalgebra(good));
}

TEST_CASE("duality") {
    const Field& f = field_make(3, 1);
    Generator rot = Generator::f4_rotation(0, Octonion::basis(f, 1));
    CHECK(duality_fixed(rot.matrix()));
    CHECK(fixes_identity(rot.op()));
    Generator tv = Generator::transvection(0, 1, Octonion::basis(f, 1));
    CHECK(!duality_fixed(tv.matrix()));
    CHECK(preserves_det(dual_op(tv.matrix())));
}

TEST_CASE("hermitian forms over GF(4)") {
    const Field& f4 = field_make(2, 2);
    CHECK(hermitian_form(AlbertVector::basis(f4, 0), HermitianVariant::H1).v == 1);
    AlbertVector e1A(f4);
    e1A.x[3 + 1] = 1;
    CHECK(hermitian_form(e1A, HermitianVariant::H1).v == 0);
    AlbertVector oneA(f4);
    oneA.x[3] = oneA.x[3 + 4] = 1;
    CHECK(hermitian_form(oneA, HermitianVariant::H1).v == 0);  // 2 = 0 in char 2
    const Field& f9 = field_make(3, 2);
    AlbertVector oneA9(f9);
    oneA9.x[3] = oneA9.x[3 + 4] = 1;
    CHECK(hermitian_form(oneA9, HermitianVariant::H1).v == 2);
    const Field& f3 = field_make(3, 1);
    CHECK_THROWS_AS(hermitian_form(AlbertVector::basis(f3, 0), HermitianVariant::H1),
                    std::domain_error);
}

TEST_CASE("twisted transvections are dagger-unitary") {
    const Field& f4 = field_make(2, 2);
    Generator nx = Generator::twisted_transvection(0, 1, 2, f4);  // x = t e_1
    CHECK(is_twisted_unitary(nx.matrix()));
    CHECK(preserves_h1(nx.op()));
    CHECK(preserves_det(nx.op()));
    Generator plain = Generator::transvection(0, 1, Octonion::basis(f4, 1));
    CHECK(!is_twisted_unitary(plain.matrix()));
    CHECK(is_twisted_unitary(OctMatrix3::identity(f4)));
}
