#include <doctest.h>

#include <set>

#include "af/gf_linalg.hpp"
#include "af/orbits.hpp"

using namespace af;

TEST_CASE("closed-form counts at q=2") {
    auto c = closed_form_counts(2);
    CHECK(c.white_vectors == 139503);
    CHECK(c.white_points == 139503);  // q-1 = 1
    CHECK(c.suborbit_all_white == 4590);
    CHECK(c.suborbit_two_white == 134912);
    CHECK(c.primitive_idempotents == 69888);
    CHECK(c.trace0_white == 69615);
    CHECK(c.structured_cases[0] == 14400);
    CHECK(c.structured_cases[1] == 48960);
    CHECK(c.structured_cases[2] == 55488);
    CHECK(c.structured_cases[3] == 14175);
    CHECK(c.structured_cases[4] == 6075);
    CHECK(c.structured_cases[5] == 405);
    CHECK(c.f4_order == BigInt("3311126603366400"));
}

TEST_CASE("order identities for small q") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto rep = order_identities(q);
        CHECK(rep.all_pass());
        CHECK(rep.so10_constant == 1);
    }
}

TEST_CASE("white count q=3 structured total") {
    const Field& f3 = field_make(3, 1);
    BigInt total = 0;
    for (int c = 1; c <= 6; ++c) total += structured_white_count(f3, c);
    CHECK(total == 130747526);
    CHECK(total == closed_form_counts(3).white_vectors);
}

TEST_CASE("canonical points") {
    const Field& f3 = field_make(3, 1);
    AlbertVector v = AlbertVector::diag(f3, 0, 2, 0);
    AlbertVector c = canonical_point(v);
    CHECK(c == AlbertVector::diag(f3, 0, 1, 0));
    CHECK(canonical_point(c) == c);
    CHECK(canonical_key(v) == canonical_key(alb_scale(v, 2)));
    CHECK_THROWS_AS(canonical_point(AlbertVector(f3)), std::domain_error);
}

TEST_CASE("packed point round trip") {
    const Field& f9 = field_make(3, 2);
    int bits = point_bits(f9);
    CHECK(bits == 4);
    std::array<uint16_t, 27> coords{};
    for (int i = 0; i < 27; ++i) coords[i] = static_cast<uint16_t>((i * 5 + 3) % 9);
    CHECK(unpack_point(pack_point(coords, bits), bits) == coords);
    CHECK(point_bits(field_make(2, 1)) == 1);
    CHECK(point_bits(field_make(5, 1)) == 3);
}

TEST_CASE("empty generator set orbit") {
    const Field& f = field_make(2, 1);
    OrbitReport r = orbit_bfs({}, AlbertVector::basis(f, 0));
    CHECK(r.size == 1);
}

TEST_CASE("orbit budget truncation") {
    const Field& f = field_make(2, 1);
    OrbitOptions opts;
    opts.node_budget = 100;
    auto gens = generator_ops_with_inverses(standard_generators(f));
    OrbitReport r = orbit_bfs(gens, AlbertVector::basis(f, 0), opts);
    CHECK(r.truncated);
    CHECK(r.size >= 100);
    CHECK(r.size < 139503);
}

TEST_CASE("q2 classification tables agree with the generic path") {
    const Field& f = field_make(2, 1);
    SplitMix64 rng(31);
    for (int n = 0; n < 20000; ++n) {
        uint32_t key = static_cast<uint32_t>(rng.next() & ((UINT32_C(1) << 27) - 1));
        if (!key) continue;
        AlbertVector X(f);
        for (int i = 0; i < 27; ++i) X.x[i] = (key >> i) & 1;
        CHECK(q2_is_white(key) == is_white(X));
        CHECK(q2_det(key) == alb_det(X).v);
    }
}

TEST_CASE("line types") {
    const Field& f = field_make(2, 1);
    AlbertVector W = AlbertVector::basis(f, 0);
    AlbertVector X(f);
    X.x[11 + 5] = 1;  // (0,0,0|0,e_{-1},0)
    CHECK(line_type(W, X) == LineType::AllWhite);
    CHECK(line_type(W, AlbertVector::basis(f, 1)) == LineType::TwoWhite);
    CHECK_THROWS_AS(line_type(W, AlbertVector::diag(f, 1, 1, 0)), std::domain_error);
    CHECK_THROWS_AS(line_type(W, W), std::domain_error);
}

TEST_CASE("pure white representatives") {
    const Field& f = field_make(2, 1);
    CHECK(pure_white(pure_white_representative(f, "W1")));
    CHECK(pure_white(pure_white_representative(f, "W4")));
    CHECK(pure_white(pure_white_representative(f, "W6")));
    CHECK(pure_white_representative(f, "W6").size() == 6);
    CHECK(pure_white_representative(f, "W5p").size() == 5);
    // span{E1, E2} is not pure white: E1+E2 is grey
    std::vector<AlbertVector> bad = {AlbertVector::basis(f, 0), AlbertVector::basis(f, 1)};
    CHECK(!pure_white(bad));
    // q=3 spot check
    const Field& f3 = field_make(3, 1);
    CHECK(pure_white(pure_white_representative(f3, "W6")));
}

TEST_CASE("seventeen space at the standard point") {
    for (int q : {2, 3, 4, 5}) {
        const Field& f = field_of_order(q);
        AlbertVector v = AlbertVector::basis(f, 0);
        auto space = seventeen_space(v);
        CHECK(space.size() == 17);
        // must be exactly {(a,0,0|0,B,C)}: coordinates 1, 2 and A-slot vanish
        for (auto& w : space) {
            CHECK(w.x[1] == 0);
            CHECK(w.x[2] == 0);
            for (int i = 3; i < 11; ++i) CHECK(w.x[i] == 0);
        }
        CHECK_THROWS_AS(seventeen_space(AlbertVector::identity(f)), std::domain_error);
    }
}

TEST_CASE("seventeen space dimension for sampled whites at q=2,3") {
    for (int q : {2, 3}) {
        const Field& f = field_of_order(q);
        SplitMix64 rng(61 + q);
        for (int n = 0; n < 40; ++n) {
            AlbertVector v = n % 3 == 2 ? random_white_offdiag(f, rng) : random_white_rank1(f, rng);
            auto space = seventeen_space(v);
            CHECK(space.size() == 17);
            // the defining vector lies in its own 17-space
            std::vector<std::vector<uint16_t>> sb;
            for (auto& s : space) sb.emplace_back(s.x.begin(), s.x.end());
            CHECK(gf_in_span(sb, std::vector<uint16_t>(v.x.begin(), v.x.end()), f));
        }
    }
}

TEST_CASE("twisted suite spot checks over GF(9)") {
    const Field& f9 = field_make(3, 2);  // GF(9) = GF(3^2), the twisted field for q = 3
    // dagger-unitarity and exact H1 preservation for sampled twisted kinds
    for (int pair = 0; pair < 3; ++pair) {
        Generator g = Generator::twisted_transvection(pair, pair + 1, 5, f9);
        CHECK(is_twisted_unitary(g.matrix()));
        CHECK(preserves_h1(g.op()));
    }
    for (uint32_t a = 2; a < f9.q; ++a)
        if (f9.mul(static_cast<uint16_t>(a), f9.conjq(static_cast<uint16_t>(a))) == 1) {
            Generator g = Generator::twisted_diagonal(static_cast<uint16_t>(a), f9);
            CHECK(is_twisted_unitary(g.matrix()));
            CHECK(preserves_h1(g.op()));
            break;
        }
}

TEST_CASE("w10 dichotomy at q=2") {
    const Field& f = field_make(2, 1);
    auto basis = w10_space(AlbertVector::basis(f, 0));
    CHECK(basis.size() == 10);
    uint64_t white = 0, grey = 0;
    for (uint32_t mask = 1; mask < 1024; ++mask) {
        AlbertVector v(f);
        for (int b = 0; b < 10; ++b)
            if (mask & (1u << b)) v = alb_add(v, basis[b]);
        Color c = classify_color(v);
        bool isotropic = alb_Q(v).v == 0;
        CHECK((c == Color::White) == isotropic);
        if (c == Color::White)
            ++white;
        else {
            CHECK(c == Color::Grey);
            ++grey;
        }
    }
    CHECK(white + grey == 1023);
    CHECK_THROWS_AS(w10_space(AlbertVector::basis(f, 1)), std::invalid_argument);
}

TEST_CASE("twisted point types over GF(4)") {
    const Field& f4 = field_make(2, 2);
    CHECK(twoE6_point_type(AlbertVector::basis(f4, 0)) == TwoE6PointType::NonIsotropic);
    SplitMix64 rng(41);
    for (int n = 0; n < 5; ++n) {
        auto d = twoE6_point_type_detail(random_white_rank1(f4, rng));
        CHECK(d.space_dim == 17);
    }
    const Field& f2 = field_make(2, 1);
    CHECK_THROWS_AS(twoE6_point_type(AlbertVector::basis(f2, 0)), std::domain_error);
}
