// Acceptance suite: runs every gate criterion at its stated tolerance
// (exact arithmetic, so tolerance is equality unless stated) and prints one
// pass/fail line per criterion.  Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "af/orbits.hpp"
#include "af/reports.hpp"
#include "af/verify.hpp"

using namespace af;

namespace {

int g_threads = 1;
int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int id, const std::string& name, bool passed, const std::string& detail,
            double seconds, double budget_seconds = 0) {
    bool in_budget = budget_seconds <= 0 || seconds <= budget_seconds;
    bool ok = passed && in_budget;
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %2d: %s (%s%s) [%.1fs%s]\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), detail.c_str(), passed ? "" : " **check failed**", seconds,
                in_budget ? "" : " OVER BUDGET");
    std::fflush(stdout);
}

struct CensusCache {
    ColorCensus census;
    std::vector<uint32_t> whites;
    bool done = false;
};

CensusCache& census_cache() {
    static CensusCache c;
    if (!c.done) {
        c.census = brute_force_color_census(field_make(2, 1), g_threads, &c.whites);
        c.done = true;
    }
    return c;
}

ColorCensus& census_q2() { return census_cache().census; }
std::vector<uint32_t>& white_keys_q2() { return census_cache().whites; }

// ---- criterion 1: exhaustive white census at q = 2 ----
void criterion1() {
    Timer t;
    ColorCensus c = census_q2();
    auto cf = closed_form_counts(2);
    bool ok = c.white == 139503 && BigInt(c.white) == cf.white_vectors &&
              c.white + c.grey + c.black == (UINT64_C(1) << 27) - 1 &&
              c.diagonal_white == 3;  // exactly the three unit axes
    report(1, "white-vector census, q=2 (brute force over 2^27-1)", ok,
           "white=" + std::to_string(c.white) + " grey=" + std::to_string(c.grey) +
               " black=" + std::to_string(c.black),
           t.seconds(), 300);
}

// ---- criterion 2: structured enumeration counts at q = 2 and q = 3 ----
void criterion2() {
    Timer t;
    const Field& f2 = field_make(2, 1);
    const Field& f3 = field_make(3, 1);
    const uint64_t expect2[6] = {14400, 48960, 55488, 14175, 6075, 405};
    bool ok = true;
    std::string detail;

    // q = 2 with full stream verification: every emitted vector is white and
    // the emitted streams partition the census white set.
    std::unordered_set<uint32_t> seen;
    for (int cs = 1; cs <= 6 && ok; ++cs) {
        uint64_t emitted = 0;
        bool all_white = true;
        BigInt n = structured_white_count(f2, cs, [&](const AlbertVector& W) {
            ++emitted;
            if (!is_white(W)) all_white = false;
            uint32_t key = 0;
            for (int i = 0; i < 27; ++i) key |= static_cast<uint32_t>(W.x[i] & 1) << i;
            seen.insert(key);
        });
        ok = all_white && n == expect2[cs - 1] && BigInt(emitted) == n;
        if (!ok) detail = "q=2 case " + std::to_string(cs) + " count " + n.str();
    }
    if (ok) {
        auto& whites = white_keys_q2();
        ok = seen.size() == whites.size();
        for (uint32_t k : whites)
            if (!seen.count(k)) {
                ok = false;
                break;
            }
        if (!ok) detail = "q=2 stream does not match the census white set";
    }

    // q = 3 counts against the six closed forms
    if (ok) {
        auto cf3 = closed_form_counts(3);
        BigInt total = 0;
        for (int cs = 1; cs <= 6 && ok; ++cs) {
            BigInt n = structured_white_count(f3, cs);
            total += n;
            ok = n == cf3.structured_cases[cs - 1];
            if (!ok) detail = "q=3 case " + std::to_string(cs) + " count " + n.str();
        }
        ok = ok && total == 130747526;
        if (detail.empty()) detail = "q=3 total " + total.str();
    }
    report(2, "structured white enumeration, six cases, q=2 and q=3", ok, detail, t.seconds(), 600);
}

// ---- criterion 3: octonion identity suites ----
void criterion3() {
    Timer t;
    VerifyOptions opt;
    opt.seed = 20260809;
    opt.random_instances = 100000;
    opt.threads = g_threads;
    bool ok = true;
    std::string detail;
    for (int q : {2, 3, 4, 5, 8, 9}) {
        SuiteResult sr = verify_octonion(field_of_order(q), opt);
        if (!sr.passed()) {
            ok = false;
            for (auto& c : sr.checks)
                if (!c.passed) detail += " q=" + std::to_string(q) + ":" + c.name;
        }
    }
    report(3, "octonion identity suites (exhaustive q=2,3; 1e5 random q=4,5,8,9)", ok, detail,
           t.seconds(), 120);
}

// ---- criterion 4: determinant-preservation certificates ----
void criterion4() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int q : {2, 3, 4, 5}) {
        const Field& f = field_of_order(q);
        std::vector<Generator> gens = standard_generators(f);
        for (int i = 0; i < 4; ++i)
            for (int slot = 0; slot < 3; ++slot)
                gens.push_back(Generator::diagonal(
                    oct_add(Octonion::basis(f, i), Octonion::basis(f, i + 4)), slot));
        for (int i : {1, 2, 3, 5, 6, 7})
            gens.push_back(Generator::diagonal(oct_add(Octonion::one(f), Octonion::basis(f, i)), 0));
        for (uint32_t lam = 1; lam < f.q; ++lam)
            for (int i = 0; i < 4; ++i)
                gens.push_back(Generator::diagonal(
                    oct_add(Octonion::basis(f, i, static_cast<uint16_t>(lam)),
                            Octonion::basis(f, i + 4, f.inv(static_cast<uint16_t>(lam)))),
                    2));
        for (int pair = 0; pair < 3; ++pair)
            for (int i = 0; i < 8; ++i)
                gens.push_back(Generator::f4_rotation(pair, Octonion::basis(f, i)));
        for (auto& g : gens)
            if (!preserves_det(g.op())) {
                ok = false;
                detail += " q=" + std::to_string(q) + ":" + g.describe();
                break;
            }
        // scalar certificate: passes exactly when lambda^3 = 1
        for (uint32_t lam = 1; lam < f.q && ok; ++lam) {
            uint16_t l = static_cast<uint16_t>(lam);
            if (preserves_det(LinearOp27::scalar(f, l)) != (f.mul(f.mul(l, l), l) == 1)) {
                ok = false;
                detail += " scalar q=" + std::to_string(q) + " lambda=" + std::to_string(lam);
            }
        }
    }
    // twisted kinds over GF(4) and GF(81)
    for (int q : {2, 3}) {
        const Field& f = field_make(q == 2 ? 2 : 3, q == 2 ? 2 : 2);
        std::vector<Generator> gens;
        uint32_t lam_cap = f.q == 4 ? f.q : 5;  // all of GF(4)*, a sample over GF(9)
        for (int pair = 0; pair < 3; ++pair)
            for (int eidx = 0; eidx < 8; ++eidx)
                for (uint32_t lam = 1; lam < lam_cap; ++lam)
                    gens.push_back(
                        Generator::twisted_transvection(pair, eidx, static_cast<uint16_t>(lam), f));
        for (uint32_t a = 1; a < f.q; ++a)
            if (f.mul(static_cast<uint16_t>(a), f.conjq(static_cast<uint16_t>(a))) == 1)
                gens.push_back(Generator::twisted_diagonal(static_cast<uint16_t>(a), f));
        for (uint32_t a = 0; a < f.q; ++a)
            for (uint32_t b = 1; b < f.q; ++b) {
                uint16_t norm =
                    f.add(f.mul(static_cast<uint16_t>(a), f.conjq(static_cast<uint16_t>(a))),
                          f.mul(static_cast<uint16_t>(b), f.conjq(static_cast<uint16_t>(b))));
                if (norm == 1)
                    gens.push_back(Generator::twisted_block(0, static_cast<uint16_t>(a),
                                                            static_cast<uint16_t>(b), f));
            }
        for (auto& g : gens)
            if (!preserves_det(g.op())) {
                ok = false;
                detail += " twisted q^2=" + std::to_string(f.q) + ":" + g.describe();
                break;
            }
    }
    report(4, "determinant certificates for every generator kind; scalar iff lambda^3=1", ok,
           detail, t.seconds());
}

// ---- criterion 5: Cayley-Hamilton and the det trace formula at q = 5, 7 ----
void criterion5() {
    Timer t;
    bool ok = true;
    for (int q : {5, 7}) {
        const Field& f = field_of_order(q);
        SplitMix64 rng(808 + q);
        uint16_t i2 = f.inv(f.from_int(2)), i3 = f.inv(f.from_int(3)), i6 = f.inv(f.from_int(6));
        for (int n = 0; n < 10000 && ok; ++n) {
            AlbertVector X = random_albert(f, rng);
            ok = cayley_hamilton_residual(X).is_zero();
            if (!ok) break;
            AlbertVector X2 = jordan_mul(X, X), X3 = jordan_mul(X2, X);
            uint16_t t1 = alb_trace(X).v, t2 = alb_trace(X2).v, t3 = alb_trace(X3).v;
            uint16_t d = f.mul(i3, t3);
            d = f.sub(d, f.mul(i2, f.mul(t2, t1)));
            d = f.add(d, f.mul(f.mul(i6, t1), f.mul(t1, t1)));
            ok = d == alb_det(X).v;
        }
    }
    report(5, "Cayley-Hamilton residual and det trace formula, 1e4 random at q=5,7", ok, "",
           t.seconds());
}

// ---- criterion 6: Dickson equivalence as exact polynomials ----
void criterion6() {
    Timer t;
    Json rep = dickson_report({2, 3, 5, 101});
    report(6, "det + (Dickson cubic o translation) = 0 over GF(p), p in {2,3,5,101}",
           rep["passed"].get<bool>(), "", t.seconds());
}

// ---- criterion 7: orbit transitivity and suborbits at q = 2 ----
void criterion7() {
    Timer t;
    const Field& f = field_make(2, 1);
    bool ok = true;
    std::string detail;

    auto std_ops = generator_ops_with_inverses(standard_generators(f));
    std::vector<PackedPoint> visited;
    OrbitReport whole = orbit_bfs(std_ops, AlbertVector::basis(f, 0), {}, &visited);
    ok = whole.size == 139503 && !whole.truncated;
    detail = "orbit=" + std::to_string(whole.size);

    // orbit closure: any generator applied to any visited point stays inside
    if (ok) {
        std::unordered_set<uint32_t> inside;
        for (auto& p : visited) inside.insert(static_cast<uint32_t>(p.lo));
        SplitMix64 rng(0x0b17);
        for (int n = 0; n < 10000 && ok; ++n) {
            const PackedPoint& p = visited[rng.below(visited.size())];
            AlbertVector X(f);
            X.x = unpack_point(p, 1);
            const LinearOp27& op = std_ops[rng.below(std_ops.size())];
            AlbertVector img = op.apply(X);
            ok = inside.count(static_cast<uint32_t>(canonical_key(img).lo)) != 0;
        }
        if (!ok) detail += " closure-violation";
    }

    auto stab_ops = generator_ops_with_inverses(stabilizer_generators(f));
    AlbertVector rep1(f);
    rep1.x[11 + 5] = 1;  // (0,0,0|0,e_{-1},0): an all-white partner of W
    OrbitReport sub1 = orbit_bfs(stab_ops, rep1);
    AlbertVector rep2 = AlbertVector::basis(f, 1);  // (0,1,0|0,0,0): a two-white partner
    OrbitReport sub2 = orbit_bfs(stab_ops, rep2);
    ok = ok && sub1.size == 4590 && sub2.size == 134912 &&
         1 + sub1.size + sub2.size == 139503;
    detail += " suborbits=" + std::to_string(sub1.size) + "," + std::to_string(sub2.size);

    // cross-check the same partition by line type against the census whites
    Rank3Partition part = rank3_partition_q2(white_keys_q2());
    ok = ok && part.all_white == 4590 && part.two_white == 134912;

    report(7, "BFS orbit 139503 and stabilizer suborbits 4590 + 134912, q=2", ok, detail,
           t.seconds(), 180);
}

// ---- criterion 8: idempotent bookkeeping at q = 2 ----
void criterion8() {
    Timer t;
    ColorCensus c = census_q2();
    bool ok = c.primitive_idempotents == 69888 && c.trace0_white == 69615 &&
              1 * c.primitive_idempotents + c.trace0_white == 139503;
    report(8, "primitive idempotents 69888 and trace-0 whites 69615, q=2", ok,
           "idem=" + std::to_string(c.primitive_idempotents) +
               " trace0=" + std::to_string(c.trace0_white),
           t.seconds());
}

// ---- criterion 9: order identities as exact big integers ----
void criterion9() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto rep = order_identities(q);
        if (!rep.all_pass() || rep.so10_constant != 1) {
            ok = false;
            detail += " q=" + std::to_string(q);
        }
    }
    ok = ok && closed_form_counts(2).f4_order == BigInt("3311126603366400");
    report(9, "group-order identities, q in {2,3,4,5,7,8,9}; |F4(2)| fixture", ok, detail,
           t.seconds());
}

// ---- criterion 10: pure-white subspaces at q = 2 ----
void criterion10() {
    Timer t;
    const Field& f = field_make(2, 1);
    bool ok = true;
    std::string detail;
    const std::pair<const char*, size_t> reps[] = {{"W1", 1}, {"W2", 2}, {"W3", 3}, {"W4", 4},
                                                   {"W5", 5}, {"W5p", 5}, {"W6", 6}};
    for (auto& [name, dim] : reps) {
        auto basis = pure_white_representative(f, name);
        if (basis.size() != dim || !pure_white(basis)) {
            ok = false;
            detail += std::string(" ") + name;
        }
    }
    auto& whites = white_keys_q2();
    if (ok) {
        ok = is_maximal_pure_white_q2(pure_white_representative(f, "W5"), whites) &&
             is_maximal_pure_white_q2(pure_white_representative(f, "W6"), whites);
        if (!ok) detail += " maximality";
        // W4 is not maximal (it extends to W5)
        ok = ok && !is_maximal_pure_white_q2(pure_white_representative(f, "W4"), whites);
    }
    if (ok) {
        auto basis = w10_space(AlbertVector::basis(f, 0));
        for (uint32_t mask = 1; mask < 1024 && ok; ++mask) {
            AlbertVector v(f);
            for (int b = 0; b < 10; ++b)
                if (mask & (1u << b)) v = alb_add(v, basis[b]);
            Color col = classify_color(v);
            bool isotropic = alb_Q(v).v == 0;
            ok = (col == Color::White) == isotropic &&
                 (col == Color::White || col == Color::Grey);
        }
        if (!ok) detail += " W10-dichotomy";
    }
    report(10, "pure-white subspaces W1..W6, W5', maximality, W10 dichotomy, q=2", ok, detail,
           t.seconds(), 300);
}

// ---- criterion 11: twisted suite over GF(4) ----
void criterion11() {
    Timer t;
    const Field& f = field_make(2, 2);
    bool ok = true;
    std::string detail;

    std::vector<Generator> twisted;
    for (int pair = 0; pair < 3; ++pair)
        for (int eidx = 0; eidx < 8; ++eidx)
            for (uint32_t lam = 1; lam < f.q; ++lam)
                twisted.push_back(
                    Generator::twisted_transvection(pair, eidx, static_cast<uint16_t>(lam), f));
    for (uint32_t a = 1; a < f.q; ++a)
        if (f.mul(static_cast<uint16_t>(a), f.conjq(static_cast<uint16_t>(a))) == 1)
            twisted.push_back(Generator::twisted_diagonal(static_cast<uint16_t>(a), f));
    for (int pair = 0; pair < 3; ++pair)
        for (uint32_t a = 0; a < f.q; ++a)
            for (uint32_t b = 1; b < f.q; ++b)
                if (f.add(f.mul(static_cast<uint16_t>(a), f.conjq(static_cast<uint16_t>(a))),
                          f.mul(static_cast<uint16_t>(b), f.conjq(static_cast<uint16_t>(b)))) == 1)
                    twisted.push_back(Generator::twisted_block(pair, static_cast<uint16_t>(a),
                                                               static_cast<uint16_t>(b), f));

    std::vector<LinearOp27> ops;
    for (auto& g : twisted) {
        if (!is_twisted_unitary(g.matrix())) {
            ok = false;
            detail += " unitarity:" + g.describe();
            break;
        }
        ops.push_back(g.op());
        if (!preserves_h1(ops.back())) {
            ok = false;
            detail += " h1:" + g.describe();
            break;
        }
    }

    // point-type invariance on 1e3 sampled generator applications
    std::vector<AlbertVector> emeralds;
    if (ok) {
        SplitMix64 rng(0x2e62e6);
        uint64_t applications = 0;
        for (int n = 0; n < 100 && ok; ++n) {
            AlbertVector v =
                n % 3 == 2 ? random_white_offdiag(f, rng) : random_white_rank1(f, rng);
            auto d0 = twoE6_point_type_detail(v);
            if (d0.type == TwoE6PointType::Emerald) emeralds.push_back(v);
            AlbertVector w = v;
            for (int s = 0; s < 10; ++s) {
                w = ops[rng.below(ops.size())].apply(w);
                ++applications;
                if (twoE6_point_type(w) != d0.type) {
                    ok = false;
                    detail += " invariance";
                    break;
                }
            }
        }
        ok = ok && applications >= 1000;
        // make sure the emerald clause is actually exercised: the basis-slot
        // vectors (0,0,0|e_i,0,0) are emerald representatives
        AlbertVector e1slot(f);
        e1slot.x[3 + 1] = 1;
        if (twoE6_point_type(e1slot) == TwoE6PointType::Emerald) emeralds.push_back(e1slot);
        detail += " emeralds=" + std::to_string(emeralds.size()) +
                  " applications=" + std::to_string(applications);
        ok = ok && !emeralds.empty();
    }

    // the classical expectation: the H1-radical on the 17-space of an
    // emerald is exactly <v>.  The computed radical is 9-dimensional for
    // every emerald representative (over GF(4) and GF(9) alike), so this
    // clause fails; the radical structure <v> + ker L + ker R is pinned in
    // the verify suite.
    if (ok) {
        for (const AlbertVector& v : emeralds) {
            auto d = twoE6_point_type_detail(v);
            if (!d.radical_is_span_v) {
                ok = false;
                detail += " emerald-radical-dim=" + std::to_string(d.radical_dim) + "-not-1";
                break;
            }
        }
    }
    report(11, "2E6 suite over GF(4): unitarity, H1, type invariance, emerald radicals", ok,
           detail, t.seconds());
    std::printf(
        "      note: the full twisted orbit enumeration (~5.7e9 points at q=2) is out of "
        "desk-scale scope; the exact orbit-length sum identity in criterion 9 substitutes.\n"
        "      note: the emerald radical clause fails as stated: every computed emerald has a\n"
        "      9-dimensional H1-radical (= <v> + two annihilator blocks), not <v>; all other\n"
        "      clauses of this criterion pass.  The verify suite pins the computed structure.\n");
}

}  // namespace

int main() {
    unsigned hw = std::thread::hardware_concurrency();
    g_threads = hw ? static_cast<int>(hw) : 2;
    std::printf("acceptance suite (threads=%d)\n", g_threads);
    Timer total;
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    std::printf("%d criteria failed [total %.1fs]\n", g_failures, total.seconds());
    return g_failures ? 1 : 0;
}
