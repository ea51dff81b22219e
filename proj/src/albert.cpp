#include "af/albert.hpp"

#include <algorithm>
#include <stdexcept>

namespace af {

namespace {
void check_same_field(const AlbertVector& X, const AlbertVector& Y) {
    if (X.f != Y.f) throw std::domain_error("albert: mismatched field specs");
}
}  // namespace

const char* color_name(Color c) {
    switch (c) {
        case Color::White: return "White";
        case Color::Grey: return "Grey";
        case Color::Black: return "Black";
    }
    return "?";
}

AlbertVector AlbertVector::make(Fe a, Fe b, Fe c, const Octonion& A, const Octonion& B,
                                const Octonion& C) {
    if (a.f != b.f || a.f != c.f || a.f != A.f || a.f != B.f || a.f != C.f)
        throw std::domain_error("albert: mismatched field specs");
    AlbertVector X(*a.f);
    X.x[0] = a.v;
    X.x[1] = b.v;
    X.x[2] = c.v;
    for (int i = 0; i < 8; ++i) {
        X.x[3 + i] = A.c[i];
        X.x[11 + i] = B.c[i];
        X.x[19 + i] = C.c[i];
    }
    return X;
}

AlbertVector AlbertVector::diag(const Field& fld, uint16_t a, uint16_t b, uint16_t c) {
    AlbertVector X(fld);
    X.x[0] = a;
    X.x[1] = b;
    X.x[2] = c;
    return X;
}

AlbertVector AlbertVector::basis(const Field& fld, int coord, uint16_t coeff) {
    AlbertVector X(fld);
    X.x[coord] = coeff;
    return X;
}

Octonion AlbertVector::oct_part(int base) const {
    Octonion o(*f);
    for (int i = 0; i < 8; ++i) o.c[i] = x[base + i];
    return o;
}

bool AlbertVector::is_zero() const {
    for (uint16_t v : x)
        if (v) return false;
    return true;
}

bool AlbertVector::operator==(const AlbertVector& o) const {
    check_same_field(*this, o);
    return x == o.x;
}

AlbertVector alb_add(const AlbertVector& X, const AlbertVector& Y) {
    check_same_field(X, Y);
    AlbertVector r(*X.f);
    for (int i = 0; i < 27; ++i) r.x[i] = X.f->add(X.x[i], Y.x[i]);
    return r;
}

AlbertVector alb_sub(const AlbertVector& X, const AlbertVector& Y) {
    check_same_field(X, Y);
    AlbertVector r(*X.f);
    for (int i = 0; i < 27; ++i) r.x[i] = X.f->sub(X.x[i], Y.x[i]);
    return r;
}

AlbertVector alb_neg(const AlbertVector& X) {
    AlbertVector r(*X.f);
    for (int i = 0; i < 27; ++i) r.x[i] = X.f->neg(X.x[i]);
    return r;
}

AlbertVector alb_scale(const AlbertVector& X, uint16_t lambda) {
    AlbertVector r(*X.f);
    for (int i = 0; i < 27; ++i) r.x[i] = X.f->mul(X.x[i], lambda);
    return r;
}

Fe alb_trace(const AlbertVector& X) {
    const Field& F = *X.f;
    return Fe(F.add(F.add(X.x[0], X.x[1]), X.x[2]), F);
}

Fe alb_Q(const AlbertVector& X) {
    const Field& F = *X.f;
    uint16_t n = F.add(F.add(oct_norm(X.A()).v, oct_norm(X.B()).v), oct_norm(X.C()).v);
    uint16_t s = F.add(F.add(F.mul(X.x[0], X.x[1]), F.mul(X.x[0], X.x[2])), F.mul(X.x[1], X.x[2]));
    return Fe(F.sub(n, s), F);
}

Fe alb_det(const AlbertVector& X) {
    const Field& F = *X.f;
    Octonion A = X.A(), B = X.B(), C = X.C();
    uint16_t d = F.mul(F.mul(X.x[0], X.x[1]), X.x[2]);
    d = F.sub(d, F.mul(X.x[0], oct_norm(A).v));
    d = F.sub(d, F.mul(X.x[1], oct_norm(B).v));
    d = F.sub(d, F.mul(X.x[2], oct_norm(C).v));
    d = F.add(d, oct_trace(oct_mul(oct_mul(A, B), C)).v);
    return Fe(d, F);
}

Fe trilinear_det(const AlbertVector& X, const AlbertVector& Y, const AlbertVector& Z) {
    check_same_field(X, Y);
    check_same_field(X, Z);
    const Field& F = *X.f;
    uint16_t t = alb_det(alb_add(alb_add(X, Y), Z)).v;
    t = F.sub(t, alb_det(alb_add(X, Y)).v);
    t = F.sub(t, alb_det(alb_add(X, Z)).v);
    t = F.sub(t, alb_det(alb_add(Y, Z)).v);
    t = F.add(t, alb_det(X).v);
    t = F.add(t, alb_det(Y).v);
    t = F.add(t, alb_det(Z).v);
    return Fe(t, F);
}

DetExpansion det_expand_at(const AlbertVector& W) {
    const Field& F = *W.f;
    DetExpansion out(F);
    // Every monomial of det is multilinear (no squares), so expanding
    // prod(W_v + x_v) over subsets of the variables is exact.
    const CubicPoly27& dp = det_poly(F);
    for (auto& [key, coeff] : dp.terms()) {
        auto vars = CubicPoly27::key_vars(key);
        int deg = CubicPoly27::key_degree(key);
        for (uint32_t mask = 0; mask < (1u << deg); ++mask) {
            uint16_t c = coeff;
            std::array<int, 3> mono{};
            int mdeg = 0;
            for (int i = 0; i < deg; ++i) {
                if (mask & (1u << i))
                    mono[mdeg++] = vars[i];
                else
                    c = F.mul(c, W.x[vars[i]]);
            }
            if (!c) continue;
            if (mdeg == 0)
                out.constant = F.add(out.constant, c);
            else if (mdeg == 1)
                out.linear[mono[0]] = F.add(out.linear[mono[0]], c);
            else if (mdeg == 2)
                out.quadratic.add_monomial(mono, 2, c);
            // mdeg == 3 is det itself; skip.
        }
    }
    return out;
}

std::array<uint16_t, 27> linear_form_at(const AlbertVector& W) {
    return det_expand_at(W).linear;
}

QuadForm quadratic_form_at(const AlbertVector& W) {
    const Field& F = *W.f;
    QuadForm qf(F);
    DetExpansion e = det_expand_at(W);
    qf.form = e.quadratic;
    for (auto& [key, coeff] : e.quadratic.terms()) {
        auto vars = CubicPoly27::key_vars(key);
        // polar(b_i, b_j) = coeff of x_i x_j for i != j; det has no square
        // monomials, so polar(b_i, b_i) = 2*Q(b_i) = 0 and diagonal values
        // Q_W(b_i) vanish identically.
        qf.polar[vars[0] * 27 + vars[1]] = coeff;
        qf.polar[vars[1] * 27 + vars[0]] = coeff;
    }
    for (int i = 0; i < 27; ++i) {
        std::array<uint16_t, 27> bi{};
        bi[i] = 1;
        qf.diagonal[i] = qf.form.evaluate(bi);
    }
    return qf;
}

bool is_white(const AlbertVector& W) {
    const Field& F = *W.f;
    Octonion A = W.A(), B = W.B(), C = W.C();
    uint16_t a = W.x[0], b = W.x[1], c = W.x[2];
    if (F.mul(b, c) != oct_norm(A).v) return false;
    if (F.mul(a, c) != oct_norm(B).v) return false;
    if (F.mul(a, b) != oct_norm(C).v) return false;
    if (!(oct_mul(B, C) == oct_scale(oct_conj(A), a))) return false;
    if (!(oct_mul(C, A) == oct_scale(oct_conj(B), b))) return false;
    if (!(oct_mul(A, B) == oct_scale(oct_conj(C), c))) return false;
    return true;
}

Color classify_color(const AlbertVector& W) {
    if (W.is_zero()) throw std::domain_error("albert: cannot classify the zero vector");
    if (is_white(W)) return Color::White;
    if (alb_det(W).v != 0) return Color::Black;
    return Color::Grey;
}

OctMatrix3 alb_to_matrix(const AlbertVector& X) {
    const Field& F = *X.f;
    OctMatrix3 M(F);
    Octonion A = X.A(), B = X.B(), C = X.C();
    M.at(0, 0) = Octonion::scalar(F, X.x[0]);
    M.at(1, 1) = Octonion::scalar(F, X.x[1]);
    M.at(2, 2) = Octonion::scalar(F, X.x[2]);
    M.at(1, 2) = A;
    M.at(2, 1) = oct_conj(A);
    M.at(2, 0) = B;
    M.at(0, 2) = oct_conj(B);
    M.at(0, 1) = C;
    M.at(1, 0) = oct_conj(C);
    return M;
}

AlbertVector alb_from_matrix(const OctMatrix3& M) {
    const Field& F = *M.f;
    for (int i = 0; i < 3; ++i)
        if (!oct_is_scalar(M.at(i, i)))
            throw std::domain_error("albert: matrix diagonal is not scalar");
    if (!(M.at(2, 1) == oct_conj(M.at(1, 2))) || !(M.at(0, 2) == oct_conj(M.at(2, 0))) ||
        !(M.at(1, 0) == oct_conj(M.at(0, 1))))
        throw std::domain_error("albert: matrix is not Hermitian");
    return AlbertVector::make(oct_as_scalar(M.at(0, 0)), oct_as_scalar(M.at(1, 1)),
                              oct_as_scalar(M.at(2, 2)), M.at(1, 2), M.at(2, 0), M.at(0, 1));
}

AlbertVector jordan_mul(const AlbertVector& X, const AlbertVector& Y) {
    check_same_field(X, Y);
    const Field& F = *X.f;
    if (F.p == 2) throw std::domain_error("albert: Jordan product undefined in characteristic 2");
    OctMatrix3 P = m3_add(m3_mul(alb_to_matrix(X), alb_to_matrix(Y)),
                          m3_mul(alb_to_matrix(Y), alb_to_matrix(X)));
    uint16_t half = F.inv(F.from_int(2));
    return alb_from_matrix(m3_scale(P, half));
}

AlbertVector cayley_hamilton_residual(const AlbertVector& X) {
    const Field& F = *X.f;
    AlbertVector X2 = jordan_mul(X, X);
    AlbertVector X3 = jordan_mul(X2, X);
    AlbertVector r = alb_sub(X3, alb_scale(X2, alb_trace(X).v));
    r = alb_sub(r, alb_scale(X, alb_Q(X).v));
    r = alb_sub(r, alb_scale(AlbertVector::identity(F), alb_det(X).v));
    return r;
}

// ---- Dickson translation ----

int dickson_z_index(int i, int j) {
    if (i > j) std::swap(i, j);
    // pairs (1,2),(1,3),...,(5,6) lex-ordered, 1-based
    int idx = 0;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            if (a == i && b == j) return 12 + idx;
            ++idx;
        }
    throw std::invalid_argument("dickson: bad z index");
}

const DicksonTranslation& dickson_translation() {
    static DicksonTranslation t = [] {
        DicksonTranslation d{};
        auto set = [&](int dickson_var, int albert_coord, int sign) {
            d.albert_coord[dickson_var] = albert_coord;
            d.sign[dickson_var] = sign;
        };
        // Albert coordinates: a=0, b=1, c=2, A_i = 3+i, B_i = 11+i, C_i = 19+i
        // with ordinals +0,+1,+w,+wb,-0,-1,-w,-wb = 0..7.
        const int A = 3, B = 11, C = 19;
        // x1..x6 = A_{-1}, B_{-1}, A_w, C_{-1}, C_w, B_w
        set(0, A + 5, +1);
        set(1, B + 5, +1);
        set(2, A + 2, +1);
        set(3, C + 5, +1);
        set(4, C + 2, +1);
        set(5, B + 2, +1);
        // y1..y6 = -A_{-w}, -B_{-w}, A_1, -C_{-w}, C_1, B_1
        set(6, A + 6, -1);
        set(7, B + 6, -1);
        set(8, A + 1, +1);
        set(9, C + 6, -1);
        set(10, C + 1, +1);
        set(11, B + 1, +1);
        // z_ij per the translation table (z_ij = -z_ji)
        set(dickson_z_index(1, 3), 0, +1);       // a = z13
        set(dickson_z_index(2, 6), 1, +1);       // b = z26
        set(dickson_z_index(4, 5), 2, +1);       // c = z45
        set(dickson_z_index(2, 5), A + 0, +1);   // A_0 = z25
        set(dickson_z_index(3, 4), B + 0, -1);   // B_0 = z43
        set(dickson_z_index(1, 6), C + 0, +1);   // C_0 = z16
        set(dickson_z_index(5, 6), A + 3, +1);   // A_wb = z56
        set(dickson_z_index(3, 5), B + 3, +1);   // B_wb = z35
        set(dickson_z_index(3, 6), C + 3, -1);   // C_wb = z63
        set(dickson_z_index(4, 6), A + 4, +1);   // A_{-0} = z46
        set(dickson_z_index(1, 5), B + 4, +1);   // B_{-0} = z15
        set(dickson_z_index(2, 3), C + 4, +1);   // C_{-0} = z23
        set(dickson_z_index(2, 4), A + 7, -1);   // A_{-wb} = z42
        set(dickson_z_index(1, 4), B + 7, +1);   // B_{-wb} = z14
        set(dickson_z_index(1, 2), C + 7, -1);   // C_{-wb} = z21
        return d;
    }();
    return t;
}

std::array<uint16_t, 27> dickson_translate(const AlbertVector& X) {
    const Field& F = *X.f;
    const DicksonTranslation& t = dickson_translation();
    std::array<uint16_t, 27> v{};
    for (int d = 0; d < 27; ++d) {
        uint16_t c = X.x[t.albert_coord[d]];
        v[d] = t.sign[d] > 0 ? c : F.neg(c);
    }
    return v;
}

namespace {

int permutation_parity(const std::array<int, 6>& perm) {
    int inv = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2;
}

// The 15 partitions of {1..6} into unordered pairs, each with the sign of
// the concatenation (pairs internally sorted, sorted by first element).
struct PairPartition {
    int p[3][2];
    int sign;  // +1 if the sorted concatenation is an even permutation
};

const std::vector<PairPartition>& pair_partitions() {
    static std::vector<PairPartition> parts = [] {
        std::vector<PairPartition> out;
        // 1 pairs with one of 5 others, then the least remaining pairs with
        // one of 3, rest forced.
        for (int a = 2; a <= 6; ++a) {
            std::vector<int> rest;
            for (int v = 2; v <= 6; ++v)
                if (v != a) rest.push_back(v);
            for (int bi = 1; bi < 4; ++bi) {
                int b0 = rest[0], b1 = rest[bi];
                std::vector<int> last;
                for (int v : rest)
                    if (v != b0 && v != b1) last.push_back(v);
                PairPartition pp{};
                pp.p[0][0] = 1;
                pp.p[0][1] = a;
                pp.p[1][0] = b0;
                pp.p[1][1] = b1;
                pp.p[2][0] = last[0];
                pp.p[2][1] = last[1];
                std::array<int, 6> concat = {pp.p[0][0], pp.p[0][1], pp.p[1][0],
                                             pp.p[1][1], pp.p[2][0], pp.p[2][1]};
                pp.sign = permutation_parity(concat) ? -1 : +1;
                out.push_back(pp);
            }
        }
        return out;
    }();
    return parts;
}

}  // namespace

Fe dickson_cubic(const std::array<uint16_t, 27>& vars, const Field& F) {
    uint16_t acc = 0;
    // sum_{i != j} x_i y_j z_ij, with z_ij = -z_ji for i > j
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            uint16_t z = vars[dickson_z_index(i, j)];
            uint16_t term = F.mul(F.mul(vars[i - 1], vars[6 + j - 1]), z);
            acc = i < j ? F.add(acc, term) : F.sub(acc, term);
        }
    for (const auto& pp : pair_partitions()) {
        uint16_t t = F.mul(F.mul(vars[dickson_z_index(pp.p[0][0], pp.p[0][1])],
                                 vars[dickson_z_index(pp.p[1][0], pp.p[1][1])]),
                           vars[dickson_z_index(pp.p[2][0], pp.p[2][1])]);
        acc = pp.sign > 0 ? F.add(acc, t) : F.sub(acc, t);
    }
    return Fe(acc, F);
}

CubicPoly27 det_poly(const Field& F) {
    CubicPoly27 p(F);
    const uint16_t one = 1, minus = F.neg(1);
    p.add_monomial({0, 1, 2}, 3, one);  // abc
    const int bases[3] = {3, 11, 19};
    for (int d = 0; d < 3; ++d)
        for (int i = 0; i < 4; ++i)  // -a * A_i A_{-i}, i in I
            p.add_monomial({d, bases[d] + i, bases[d] + i + 4}, 3, minus);
    // + sum Tr(e_i e_j e_k) A_i B_j C_k
    const OctBasisTable& t = oct_basis_table();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (!t.sign[i][j]) continue;
            int ij = t.idx[i][j];
            for (int k = 0; k < 8; ++k) {
                if (!t.sign[ij][k]) continue;
                int ijk = t.idx[ij][k];
                // Tr(e_ijk) nonzero only for ordinals +-0
                if (ijk != 0 && ijk != 4) continue;
                int s = t.sign[i][j] * t.sign[ij][k];
                p.add_monomial({3 + i, 11 + j, 19 + k}, 3, s > 0 ? one : minus);
            }
        }
    return p;
}

CubicPoly27 dickson_poly(const Field& F) {
    CubicPoly27 p(F);
    const uint16_t one = 1, minus = F.neg(1);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            p.add_monomial({i - 1, 6 + j - 1, dickson_z_index(i, j)}, 3,
                           i < j ? one : minus);
        }
    for (const auto& pp : pair_partitions())
        p.add_monomial({dickson_z_index(pp.p[0][0], pp.p[0][1]),
                        dickson_z_index(pp.p[1][0], pp.p[1][1]),
                        dickson_z_index(pp.p[2][0], pp.p[2][1])},
                       3, pp.sign > 0 ? one : minus);
    return p;
}

CubicPoly27 dickson_poly_in_albert_coords(const Field& F) {
    // Substitute the translation (a signed permutation matrix) into the
    // Dickson polynomial.
    const DicksonTranslation& t = dickson_translation();
    std::vector<uint16_t> M(27 * 27, 0);
    for (int d = 0; d < 27; ++d)
        M[static_cast<size_t>(d) * 27 + t.albert_coord[d]] = t.sign[d] > 0 ? 1 : F.neg(1);
    return dickson_poly(F).substitute(M);
}

}  // namespace af
