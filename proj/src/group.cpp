#include "af/group.hpp"

#include <stdexcept>

#include "af/gf_linalg.hpp"

namespace af {

LinearOp27::LinearOp27(std::vector<uint16_t> mat, const Field& fld) : m(std::move(mat)), f(&fld) {
    if (m.size() != 27 * 27) throw std::invalid_argument("group: operator must be 27x27");
    GfMatrix g(27, 27, fld);
    g.a = m;
    if (gf_rank(g) != 27) throw std::domain_error("group: operator is singular");
}

LinearOp27 LinearOp27::identity(const Field& fld) { return scalar(fld, 1); }

LinearOp27 LinearOp27::scalar(const Field& fld, uint16_t lambda) {
    std::vector<uint16_t> m(27 * 27, 0);
    for (int i = 0; i < 27; ++i) m[static_cast<size_t>(i) * 27 + i] = lambda;
    return LinearOp27(std::move(m), fld);
}

AlbertVector LinearOp27::apply(const AlbertVector& X) const {
    if (X.f != f) throw std::domain_error("group: mismatched field specs");
    AlbertVector r(*f);
    for (int i = 0; i < 27; ++i) {
        uint16_t acc = 0;
        const uint16_t* row = m.data() + static_cast<size_t>(i) * 27;
        for (int j = 0; j < 27; ++j)
            if (row[j] && X.x[j]) acc = f->add(acc, f->mul(row[j], X.x[j]));
        r.x[i] = acc;
    }
    return r;
}

LinearOp27 LinearOp27::compose(const LinearOp27& other) const {
    if (other.f != f) throw std::domain_error("group: mismatched field specs");
    std::vector<uint16_t> r(27 * 27, 0);
    for (int i = 0; i < 27; ++i)
        for (int k = 0; k < 27; ++k) {
            uint16_t v = at(i, k);
            if (!v) continue;
            const uint16_t* row = other.m.data() + static_cast<size_t>(k) * 27;
            uint16_t* out = r.data() + static_cast<size_t>(i) * 27;
            for (int j = 0; j < 27; ++j)
                if (row[j]) out[j] = f->add(out[j], f->mul(v, row[j]));
        }
    return LinearOp27(std::move(r), *f);
}

LinearOp27 LinearOp27::inverse() const {
    GfMatrix g(27, 27, *f);
    g.a = m;
    GfMatrix inv;
    if (!gf_invert(g, inv)) throw std::domain_error("group: operator is singular");
    return LinearOp27(std::move(inv.a), *f);
}

bool LinearOp27::operator==(const LinearOp27& o) const {
    if (f != o.f) throw std::domain_error("group: mismatched field specs");
    return m == o.m;
}

bool entries_in_two_dim_subalgebra(const OctMatrix3& M) {
    // dim span({1} U entries) <= 2.  Closure under products is automatic:
    // every octonion satisfies w^2 = Tr(w) w - N(w).
    GfMatrix g(10, 8, *M.f);
    Octonion one = Octonion::one(*M.f);
    for (int c = 0; c < 8; ++c) g.at(0, c) = one.c[c];
    for (int e = 0; e < 9; ++e)
        for (int c = 0; c < 8; ++c) g.at(1 + e, c) = M.m[e].c[c];
    return gf_rank(g) <= 2;
}

LinearOp27 op_from_matrix(const OctMatrix3& M) {
    if (!entries_in_two_dim_subalgebra(M))
        throw std::domain_error(
            "group: matrix entries do not lie in a 2-dimensional subalgebra; the action is "
            "ill-defined");
    const Field& F = *M.f;
    OctMatrix3 Mct = m3_conj_transpose(M);
    std::vector<uint16_t> op(27 * 27, 0);
    for (int j = 0; j < 27; ++j) {
        AlbertVector bj = AlbertVector::basis(F, j);
        AlbertVector img = alb_from_matrix(m3_mul(m3_mul(Mct, alb_to_matrix(bj)), M));
        for (int i = 0; i < 27; ++i) op[static_cast<size_t>(i) * 27 + j] = img.x[i];
    }
    return LinearOp27(std::move(op), F);
}

LinearOp27 dual_op(const OctMatrix3& M) {
    // op(conj(M)^T) is X -> M X conj(M)^T, so its inverse is the dual action.
    return op_from_matrix(m3_conj_transpose(M)).inverse();
}

bool duality_fixed(const OctMatrix3& M) {
    bool fixed = op_from_matrix(M) == dual_op(M);
    // Equivalent matrix-level condition.
    if (fixed != m3_is_identity(m3_mul(m3_conj_transpose(M), M)))
        throw std::logic_error("group: duality_fixed disagrees with conj(M)^T M = I");
    return fixed;
}

bool preserves_det(const LinearOp27& op) {
    const CubicPoly27& dp = det_poly(*op.f);
    return dp.substitute(op.m) == dp;
}

bool fixes_identity(const LinearOp27& op) {
    AlbertVector I = AlbertVector::identity(*op.f);
    return op.apply(I) == I;
}

// ---- Generators ----

const char* gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::Transvection: return "transvection";
        case GenKind::CyclicPerm: return "cyclic_perm";
        case GenKind::SwapPerm: return "swap_perm";
        case GenKind::Diagonal: return "diagonal";
        case GenKind::F4Rotation: return "f4_rotation";
        case GenKind::TwistedTransvection: return "twisted_transvection";
        case GenKind::TwistedDiagonal: return "twisted_diagonal";
        case GenKind::TwistedBlock: return "twisted_block";
    }
    return "?";
}

void pair_coords(int pair, int& i, int& j) {
    switch (pair) {
        case 0: i = 0; j = 1; return;
        case 1: i = 1; j = 2; return;
        case 2: i = 0; j = 2; return;
    }
    throw std::invalid_argument("group: pair index must be 0, 1 or 2");
}

Generator Generator::transvection(int row, int col, const Octonion& x) {
    if (row < 0 || row > 2 || col < 0 || col > 2 || row == col)
        throw std::invalid_argument("group: transvection position must be off-diagonal");
    Generator g;
    g.kind = GenKind::Transvection;
    g.f = x.f;
    g.row = row;
    g.col = col;
    g.x = x;
    return g;
}

Generator Generator::cyclic_perm(const Field& f) {
    Generator g;
    g.kind = GenKind::CyclicPerm;
    g.f = &f;
    return g;
}

Generator Generator::swap_perm(const Field& f) {
    Generator g;
    g.kind = GenKind::SwapPerm;
    g.f = &f;
    return g;
}

Generator Generator::diagonal(const Octonion& u, int slot) {
    if (oct_norm(u).v != 1) throw std::invalid_argument("group: diagonal requires N(u) = 1");
    if (slot < 0 || slot > 2) throw std::invalid_argument("group: diagonal slot must be 0, 1 or 2");
    Generator g;
    g.kind = GenKind::Diagonal;
    g.f = u.f;
    g.x = u;
    g.slot = slot;
    return g;
}

Generator Generator::f4_rotation(int pair, const Octonion& x) {
    int i, j;
    pair_coords(pair, i, j);
    if (oct_norm(x).v != 0) throw std::invalid_argument("group: F4 rotation requires N(x) = 0");
    Generator g;
    g.kind = GenKind::F4Rotation;
    g.f = x.f;
    g.pair = pair;
    g.x = x;
    return g;
}

Generator Generator::twisted_transvection(int pair, int eidx, uint16_t lambda, const Field& f) {
    int i, j;
    pair_coords(pair, i, j);
    if (!f.is_quadratic())
        throw std::invalid_argument("group: twisted generator requires a quadratic extension field");
    if (eidx < 0 || eidx > 7) throw std::invalid_argument("group: bad basis ordinal");
    Generator g;
    g.kind = GenKind::TwistedTransvection;
    g.f = &f;
    g.pair = pair;
    g.eidx = eidx;
    g.lambda = lambda;
    return g;
}

Generator Generator::twisted_diagonal(uint16_t a, const Field& f) {
    if (!f.is_quadratic())
        throw std::invalid_argument("group: twisted generator requires a quadratic extension field");
    if (a == 0 || f.mul(a, f.conjq(a)) != 1)
        throw std::invalid_argument("group: twisted diagonal requires a^(1+q) = 1");
    Generator g;
    g.kind = GenKind::TwistedDiagonal;
    g.f = &f;
    g.sa = a;
    return g;
}

Generator Generator::twisted_block(int pair, uint16_t a, uint16_t b, const Field& f) {
    int i, j;
    pair_coords(pair, i, j);
    if (!f.is_quadratic())
        throw std::invalid_argument("group: twisted generator requires a quadratic extension field");
    uint16_t norm = f.add(f.mul(a, f.conjq(a)), f.mul(b, f.conjq(b)));
    if (norm != 1)
        throw std::invalid_argument("group: twisted block requires a^(1+q) + b^(1+q) = 1");
    Generator g;
    g.kind = GenKind::TwistedBlock;
    g.f = &f;
    g.pair = pair;
    g.sa = a;
    g.sb = b;
    return g;
}

OctMatrix3 Generator::matrix() const {
    const Field& F = *f;
    OctMatrix3 M = OctMatrix3::identity(F);
    switch (kind) {
        case GenKind::Transvection:
            M.at(row, col) = x;
            return M;
        case GenKind::CyclicPerm: {
            OctMatrix3 P(F);
            P.at(0, 1) = Octonion::one(F);
            P.at(1, 2) = Octonion::one(F);
            P.at(2, 0) = Octonion::one(F);
            return P;
        }
        case GenKind::SwapPerm: {
            OctMatrix3 P(F);
            P.at(0, 0) = Octonion::one(F);
            P.at(1, 2) = Octonion::one(F);
            P.at(2, 1) = Octonion::one(F);
            return P;
        }
        case GenKind::Diagonal: {
            // slot = position of the 1; the other two hold u and conj(u)
            // in cyclic order (slot+1, slot+2).
            OctMatrix3 D(F);
            int s1 = (slot + 1) % 3, s2 = (slot + 2) % 3;
            D.at(slot, slot) = Octonion::one(F);
            D.at(s1, s1) = x;
            D.at(s2, s2) = oct_conj(x);
            return D;
        }
        case GenKind::F4Rotation: {
            int i, j;
            pair_coords(pair, i, j);
            M.at(i, j) = x;
            M.at(j, i) = oct_neg(oct_conj(x));
            return M;
        }
        case GenKind::TwistedTransvection: {
            int i, j;
            pair_coords(pair, i, j);
            Octonion xx = Octonion::basis(F, eidx, lambda);
            M.at(i, j) = xx;
            M.at(j, i) = oct_neg(oct_prime(oct_conj(xx)));
            return M;
        }
        case GenKind::TwistedDiagonal: {
            OctMatrix3 D(F);
            D.at(0, 0) = Octonion::scalar(F, sa);
            D.at(1, 1) = Octonion::scalar(F, F.conjq(sa));
            D.at(2, 2) = Octonion::one(F);
            return D;
        }
        case GenKind::TwistedBlock: {
            int i, j;
            pair_coords(pair, i, j);
            M.at(i, i) = Octonion::scalar(F, sa);
            M.at(i, j) = Octonion::scalar(F, sb);
            M.at(j, i) = Octonion::scalar(F, F.neg(F.conjq(sb)));
            M.at(j, j) = Octonion::scalar(F, F.conjq(sa));
            return M;
        }
    }
    throw std::logic_error("group: unknown generator kind");
}

std::string Generator::describe() const {
    std::string s = gen_kind_name(kind);
    switch (kind) {
        case GenKind::Transvection:
            s += " pos(" + std::to_string(row) + "," + std::to_string(col) + ")";
            break;
        case GenKind::Diagonal:
            s += " slot " + std::to_string(slot);
            break;
        case GenKind::F4Rotation:
        case GenKind::TwistedTransvection:
        case GenKind::TwistedBlock:
            s += " pair " + std::to_string(pair);
            break;
        default:
            break;
    }
    if (kind == GenKind::TwistedTransvection)
        s += std::string(" x = ") + f->element_str(lambda) + "*e(" + oct_index::symbol(eidx) + ")";
    return s;
}

// ---- Hermitian forms ----

Fe hermitian_form(const AlbertVector& X, HermitianVariant v) {
    return sesquilinear(X, X, v);
}

Fe sesquilinear(const AlbertVector& X, const AlbertVector& Y, HermitianVariant variant) {
    if (X.f != Y.f) throw std::domain_error("group: mismatched field specs");
    const Field& F = *X.f;
    if (!F.is_quadratic())
        throw std::domain_error("group: Hermitian forms require a quadratic extension field");
    uint16_t acc = 0;
    for (int s = 0; s < 3; ++s) acc = F.add(acc, F.mul(X.x[s], F.conjq(Y.x[s])));
    const int bases[3] = {3, 11, 19};
    for (int base : bases)
        for (int o = 0; o < 8; ++o) {
            int mate = variant == HermitianVariant::H1 ? oct_index::negate(o) : o;
            acc = F.add(acc, F.mul(X.x[base + o], F.conjq(Y.x[base + mate])));
        }
    return Fe(acc, F);
}

bool is_twisted_unitary(const OctMatrix3& M) {
    if (!M.f->is_quadratic())
        throw std::domain_error("group: twisted unitarity requires a quadratic extension field");
    if (!entries_in_two_dim_subalgebra(M))
        throw std::domain_error(
            "group: matrix entries do not lie in a 2-dimensional subalgebra; the action is "
            "ill-defined");
    return m3_is_identity(m3_mul(m3_dagger(M), M));
}

bool preserves_h1(const LinearOp27& op) {
    const Field& F = *op.f;
    std::array<AlbertVector, 27> img;
    for (int i = 0; i < 27; ++i) img[i] = op.apply(AlbertVector::basis(F, i));
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j) {
            Fe lhs = sesquilinear(img[i], img[j], HermitianVariant::H1);
            Fe rhs = sesquilinear(AlbertVector::basis(F, i), AlbertVector::basis(F, j),
                                  HermitianVariant::H1);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace af
