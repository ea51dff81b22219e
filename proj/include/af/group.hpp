#pragma once
// Group elements as explicit invertible linear operators on the 27-space.
//
// Group elements are stored exclusively as 27x27 matrices: 3x3 octonion
// matrices are construction-time inputs only, because octonion
// non-associativity makes general 3x3 composition ill-defined.  A matrix M
// acts by X -> conj(M)^T X M, which is well defined when all entries of M
// lie in a common two-dimensional subalgebra F*1 + F*w (every such
// subalgebra is commutative and associative: w^2 = Tr(w) w - N(w)).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "af/albert.hpp"
#include "af/cubic27.hpp"
#include "af/gf.hpp"
#include "af/oct_matrix.hpp"

namespace af {

struct LinearOp27 {
    std::vector<uint16_t> m;  // 27x27 row-major codes
    const Field* f = nullptr;

    LinearOp27() = default;
    /// Checks invertibility; throws std::domain_error when singular.
    LinearOp27(std::vector<uint16_t> mat, const Field& fld);

    static LinearOp27 identity(const Field& fld);
    static LinearOp27 scalar(const Field& fld, uint16_t lambda);

    uint16_t at(int r, int c) const { return m[static_cast<size_t>(r) * 27 + c]; }

    AlbertVector apply(const AlbertVector& X) const;
    LinearOp27 compose(const LinearOp27& other) const;  // this after other: X -> this(other(X))
    LinearOp27 inverse() const;

    bool operator==(const LinearOp27& o) const;
    bool operator!=(const LinearOp27& o) const { return !(*this == o); }
};

/// Does every entry of M lie in a common subalgebra F*1 + F*w?
bool entries_in_two_dim_subalgebra(const OctMatrix3& M);

/// The 27x27 matrix of X -> conj(M)^T X M; throws when the entries are not
/// confined to a two-dimensional subalgebra or the result is singular.
LinearOp27 op_from_matrix(const OctMatrix3& M);

/// Dual action X -> M^{-1} X (conj(M)^T)^{-1}, as a 27x27 operator.
LinearOp27 dual_op(const OctMatrix3& M);
/// op_from_matrix(M) == dual_op(M), equivalently conj(M)^T M = I.
bool duality_fixed(const OctMatrix3& M);

/// Exact certificate: det(op(X)) = det(X) as sparse polynomials.
bool preserves_det(const LinearOp27& op);
/// op fixes (1,1,1|0,0,0).
bool fixes_identity(const LinearOp27& op);

// ---- Generator kinds ----

enum class GenKind {
    Transvection,          // I + x E_{rc}, one off-diagonal octonion entry
    CyclicPerm,            // (a,b,c|A,B,C) -> (c,a,b|C,A,B)
    SwapPerm,              // (a,b,c|A,B,C) -> (a,c,b|A~,C~,B~)
    Diagonal,              // diag(u, u~, 1) up to slot rotation, N(u) = 1
    F4Rotation,            // 2x2 block [[1, x], [-x~, 1]], N(x) = 0
    TwistedTransvection,   // 2x2 block [[1, x], [-x~', 1]], x = lambda e_i over GF(q^2)
    TwistedDiagonal,       // diag(a, a^q, 1), a^{1+q} = 1
    TwistedBlock,          // 2x2 scalar block [[a, b], [-b^q, a^q]], a^{1+q}+b^{1+q} = 1
};

const char* gen_kind_name(GenKind k);

/// A validated generator descriptor; build the operator with op().
struct Generator {
    GenKind kind;
    const Field* f = nullptr;
    int row = 0, col = 0;   // Transvection position
    int pair = 0;           // block index: 0 = coords (1,2), 1 = (2,3), 2 = (1,3)
    int slot = 0;           // Diagonal: position of the fixed 1
    Octonion x;             // octonion parameter (Transvection, F4Rotation)
    int eidx = 0;           // TwistedTransvection basis ordinal
    uint16_t lambda = 0;    // TwistedTransvection coefficient
    uint16_t sa = 0, sb = 0;  // scalar parameters of the twisted torus kinds

    static Generator transvection(int row, int col, const Octonion& x);
    static Generator cyclic_perm(const Field& f);
    static Generator swap_perm(const Field& f);
    static Generator diagonal(const Octonion& u, int slot);
    static Generator f4_rotation(int pair, const Octonion& x);
    static Generator twisted_transvection(int pair, int eidx, uint16_t lambda, const Field& f);
    static Generator twisted_diagonal(uint16_t a, const Field& f);
    static Generator twisted_block(int pair, uint16_t a, uint16_t b, const Field& f);

    OctMatrix3 matrix() const;
    LinearOp27 op() const { return op_from_matrix(matrix()); }
    std::string describe() const;
};

/// Rows/cols (0-based) of the 2x2 block for a pair index.
void pair_coords(int pair, int& i, int& j);

// ---- Hermitian forms over GF(q^2) ----

enum class HermitianVariant { H1, Aschbacher };

/// H1(X) = aa' + bb' + cc' + Tr(AA~' + BB~' + CC~'); the Aschbacher variant
/// makes all 27 canonical coordinates orthonormal.
Fe hermitian_form(const AlbertVector& X, HermitianVariant v);
/// Sesquilinear pairing with sesquilinear(X,X) = hermitian_form(X); linear
/// in X, twisted by x -> x^q in Y.
Fe sesquilinear(const AlbertVector& X, const AlbertVector& Y, HermitianVariant v);

/// conj(M)'^T M = I, i.e. M dagger M = I with the entrywise Frobenius.
bool is_twisted_unitary(const OctMatrix3& M);

/// sesquilinear(op bi, op bj) == sesquilinear(bi, bj) on all 27x27 basis
/// pairs (exact, since the pairing is sesquilinear).
bool preserves_h1(const LinearOp27& op);

}  // namespace af
