#pragma once
// The 27-dimensional space of 3x3 Hermitian octonion matrices
// (a,b,c | A,B,C), its trace / quadratic / determinant forms, division-free
// polarizations, the white/grey/black rank classification, the Jordan
// product in odd characteristic, and the translation to Dickson's cubic
// form in 27 variables.
//
// Canonical coordinate order: a, b, c, then A, B, C, each octonion in the
// ordinal order of octonion.hpp.  Index 0..2 = a,b,c; 3..10 = A;
// 11..18 = B; 19..26 = C.

#include <array>
#include <cstdint>
#include <vector>

#include "af/cubic27.hpp"
#include "af/gf.hpp"
#include "af/oct_matrix.hpp"
#include "af/octonion.hpp"

namespace af {

enum class Color { White, Grey, Black };
const char* color_name(Color c);

struct AlbertVector {
    std::array<uint16_t, 27> x{};
    const Field* f = nullptr;

    AlbertVector() = default;
    explicit AlbertVector(const Field& fld) : f(&fld) { x.fill(0); }

    static AlbertVector make(Fe a, Fe b, Fe c, const Octonion& A, const Octonion& B,
                             const Octonion& C);
    static AlbertVector diag(const Field& fld, uint16_t a, uint16_t b, uint16_t c);
    static AlbertVector basis(const Field& fld, int coord, uint16_t coeff = 1);
    static AlbertVector identity(const Field& fld) { return diag(fld, 1, 1, 1); }

    Fe a() const { return Fe(x[0], *f); }
    Fe b() const { return Fe(x[1], *f); }
    Fe c() const { return Fe(x[2], *f); }
    Octonion A() const { return oct_part(3); }
    Octonion B() const { return oct_part(11); }
    Octonion C() const { return oct_part(19); }

    bool is_zero() const;
    bool operator==(const AlbertVector& o) const;
    bool operator!=(const AlbertVector& o) const { return !(*this == o); }

private:
    Octonion oct_part(int base) const;
};

AlbertVector alb_add(const AlbertVector& X, const AlbertVector& Y);
AlbertVector alb_sub(const AlbertVector& X, const AlbertVector& Y);
AlbertVector alb_neg(const AlbertVector& X);
AlbertVector alb_scale(const AlbertVector& X, uint16_t lambda);

Fe alb_trace(const AlbertVector& X);  // a + b + c
Fe alb_Q(const AlbertVector& X);      // AA~ + BB~ + CC~ - ab - ac - bc
Fe alb_det(const AlbertVector& X);    // abc - aAA~ - bBB~ - cCC~ + Tr(ABC)

/// Full division-free polarization of det:
/// t(X,Y,Z) = f(X+Y+Z) - f(X+Y) - f(X+Z) - f(Y+Z) + f(X) + f(Y) + f(Z).
/// Symmetric, valid in every characteristic; t(X,X,X) = 6 det(X).
Fe trilinear_det(const AlbertVector& X, const AlbertVector& Y, const AlbertVector& Z);

/// det(W + X) split into homogeneous parts in X; the cubic part is det
/// itself and is not repeated here.
struct DetExpansion {
    uint16_t constant = 0;              // det(W)
    std::array<uint16_t, 27> linear{};  // coefficients of x_i
    CubicPoly27 quadratic;              // the degree-2 part (no square monomials occur)
    explicit DetExpansion(const Field& f) : quadratic(f) {}
};
DetExpansion det_expand_at(const AlbertVector& W);

/// Coefficients of the linear part of det(W+X); identically zero iff W is white.
std::array<uint16_t, 27> linear_form_at(const AlbertVector& W);

/// Quadratic part of det(W+X) as polar form + evaluable form.  In
/// characteristic 2 the form is not recoverable from its polar, so both are
/// returned; diagonal holds Q_W(basis vector) for each coordinate.
struct QuadForm {
    std::vector<uint16_t> polar;        // 27x27, row-major, symmetric
    std::array<uint16_t, 27> diagonal{};
    CubicPoly27 form;                   // degree-2 polynomial, for evaluation
    const Field* f;
    explicit QuadForm(const Field& fld) : polar(27 * 27, 0), form(fld), f(&fld) {}
    uint16_t value(const std::array<uint16_t, 27>& v) const { return form.evaluate(v); }
};
QuadForm quadratic_form_at(const AlbertVector& W);

/// White test via the six equations bc=AA~, ac=BB~, ab=CC~, BC=aA~,
/// CA=bB~, AB=cC~ (equivalent to linear_form_at(W) == 0).
bool is_white(const AlbertVector& W);
/// Classification of a nonzero vector; throws on zero input.
Color classify_color(const AlbertVector& W);

/// Hermitian 3x3 matrix form of X.
OctMatrix3 alb_to_matrix(const AlbertVector& X);
/// Inverse of alb_to_matrix; throws if M is not Hermitian with scalar diagonal.
AlbertVector alb_from_matrix(const OctMatrix3& M);

/// Jordan product (XY + YX)/2; characteristic 2 is rejected.
AlbertVector jordan_mul(const AlbertVector& X, const AlbertVector& Y);
/// X^3 - Tr(X) X^2 - Q(X) X - det(X) I with X^2 = XoX, X^3 = X^2 o X.
AlbertVector cayley_hamilton_residual(const AlbertVector& X);

// ---- Dickson's 27-variable cubic form ----
//
// Dickson variable order: x1..x6 (0..5), y1..y6 (6..11), then z_ij for the
// 15 pairs (1,2),(1,3),...,(5,6) in lexicographic order (12..26).

/// Index of z_ij (1-based i<j) in the Dickson variable order.
int dickson_z_index(int i, int j);

/// The signed coordinate permutation from Albert coordinates to Dickson
/// variables: dickson[v] = sign[v] * albert[perm[v]].
struct DicksonTranslation {
    std::array<int, 27> albert_coord;  // source Albert coordinate per Dickson variable
    std::array<int, 27> sign;          // +1 or -1
};
const DicksonTranslation& dickson_translation();

/// Apply the translation table to a vector.
std::array<uint16_t, 27> dickson_translate(const AlbertVector& X);

/// Dickson's cubic form: sum_{i != j} x_i y_j z_ij + sum over the 15 pair
/// partitions of {1..6} with the even-permutation sign convention.
Fe dickson_cubic(const std::array<uint16_t, 27>& vars, const Field& f);

/// det as a sparse polynomial in the 27 Albert coordinates (45 terms).
CubicPoly27 det_poly(const Field& f);
/// Dickson's cubic form as a sparse polynomial in the 27 Dickson variables.
CubicPoly27 dickson_poly(const Field& f);
/// Dickson's form composed with the translation, as a polynomial in Albert
/// coordinates; det_poly + this must be the zero polynomial.
CubicPoly27 dickson_poly_in_albert_coords(const Field& f);

}  // namespace af
