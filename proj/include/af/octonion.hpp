#pragma once
// The split octonion algebra over a small finite field.
//
// Basis {e_i : i in +-I}, I = {0, 1, w, wb}, in the fixed ordinal order
// (+0, +1, +w, +wb, -0, -1, -w, -wb) = ordinals 0..7.  The multiplication
// table is generated from the three defining relations
//     e_1 e_w = -e_w e_1 = e_{-wb},
//     e_1 e_0 = e_{-0} e_1 = e_1,
//     e_{-1} e_1 = -e_0,  e_0 e_0 = e_0,
// closed under negating all suffices and under multiplying all suffices by
// w; every unlisted basis product is zero.  e_0 + e_{-0} is the identity.

#include <array>
#include <cstdint>
#include <functional>

#include "af/gf.hpp"

namespace af {

namespace oct_index {

constexpr int count = 8;

/// ordinal <-> ordinal of the negated suffix (+i <-> -i).
constexpr int negate(int o) { return (o + 4) % 8; }

/// ordinal of the suffix multiplied by w (0->0, 1->w->wb->1 on both signs).
constexpr int times_w(int o) {
    constexpr int map[8] = {0, 2, 3, 1, 4, 6, 7, 5};
    return map[o];
}

const char* symbol(int o);  // "+0", "+1", "+w", "+wb", "-0", ...

}  // namespace oct_index

/// Basis product e_i e_j = sign * e_idx (sign 0 means the product is zero).
struct OctBasisTable {
    int8_t sign[8][8];
    int8_t idx[8][8];
};

/// The generated table (built once, from the defining relations).
const OctBasisTable& oct_basis_table();

struct Octonion {
    std::array<uint16_t, 8> c{};  // coefficient codes in ordinal order
    const Field* f = nullptr;

    Octonion() = default;
    explicit Octonion(const Field& fld) : f(&fld) { c.fill(0); }

    static Octonion basis(const Field& fld, int ordinal, uint16_t coeff = 1);
    /// lambda * (e_0 + e_{-0}), the scalar embedding.
    static Octonion scalar(const Field& fld, uint16_t lambda);
    static Octonion one(const Field& fld) { return scalar(fld, 1); }

    bool is_zero() const;
    bool operator==(const Octonion& o) const;
    bool operator!=(const Octonion& o) const { return !(*this == o); }

    Fe coeff(int ordinal) const { return Fe(c[ordinal], *f); }
};

Octonion oct_add(const Octonion& x, const Octonion& y);
Octonion oct_sub(const Octonion& x, const Octonion& y);
Octonion oct_neg(const Octonion& x);
Octonion oct_scale(const Octonion& x, uint16_t lambda);
Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);

Fe oct_trace(const Octonion& x);  // lambda_0 + lambda_{-0}
Fe oct_norm(const Octonion& x);   // sum_{i in I} lambda_i lambda_{-i}
Fe oct_bilinear(const Octonion& x, const Octonion& y);  // N(x+y)-N(x)-N(y)

/// Coefficientwise x -> x^q over GF(q^2).
Octonion oct_prime(const Octonion& x);
/// oct_conj of oct_prime (the twisted duality on octonions).
Octonion oct_star(const Octonion& x);

/// Is the scalar part the whole of x, i.e. x = lambda*(e_0+e_{-0})?
bool oct_is_scalar(const Octonion& x);
/// The scalar lambda with x = lambda*1; precondition oct_is_scalar(x).
Fe oct_as_scalar(const Octonion& x);

/// Visits every nonzero isotropic octonion (norm 0) exactly once, by
/// choosing the coefficients on +I and solving the norm constraint for the
/// -I coefficients.  Returns the number of visits, (q^4-1)(q^3+1).
uint64_t enumerate_isotropic(const Field& f, const std::function<void(const Octonion&)>& visit);

/// Count only (no visits).
uint64_t count_isotropic(const Field& f);

}  // namespace af
