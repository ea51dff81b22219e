#pragma once
// 3x3 matrices with octonion entries.  A single matrix product only ever
// forms binary octonion products, so it is well defined for arbitrary
// entries; composing ACTIONS of such matrices is a different matter and is
// handled by the 27x27 representation in group.hpp.

#include <array>

#include "af/octonion.hpp"

namespace af {

struct OctMatrix3 {
    std::array<Octonion, 9> m;  // row-major
    const Field* f = nullptr;

    OctMatrix3() = default;
    explicit OctMatrix3(const Field& fld) : f(&fld) {
        for (auto& e : m) e = Octonion(fld);
    }

    Octonion& at(int r, int c) { return m[r * 3 + c]; }
    const Octonion& at(int r, int c) const { return m[r * 3 + c]; }

    static OctMatrix3 identity(const Field& fld);
};

OctMatrix3 m3_mul(const OctMatrix3& x, const OctMatrix3& y);
OctMatrix3 m3_add(const OctMatrix3& x, const OctMatrix3& y);
OctMatrix3 m3_conj_transpose(const OctMatrix3& x);           // entrywise conj, then transpose
OctMatrix3 m3_dagger(const OctMatrix3& x);                   // conj_q applied to conj-transpose
OctMatrix3 m3_scale(const OctMatrix3& x, uint16_t lambda);
bool m3_equal(const OctMatrix3& x, const OctMatrix3& y);
bool m3_is_identity(const OctMatrix3& x);

}  // namespace af
