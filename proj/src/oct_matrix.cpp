#include "af/oct_matrix.hpp"

#include <stdexcept>

namespace af {

OctMatrix3 OctMatrix3::identity(const Field& fld) {
    OctMatrix3 r(fld);
    for (int i = 0; i < 3; ++i) r.at(i, i) = Octonion::one(fld);
    return r;
}

OctMatrix3 m3_mul(const OctMatrix3& x, const OctMatrix3& y) {
    if (x.f != y.f) throw std::domain_error("oct_matrix: mismatched field specs");
    OctMatrix3 r(*x.f);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Octonion acc(*x.f);
            for (int k = 0; k < 3; ++k)
                acc = oct_add(acc, oct_mul(x.at(i, k), y.at(k, j)));
            r.at(i, j) = acc;
        }
    return r;
}

OctMatrix3 m3_add(const OctMatrix3& x, const OctMatrix3& y) {
    if (x.f != y.f) throw std::domain_error("oct_matrix: mismatched field specs");
    OctMatrix3 r(*x.f);
    for (int i = 0; i < 9; ++i) r.m[i] = oct_add(x.m[i], y.m[i]);
    return r;
}

OctMatrix3 m3_conj_transpose(const OctMatrix3& x) {
    OctMatrix3 r(*x.f);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r.at(i, j) = oct_conj(x.at(j, i));
    return r;
}

OctMatrix3 m3_dagger(const OctMatrix3& x) {
    OctMatrix3 r = m3_conj_transpose(x);
    for (auto& e : r.m) e = oct_prime(e);
    return r;
}

OctMatrix3 m3_scale(const OctMatrix3& x, uint16_t lambda) {
    OctMatrix3 r(*x.f);
    for (int i = 0; i < 9; ++i) r.m[i] = oct_scale(x.m[i], lambda);
    return r;
}

bool m3_equal(const OctMatrix3& x, const OctMatrix3& y) {
    for (int i = 0; i < 9; ++i)
        if (!(x.m[i] == y.m[i])) return false;
    return true;
}

bool m3_is_identity(const OctMatrix3& x) { return m3_equal(x, OctMatrix3::identity(*x.f)); }

}  // namespace af
