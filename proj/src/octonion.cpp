#include "af/octonion.hpp"

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace af {

namespace oct_index {
const char* symbol(int o) {
    static const char* names[8] = {"+0", "+1", "+w", "+wb", "-0", "-1", "-w", "-wb"};
    return names[o];
}
}  // namespace oct_index

namespace {

struct Rule {
    int i, j;    // left/right ordinals
    int sign;    // +1 or -1
    int k;       // result ordinal
};

OctBasisTable generate_table() {
    using oct_index::negate;
    using oct_index::times_w;

    OctBasisTable t;
    std::memset(t.sign, 0, sizeof(t.sign));
    std::memset(t.idx, 0, sizeof(t.idx));

    // Ordinals: +0=0, +1=1, +w=2, +wb=3, -0=4, -1=5, -w=6, -wb=7.
    const Rule seeds[] = {
        {1, 2, +1, 7},  // e_1 e_w = e_{-wb}
        {2, 1, -1, 7},  // e_w e_1 = -e_{-wb}
        {1, 0, +1, 1},  // e_1 e_0 = e_1
        {4, 1, +1, 1},  // e_{-0} e_1 = e_1
        {5, 1, -1, 0},  // e_{-1} e_1 = -e_0
        {0, 0, +1, 0},  // e_0 e_0 = e_0
    };

    // Closure under the two symmetries; conflicting assignments would be a
    // generation bug, so they throw.
    std::vector<Rule> work(std::begin(seeds), std::end(seeds));
    auto assign = [&](const Rule& r) {
        if (t.sign[r.i][r.j] == 0) {
            t.sign[r.i][r.j] = static_cast<int8_t>(r.sign);
            t.idx[r.i][r.j] = static_cast<int8_t>(r.k);
            return true;
        }
        if (t.sign[r.i][r.j] != r.sign || t.idx[r.i][r.j] != r.k)
            throw std::logic_error("octonion: inconsistent multiplication table closure");
        return false;
    };
    while (!work.empty()) {
        Rule r = work.back();
        work.pop_back();
        if (!assign(r)) continue;
        work.push_back({negate(r.i), negate(r.j), r.sign, negate(r.k)});
        work.push_back({times_w(r.i), times_w(r.j), r.sign, times_w(r.k)});
    }
    return t;
}

void check_same_field(const Octonion& x, const Octonion& y) {
    if (x.f != y.f) throw std::domain_error("octonion: mismatched field specs");
}

}  // namespace

const OctBasisTable& oct_basis_table() {
    static OctBasisTable t = generate_table();
    return t;
}

Octonion Octonion::basis(const Field& fld, int ordinal, uint16_t coeff) {
    Octonion x(fld);
    x.c[ordinal] = coeff;
    return x;
}

Octonion Octonion::scalar(const Field& fld, uint16_t lambda) {
    Octonion x(fld);
    x.c[0] = lambda;
    x.c[4] = lambda;
    return x;
}

bool Octonion::is_zero() const {
    for (uint16_t v : c)
        if (v) return false;
    return true;
}

bool Octonion::operator==(const Octonion& o) const {
    check_same_field(*this, o);
    return c == o.c;
}

Octonion oct_add(const Octonion& x, const Octonion& y) {
    check_same_field(x, y);
    Octonion r(*x.f);
    for (int i = 0; i < 8; ++i) r.c[i] = x.f->add(x.c[i], y.c[i]);
    return r;
}

Octonion oct_sub(const Octonion& x, const Octonion& y) {
    check_same_field(x, y);
    Octonion r(*x.f);
    for (int i = 0; i < 8; ++i) r.c[i] = x.f->sub(x.c[i], y.c[i]);
    return r;
}

Octonion oct_neg(const Octonion& x) {
    Octonion r(*x.f);
    for (int i = 0; i < 8; ++i) r.c[i] = x.f->neg(x.c[i]);
    return r;
}

Octonion oct_scale(const Octonion& x, uint16_t lambda) {
    Octonion r(*x.f);
    for (int i = 0; i < 8; ++i) r.c[i] = x.f->mul(x.c[i], lambda);
    return r;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
    check_same_field(x, y);
    const Field& F = *x.f;
    const OctBasisTable& t = oct_basis_table();
    Octonion r(F);
    for (int i = 0; i < 8; ++i) {
        if (!x.c[i]) continue;
        for (int j = 0; j < 8; ++j) {
            if (!y.c[j] || !t.sign[i][j]) continue;
            uint16_t prod = F.mul(x.c[i], y.c[j]);
            if (t.sign[i][j] < 0) prod = F.neg(prod);
            int k = t.idx[i][j];
            r.c[k] = F.add(r.c[k], prod);
        }
    }
    return r;
}

Octonion oct_conj(const Octonion& x) {
    const Field& F = *x.f;
    Octonion r(F);
    r.c[0] = x.c[4];
    r.c[4] = x.c[0];
    for (int i : {1, 2, 3, 5, 6, 7}) r.c[i] = F.neg(x.c[i]);
    return r;
}

Fe oct_trace(const Octonion& x) { return Fe(x.f->add(x.c[0], x.c[4]), *x.f); }

Fe oct_norm(const Octonion& x) {
    const Field& F = *x.f;
    uint16_t n = 0;
    for (int i = 0; i < 4; ++i) n = F.add(n, F.mul(x.c[i], x.c[i + 4]));
    return Fe(n, F);
}

Fe oct_bilinear(const Octonion& x, const Octonion& y) {
    check_same_field(x, y);
    // N(x+y)-N(x)-N(y) = sum_i x_i y_{-i}, division-free.
    const Field& F = *x.f;
    uint16_t b = 0;
    for (int i = 0; i < 8; ++i) b = F.add(b, F.mul(x.c[i], y.c[oct_index::negate(i)]));
    return Fe(b, F);
}

Octonion oct_prime(const Octonion& x) {
    const Field& F = *x.f;
    Octonion r(F);
    for (int i = 0; i < 8; ++i) r.c[i] = F.conjq(x.c[i]);
    return r;
}

Octonion oct_star(const Octonion& x) { return oct_conj(oct_prime(x)); }

bool oct_is_scalar(const Octonion& x) {
    if (x.c[0] != x.c[4]) return false;
    for (int i : {1, 2, 3, 5, 6, 7})
        if (x.c[i]) return false;
    return true;
}

Fe oct_as_scalar(const Octonion& x) {
    if (!oct_is_scalar(x)) throw std::domain_error("octonion: element is not a scalar");
    return Fe(x.c[0], *x.f);
}

uint64_t enumerate_isotropic(const Field& f, const std::function<void(const Octonion&)>& visit) {
    // N(x) = sum_{i=0..3} x_i x_{i+4}.  Enumerate the +I coefficients; the
    // constraint on the -I half is a single linear equation, trivial when
    // the +I half is zero.
    const uint32_t q = f.q;
    uint64_t count = 0;
    std::array<uint16_t, 4> pos{};
    Octonion x(f);

    std::function<void(int)> rec_pos = [&](int d) {
        if (d == 4) {
            int pivot = -1;
            for (int i = 0; i < 4; ++i)
                if (pos[i]) pivot = i;
            for (int i = 0; i < 4; ++i) x.c[i] = pos[i];
            if (pivot < 0) {
                // Whole -I half is free.
                std::function<void(int)> rec_neg = [&](int d2) {
                    if (d2 == 4) {
                        bool zero = true;
                        for (int i = 4; i < 8; ++i)
                            if (x.c[i]) zero = false;
                        if (!zero) {
                            ++count;
                            if (visit) visit(x);
                        }
                        return;
                    }
                    for (uint32_t v = 0; v < q; ++v) {
                        x.c[4 + d2] = static_cast<uint16_t>(v);
                        rec_neg(d2 + 1);
                    }
                };
                rec_neg(0);
                return;
            }
            // Free coordinates are the -I slots other than pivot+4; solve for it.
            std::function<void(int)> rec_free = [&](int d2) {
                if (d2 == 4) {
                    uint16_t s = 0;
                    for (int i = 0; i < 4; ++i)
                        if (i != pivot) s = f.add(s, f.mul(x.c[i], x.c[i + 4]));
                    // pos[pivot] * x_{pivot+4} = -s
                    x.c[pivot + 4] = f.mul(f.neg(s), f.inv(pos[pivot]));
                    ++count;
                    if (visit) visit(x);
                    return;
                }
                if (d2 == pivot) {
                    rec_free(d2 + 1);
                    return;
                }
                for (uint32_t v = 0; v < q; ++v) {
                    x.c[4 + d2] = static_cast<uint16_t>(v);
                    rec_free(d2 + 1);
                }
            };
            rec_free(0);
            return;
        }
        for (uint32_t v = 0; v < q; ++v) {
            pos[d] = static_cast<uint16_t>(v);
            rec_pos(d + 1);
        }
    };
    rec_pos(0);
    return count;
}

uint64_t count_isotropic(const Field& f) { return enumerate_isotropic(f, nullptr); }

}  // namespace af
