#include "af/rng.hpp"

#include "af/gf_linalg.hpp"

namespace af {

Octonion random_octonion(const Field& f, SplitMix64& rng) {
    Octonion x(f);
    for (int i = 0; i < 8; ++i) x.c[i] = static_cast<uint16_t>(rng.below(f.q));
    return x;
}

AlbertVector random_albert(const Field& f, SplitMix64& rng) {
    AlbertVector X(f);
    for (int i = 0; i < 27; ++i) X.x[i] = static_cast<uint16_t>(rng.below(f.q));
    return X;
}

AlbertVector random_white_rank1(const Field& f, SplitMix64& rng) {
    uint16_t c = static_cast<uint16_t>(1 + rng.below(f.q - 1));
    Octonion x = random_octonion(f, rng);
    Octonion y = random_octonion(f, rng);
    // c * conj(v)^T v with v = (x, y, 1):
    // (a,b,c | A,B,C) = (c N(x), c N(y), c | c y~, c x, c x~ y)
    Fe a(f.mul(c, oct_norm(x).v), f);
    Fe b(f.mul(c, oct_norm(y).v), f);
    return AlbertVector::make(a, b, Fe(c, f), oct_scale(oct_conj(y), c), oct_scale(x, c),
                              oct_scale(oct_mul(oct_conj(x), y), c));
}

Octonion random_isotropic(const Field& f, SplitMix64& rng) {
    // Random +I half, then solve the norm constraint for the -I half.
    for (;;) {
        Octonion x(f);
        for (int i = 0; i < 4; ++i) x.c[i] = static_cast<uint16_t>(rng.below(f.q));
        int pivot = -1;
        for (int i = 0; i < 4; ++i)
            if (x.c[i]) pivot = i;
        if (pivot < 0) {
            for (int i = 4; i < 8; ++i) x.c[i] = static_cast<uint16_t>(rng.below(f.q));
        } else {
            for (int i = 4; i < 8; ++i)
                if (i != pivot + 4) x.c[i] = static_cast<uint16_t>(rng.below(f.q));
            uint16_t s = 0;
            for (int i = 0; i < 4; ++i)
                if (i != pivot) s = f.add(s, f.mul(x.c[i], x.c[i + 4]));
            x.c[pivot + 4] = f.mul(f.neg(s), f.inv(x.c[pivot]));
        }
        if (!x.is_zero()) return x;
    }
}

AlbertVector random_white_offdiag(const Field& f, SplitMix64& rng) {
    for (;;) {
        Octonion A = random_isotropic(f, rng);
        // B from ker of left multiplication by A, C from ker L_B intersect ker R_A.
        GfMatrix LA(8, 8, f);
        for (int j = 0; j < 8; ++j) {
            Octonion col = oct_mul(A, Octonion::basis(f, j));
            for (int i = 0; i < 8; ++i) LA.at(i, j) = col.c[i];
        }
        auto KB = gf_kernel(LA);
        Octonion B(f);
        for (auto& k : KB) {
            uint16_t lam = static_cast<uint16_t>(rng.below(f.q));
            for (int i = 0; i < 8; ++i) B.c[i] = f.add(B.c[i], f.mul(lam, k[i]));
        }
        if (B.is_zero()) continue;
        GfMatrix LBRA(16, 8, f);
        for (int j = 0; j < 8; ++j) {
            Octonion ej = Octonion::basis(f, j);
            Octonion lb = oct_mul(B, ej), ra = oct_mul(ej, A);
            for (int i = 0; i < 8; ++i) {
                LBRA.at(i, j) = lb.c[i];
                LBRA.at(8 + i, j) = ra.c[i];
            }
        }
        auto KC = gf_kernel(LBRA);
        Octonion C(f);
        for (auto& k : KC) {
            uint16_t lam = static_cast<uint16_t>(rng.below(f.q));
            for (int i = 0; i < 8; ++i) C.c[i] = f.add(C.c[i], f.mul(lam, k[i]));
        }
        if (C.is_zero()) continue;
        Fe z(0, f);
        return AlbertVector::make(z, z, z, A, B, C);
    }
}

}  // namespace af
