#pragma once
// Deterministic seeded RNG (splitmix64) so every randomized suite is
// reproducible from its 64-bit seed, independent of platform.

#include <cstdint>

#include "af/albert.hpp"
#include "af/gf.hpp"
#include "af/octonion.hpp"

namespace af {

struct SplitMix64 {
    uint64_t s;
    explicit SplitMix64(uint64_t seed) : s(seed) {}
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

Octonion random_octonion(const Field& f, SplitMix64& rng);
AlbertVector random_albert(const Field& f, SplitMix64& rng);
/// A uniformly-flavoured random white vector with a nonzero diagonal entry,
/// built from the rank-1 form c * conj(v)^T v with v = (x, y, 1).
AlbertVector random_white_rank1(const Field& f, SplitMix64& rng);
/// Random nonzero isotropic octonion.
Octonion random_isotropic(const Field& f, SplitMix64& rng);
/// Random white vector with zero diagonal: (0,0,0 | A,B,C) with
/// A isotropic, AB = BC = CA = 0.
AlbertVector random_white_offdiag(const Field& f, SplitMix64& rng);

}  // namespace af
