#pragma once
// The module invariant suites behind `verify`: the algebraic identities and
// counting properties of each module, exhaustive where the field is small
// enough (q <= 3) and seeded random sampling elsewhere.  Each suite returns
// per-check pass/fail results; the CLI renders them and exits nonzero on
// any failure.

#include <cstdint>
#include <string>
#include <vector>

#include "af/gf.hpp"

namespace af {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    int q = 0;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool passed() const {
        for (auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

struct VerifyOptions {
    uint64_t seed = 1;
    uint64_t random_instances = 100000;  // per identity family when not exhaustive
    int threads = 1;
};

/// Octonion identities: multiplication-table regression, conjugation
/// anti-automorphism, trace associativity, norm multiplicativity, Moufang
/// and flexible laws, the two octonion lemmas, isotropic enumeration.
SuiteResult verify_octonion(const Field& f, const VerifyOptions& opt);

/// Albert-space identities: forms, color classification and its agreement
/// with the linear term, trilinear polarization, odd-characteristic Jordan
/// identities, the Dickson translation (numeric and exact-polynomial).
SuiteResult verify_albert(const Field& f, const VerifyOptions& opt);

/// Generator certificates: determinant preservation for every kind, action
/// formulas, composition laws, duality, the long-root construction.
SuiteResult verify_generators(const Field& f, const VerifyOptions& opt);

/// Twisted suite over GF(q^2): dagger-unitarity, H1 preservation,
/// F4-subgroup embedding, the N_x action formula, point types.
SuiteResult verify_twisted(const Field& fq2, const VerifyOptions& opt);

}  // namespace af
