#include <doctest.h>

#include "af/verify.hpp"

using namespace af;

namespace {
void require_all(const SuiteResult& sr) {
    for (auto& c : sr.checks) {
        INFO(sr.suite, " q=", sr.q, " check=", c.name, " ", c.detail);
        CHECK(c.passed);
    }
}
}  // namespace

TEST_CASE("octonion suite, small fields") {
    VerifyOptions opt;
    opt.seed = 7;
    opt.random_instances = 2000;  // light smoke; the acceptance run uses 1e5
    opt.threads = 2;
    require_all(verify_octonion(field_make(2, 1), opt));
    require_all(verify_octonion(field_make(5, 1), opt));
}

TEST_CASE("albert suite, q=3 and q=5") {
    VerifyOptions opt;
    opt.seed = 7;
    opt.random_instances = 2000;
    opt.threads = 2;
    require_all(verify_albert(field_make(3, 1), opt));
    require_all(verify_albert(field_make(5, 1), opt));
}

TEST_CASE("generator suite, q=2 and q=3") {
    VerifyOptions opt;
    opt.seed = 7;
    opt.random_instances = 500;
    require_all(verify_generators(field_make(2, 1), opt));
    require_all(verify_generators(field_make(3, 1), opt));
}

TEST_CASE("twisted suite over GF(4)") {
    VerifyOptions opt;
    opt.seed = 7;
    opt.random_instances = 500;
    SuiteResult sr = verify_twisted(field_make(2, 2), opt);
    for (auto& c : sr.checks) {
        INFO(sr.suite, " q=", sr.q, " check=", c.name, " ", c.detail);
        if (c.name == "emerald_radical_is_span_v") {
            // pinned discrepancy: the computed emerald radical is the
            // 9-dimensional space <v> + two annihilator blocks, so the
            // radical-is-<v> claim fails; see emerald_radical_structure.
            CHECK(!c.passed);
        } else {
            CHECK(c.passed);
        }
    }
}
