#pragma once
// Exact big-integer evaluation of the closed-form counts and group orders:
// white vector/point counts, suborbit lengths, primitive idempotent and
// trace-zero counts, |SE6(q)|, |F4(q)|, |2SE6(q)|, the three twisted orbit
// lengths, and the classical-group order polynomials they are checked
// against.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace af {

using BigInt = boost::multiprecision::cpp_int;

/// Exact division; throws std::logic_error when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b);

struct ClosedFormCounts {
    BigInt q;
    BigInt white_vectors;          // (q^9-1)(q^8+q^4+1)
    BigInt white_points;           // white_vectors / (q-1)
    BigInt suborbit_all_white;     // q(q^3+1)(q^8-1)/(q-1)
    BigInt suborbit_two_white;     // q^8(q^4+1)(q^5-1)/(q-1)
    BigInt primitive_idempotents;  // q^8(q^8+q^4+1)
    BigInt trace0_white;           // (q^12-1)(q^4+1)
    BigInt isotropic_octonions;    // (q^4-1)(q^3+1), nonzero
    BigInt structured_cases[6];    // the six case counts of the white census
    BigInt se6_order;
    BigInt f4_order;
    BigInt twose6_order;
    BigInt twisted_orbits[3];      // emerald / isotropic brilliant / non-isotropic
    BigInt white_points_qsq;       // white points of the 27-space over GF(q^2)
    BigInt so10_plus;              // q^20(q^5-1)(q^8-1)(q^6-1)(q^4-1)(q^2-1)
    BigInt spin9;                  // q^16(q^8-1)(q^6-1)(q^4-1)(q^2-1)
    BigInt spin10_minus;           // q^20(q^5+1)(q^8-1)(q^6-1)(q^4-1)(q^2-1)
    BigInt stabilizer_order;       // q^16 (q-1) so10_plus
};

ClosedFormCounts closed_form_counts(const BigInt& q);

struct OrderIdentityReport {
    ClosedFormCounts counts;
    bool se6_orbit_stabilizer;    // white_points * q^16 (q-1) |SO10+| == |SE6|
    int so10_constant;            // the d in d * so10_plus matching the identity (1 or 2; 0 = none)
    bool twisted_orbit_sum;       // sum of the three orbit lengths == white_points_qsq
    bool f4_orbit_stabilizer;     // idempotents * |Spin9| == |F4|
    bool suborbit_partition;      // 1 + s1 + s2 == white_points
    bool idempotent_bookkeeping;  // idempotents*(q-1) + trace0 == white_vectors
    bool structured_sum;          // six case counts sum to white_vectors
    bool twose6_stabilizer;       // orbit3 * |Spin10-| * (q+1) == |2SE6|
    bool all_pass() const {
        return se6_orbit_stabilizer && twisted_orbit_sum && f4_orbit_stabilizer &&
               suborbit_partition && idempotent_bookkeeping && structured_sum && twose6_stabilizer;
    }
};

OrderIdentityReport order_identities(const BigInt& q);

}  // namespace af
