#pragma once
// Sparse exact polynomials of degree <= 3 in 27 variables over GF(p^k).
//
// Monomial keys pack the (sorted, ascending) variable indices of a
// multiset into one uint32: key = (v0+1) | (v1+1)<<8 | (v2+1)<<16 with
// unused slots zero.  Integer order of the keys is graded (more factors =
// larger key), lexicographic within a degree.  No zero coefficients are
// ever stored, so map equality is polynomial identity.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "af/gf.hpp"

namespace af {

class CubicPoly27 {
public:
    static constexpr int nvars = 27;

    explicit CubicPoly27(const Field& f) : f_(&f) {}

    const Field& field() const { return *f_; }

    static uint32_t key(std::array<int, 3> vars, int degree);
    static int key_degree(uint32_t k);
    static std::array<int, 3> key_vars(uint32_t k);

    void add_term(uint32_t key, uint16_t coeff);
    void add_monomial(std::array<int, 3> vars, int degree, uint16_t coeff);

    void add(const CubicPoly27& other);
    void scale(uint16_t lambda);
    CubicPoly27 negated() const;

    uint16_t evaluate(const std::array<uint16_t, 27>& point) const;

    /// p(Mx): substitute variable v -> sum_j M[v*27+j] x_j (row-major M).
    CubicPoly27 substitute(const std::vector<uint16_t>& M) const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    bool operator==(const CubicPoly27& o) const { return terms_ == o.terms_; }
    bool operator!=(const CubicPoly27& o) const { return !(*this == o); }

    const std::map<uint32_t, uint16_t>& terms() const { return terms_; }

private:
    const Field* f_;
    std::map<uint32_t, uint16_t> terms_;
};

}  // namespace af
