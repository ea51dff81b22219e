#pragma once
// Exact arithmetic in small finite fields GF(p^k), p prime, p^k <= 1024.
//
// Elements are stored as packed codes: code = sum c_i * p^i where
// (c_0, ..., c_{k-1}) are the polynomial coefficients, constant term first.
// Each Field owns full add/mul/inv tables, so all arithmetic is O(1) table
// lookups.  Fields are interned: field_make(p, k) always returns the same
// Field object, whose modulus is the lexicographically least monic
// irreducible polynomial of degree k (coefficients compared low-degree
// first).  This makes every serialized element reproducible from (p, k)
// alone.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace af {

class Field;

/// Element of GF(p^k): packed code plus the owning field.
struct Fe {
    uint16_t v = 0;
    const Field* f = nullptr;

    Fe() = default;
    Fe(uint16_t code, const Field& fld) : v(code), f(&fld) {}

    bool is_zero() const { return v == 0; }
    bool operator==(const Fe& o) const;
    bool operator!=(const Fe& o) const { return !(*this == o); }

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe operator-() const;
    Fe inv() const;
    Fe pow(uint64_t e) const;
    /// x -> x^q with q = p^(k/2); only defined when k is even.
    Fe conj_q() const;

    std::vector<uint16_t> coeffs() const;
};

class Field {
public:
    uint16_t p = 0;       // characteristic
    uint16_t k = 0;       // extension degree
    uint32_t q = 0;       // p^k
    std::vector<uint16_t> modulus;  // k+1 coefficients, constant first, monic

    uint16_t add(uint16_t a, uint16_t b) const { return add_[idx(a, b)]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add_[idx(a, neg_[b])]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[idx(a, b)]; }
    uint16_t neg(uint16_t a) const { return neg_[a]; }
    uint16_t inv(uint16_t a) const {
        if (a == 0) throw std::domain_error("gf: inversion of zero");
        return inv_[a];
    }
    uint16_t frob(uint16_t a) const { return frob_[a]; }  // x -> x^p
    uint16_t conjq(uint16_t a) const {
        if (k % 2 != 0)
            throw std::domain_error("gf: conj_q requires a quadratic extension (even k)");
        return conjq_[a];
    }
    uint16_t pow(uint16_t a, uint64_t e) const;

    uint16_t one() const { return 1; }
    /// Embed an integer via the prime subfield (n mod p).
    uint16_t from_int(int64_t n) const {
        int64_t r = n % p;
        if (r < 0) r += p;
        return static_cast<uint16_t>(r);
    }

    Fe el(uint16_t code) const { return Fe(code, *this); }
    Fe zero() const { return el(0); }
    Fe one_el() const { return el(1); }
    Fe scalar(int64_t n) const { return el(from_int(n)); }

    /// Code for the coefficient vector (constant term first, length <= k).
    uint16_t pack(const std::vector<uint16_t>& coeffs) const;
    std::vector<uint16_t> unpack(uint16_t code) const;

    /// True when k is even, i.e. the field is GF(q^2) with q = p^(k/2).
    bool is_quadratic() const { return k % 2 == 0; }
    /// p^(k/2), the order of the fixed subfield of conj_q.
    uint32_t sqrt_order() const { return sq_; }

    std::string element_str(uint16_t code) const;

private:
    friend const Field& field_make(int p, int k);
    Field(uint16_t p, uint16_t k);

    size_t idx(uint16_t a, uint16_t b) const { return static_cast<size_t>(a) * q + b; }

    std::vector<uint16_t> add_, mul_, neg_, inv_, frob_, conjq_;
    uint32_t sq_ = 0;
};

/// Interned field for (p, k); throws on non-prime p or p^k > 1024.
const Field& field_make(int p, int k);

/// Convenience: the field GF(q) for a prime power q (q = p^k <= 1024).
const Field& field_of_order(int q);

/// Factor q = p^k (p prime); throws if q is not a prime power >= 2.
void prime_power_split(int q, int& p, int& k);

inline bool Fe::operator==(const Fe& o) const {
    if (f != o.f) throw std::domain_error("gf: mismatched field specs");
    return v == o.v;
}
inline Fe Fe::operator+(const Fe& o) const {
    if (f != o.f) throw std::domain_error("gf: mismatched field specs");
    return Fe(f->add(v, o.v), *f);
}
inline Fe Fe::operator-(const Fe& o) const {
    if (f != o.f) throw std::domain_error("gf: mismatched field specs");
    return Fe(f->sub(v, o.v), *f);
}
inline Fe Fe::operator*(const Fe& o) const {
    if (f != o.f) throw std::domain_error("gf: mismatched field specs");
    return Fe(f->mul(v, o.v), *f);
}
inline Fe Fe::operator-() const { return Fe(f->neg(v), *f); }
inline Fe Fe::inv() const { return Fe(f->inv(v), *f); }
inline Fe Fe::pow(uint64_t e) const { return Fe(f->pow(v, e), *f); }
inline Fe Fe::conj_q() const { return Fe(f->conjq(v), *f); }
inline std::vector<uint16_t> Fe::coeffs() const { return f->unpack(v); }

}  // namespace af
