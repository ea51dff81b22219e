#include "af/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace af {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<uint16_t>;  // coefficients mod p, constant first

// Remove leading zeros (keeps at least the constant term).
void trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// a mod m over GF(p), schoolbook.
Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm && !(a.size() == 1 && a[0] == 0)) {
        int da = static_cast<int>(a.size()) - 1;
        if (da < dm) break;
        // m is monic, so the factor is just the leading coefficient of a.
        uint16_t c = a[da];
        int shift = da - dm;
        for (int i = 0; i <= dm; ++i) {
            int t = a[i + shift] - c * m[i] % p;
            t %= p;
            if (t < 0) t += p;
            a[i + shift] = static_cast<uint16_t>(t);
        }
        trim(a);
        if (da == static_cast<int>(a.size()) - 1) break;  // no progress (a became 0)
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint16_t>((r[i + j] + a[i] * b[j]) % p);
    trim(r);
    return r;
}

bool poly_is_zero(const Poly& a) {
    for (uint16_t c : a)
        if (c) return false;
    return true;
}

// Candidate generator: the monic polynomial of degree d whose low coefficients
// are the base-p digits of n.
Poly nth_monic(int p, int d, uint32_t n) {
    Poly f(d + 1, 0);
    for (int i = 0; i < d; ++i) {
        f[i] = static_cast<uint16_t>(n % p);
        n /= p;
    }
    f[d] = 1;
    return f;
}

bool is_irreducible(const Poly& f, int p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int e = 1; 2 * e <= d; ++e) {
        uint32_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (uint32_t n = 0; n < count; ++n) {
            Poly g = nth_monic(p, e, n);
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

Poly lex_least_irreducible(int p, int k) {
    uint32_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    // Low-degree-first lexicographic order coincides with the base-p digit
    // order of n, since digit i of n is coefficient i.
    for (uint32_t n = 0; n < count; ++n) {
        Poly f = nth_monic(p, k, n);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("gf: no irreducible polynomial found");
}

}  // namespace

Field::Field(uint16_t p_, uint16_t k_) : p(p_), k(k_) {
    uint32_t qq = 1;
    for (int i = 0; i < k; ++i) qq *= p;
    q = qq;
    modulus = lex_least_irreducible(p, k);

    auto unpack_local = [&](uint16_t code) {
        Poly c(k, 0);
        for (int i = 0; i < k; ++i) {
            c[i] = static_cast<uint16_t>(code % p);
            code = static_cast<uint16_t>(code / p);
        }
        return c;
    };
    auto pack_local = [&](const Poly& c) {
        uint32_t code = 0, mult = 1;
        for (int i = 0; i < k; ++i) {
            code += (i < static_cast<int>(c.size()) ? c[i] : 0) * mult;
            mult *= p;
        }
        return static_cast<uint16_t>(code);
    };

    add_.resize(static_cast<size_t>(q) * q);
    mul_.resize(static_cast<size_t>(q) * q);
    neg_.resize(q);
    inv_.resize(q);
    frob_.resize(q);

    std::vector<Poly> reps(q);
    for (uint32_t a = 0; a < q; ++a) reps[a] = unpack_local(static_cast<uint16_t>(a));

    for (uint32_t a = 0; a < q; ++a) {
        Poly na(k);
        for (int i = 0; i < k; ++i) na[i] = static_cast<uint16_t>((p - reps[a][i]) % p);
        neg_[a] = pack_local(na);
        for (uint32_t b = 0; b < q; ++b) {
            Poly s(k);
            for (int i = 0; i < k; ++i) s[i] = static_cast<uint16_t>((reps[a][i] + reps[b][i]) % p);
            add_[idx(static_cast<uint16_t>(a), static_cast<uint16_t>(b))] = pack_local(s);
            Poly m = poly_mod(poly_mul(reps[a], reps[b], p), modulus, p);
            mul_[idx(static_cast<uint16_t>(a), static_cast<uint16_t>(b))] = pack_local(m);
        }
    }

    inv_[0] = 0;
    for (uint32_t a = 1; a < q; ++a)
        for (uint32_t b = 1; b < q; ++b)
            if (mul_[idx(static_cast<uint16_t>(a), static_cast<uint16_t>(b))] == 1) {
                inv_[a] = static_cast<uint16_t>(b);
                break;
            }

    for (uint32_t a = 0; a < q; ++a) frob_[a] = pow(static_cast<uint16_t>(a), p);

    if (k % 2 == 0) {
        sq_ = 1;
        for (int i = 0; i < k / 2; ++i) sq_ *= p;
        conjq_.resize(q);
        for (uint32_t a = 0; a < q; ++a) conjq_[a] = pow(static_cast<uint16_t>(a), sq_);
    }
}

uint16_t Field::pow(uint16_t a, uint64_t e) const {
    uint16_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint16_t Field::pack(const std::vector<uint16_t>& coeffs) const {
    if (coeffs.size() > k) throw std::invalid_argument("gf: coefficient list longer than degree");
    uint32_t code = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
        uint16_t c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
        if (c >= p) throw std::invalid_argument("gf: coefficient out of range");
        code += c * mult;
        mult *= p;
    }
    return static_cast<uint16_t>(code);
}

std::vector<uint16_t> Field::unpack(uint16_t code) const {
    std::vector<uint16_t> c(k, 0);
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<uint16_t>(code % p);
        code = static_cast<uint16_t>(code / p);
    }
    return c;
}

std::string Field::element_str(uint16_t code) const {
    if (k == 1) return std::to_string(code);
    auto c = unpack(code);
    std::string s = "[";
    for (int i = 0; i < k; ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "]";
}

const Field& field_make(int p, int k) {
    if (!is_prime(p)) throw std::invalid_argument("gf: p must be prime");
    if (k < 1) throw std::invalid_argument("gf: k must be >= 1");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 1024) throw std::invalid_argument("gf: p^k exceeds 1024");
    }

    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto f = std::unique_ptr<Field>(new Field(static_cast<uint16_t>(p), static_cast<uint16_t>(k)));
        it = cache.emplace(key, std::move(f)).first;
    }
    return *it->second;
}

void prime_power_split(int q, int& p, int& k) {
    if (q < 2) throw std::invalid_argument("gf: q must be >= 2");
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            k = 0;
            int m = q;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            if (m != 1) throw std::invalid_argument("gf: q is not a prime power");
            return;
        }
    }
    throw std::invalid_argument("gf: q is not a prime power");
}

const Field& field_of_order(int q) {
    int p, k;
    prime_power_split(q, p, k);
    return field_make(p, k);
}

}  // namespace af
