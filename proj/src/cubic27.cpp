#include "af/cubic27.hpp"

#include <algorithm>
#include <stdexcept>

namespace af {

uint32_t CubicPoly27::key(std::array<int, 3> vars, int degree) {
    std::sort(vars.begin(), vars.begin() + degree);
    uint32_t k = 0;
    for (int i = 0; i < degree; ++i) k |= static_cast<uint32_t>(vars[i] + 1) << (8 * i);
    return k;
}

int CubicPoly27::key_degree(uint32_t k) {
    int d = 0;
    while (k) {
        ++d;
        k >>= 8;
    }
    return d;
}

std::array<int, 3> CubicPoly27::key_vars(uint32_t k) {
    std::array<int, 3> v{-1, -1, -1};
    for (int i = 0; i < 3 && k; ++i) {
        v[i] = static_cast<int>(k & 0xff) - 1;
        k >>= 8;
    }
    return v;
}

void CubicPoly27::add_term(uint32_t key, uint16_t coeff) {
    if (!coeff) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second = f_->add(it->second, coeff);
    if (!it->second) terms_.erase(it);
}

void CubicPoly27::add_monomial(std::array<int, 3> vars, int degree, uint16_t coeff) {
    add_term(key(vars, degree), coeff);
}

void CubicPoly27::add(const CubicPoly27& other) {
    if (f_ != other.f_) throw std::domain_error("cubic27: mismatched field specs");
    for (auto& [k, c] : other.terms_) add_term(k, c);
}

void CubicPoly27::scale(uint16_t lambda) {
    if (!lambda) {
        terms_.clear();
        return;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = f_->mul(it->second, lambda);
        it = it->second ? std::next(it) : terms_.erase(it);
    }
}

CubicPoly27 CubicPoly27::negated() const {
    CubicPoly27 r(*f_);
    for (auto& [k, c] : terms_) r.terms_.emplace(k, f_->neg(c));
    return r;
}

uint16_t CubicPoly27::evaluate(const std::array<uint16_t, 27>& point) const {
    uint16_t acc = 0;
    for (auto& [k, c] : terms_) {
        uint16_t t = c;
        uint32_t kk = k;
        while (kk) {
            t = f_->mul(t, point[(kk & 0xff) - 1]);
            kk >>= 8;
        }
        acc = f_->add(acc, t);
    }
    return acc;
}

CubicPoly27 CubicPoly27::substitute(const std::vector<uint16_t>& M) const {
    if (M.size() != 27 * 27) throw std::invalid_argument("cubic27: substitution matrix must be 27x27");
    const Field& F = *f_;

    // Dense accumulators per degree; degree-3 slots are indexed by the
    // sorted triple (i <= j <= k) at i*729 + j*27 + k.
    uint16_t c0 = 0;
    std::array<uint16_t, 27> c1{};
    std::vector<uint16_t> c2(27 * 27, 0);      // i <= j at i*27+j
    std::vector<uint16_t> c3(27 * 27 * 27, 0); // i <= j <= k

    auto row = [&](int v) { return M.data() + static_cast<size_t>(v) * 27; };

    for (auto& [key, coeff] : terms_) {
        auto vars = key_vars(key);
        int deg = key_degree(key);
        if (deg == 0) {
            c0 = F.add(c0, coeff);
        } else if (deg == 1) {
            const uint16_t* r = row(vars[0]);
            for (int j = 0; j < 27; ++j)
                if (r[j]) c1[j] = F.add(c1[j], F.mul(coeff, r[j]));
        } else if (deg == 2) {
            const uint16_t* r0 = row(vars[0]);
            const uint16_t* r1 = row(vars[1]);
            for (int i = 0; i < 27; ++i) {
                if (!r0[i]) continue;
                uint16_t ci = F.mul(coeff, r0[i]);
                for (int j = 0; j < 27; ++j) {
                    if (!r1[j]) continue;
                    uint16_t t = F.mul(ci, r1[j]);
                    int a = std::min(i, j), b = std::max(i, j);
                    size_t slot = static_cast<size_t>(a) * 27 + b;
                    c2[slot] = F.add(c2[slot], t);
                }
            }
        } else {
            const uint16_t* r0 = row(vars[0]);
            const uint16_t* r1 = row(vars[1]);
            const uint16_t* r2 = row(vars[2]);
            for (int i = 0; i < 27; ++i) {
                if (!r0[i]) continue;
                uint16_t ci = F.mul(coeff, r0[i]);
                for (int j = 0; j < 27; ++j) {
                    if (!r1[j]) continue;
                    uint16_t cij = F.mul(ci, r1[j]);
                    for (int k = 0; k < 27; ++k) {
                        if (!r2[k]) continue;
                        uint16_t t = F.mul(cij, r2[k]);
                        int a = i, b = j, cc = k;
                        if (a > b) std::swap(a, b);
                        if (b > cc) std::swap(b, cc);
                        if (a > b) std::swap(a, b);
                        size_t slot = (static_cast<size_t>(a) * 27 + b) * 27 + cc;
                        c3[slot] = F.add(c3[slot], t);
                    }
                }
            }
        }
    }

    CubicPoly27 out(F);
    if (c0) out.terms_.emplace(0u, c0);
    for (int i = 0; i < 27; ++i)
        if (c1[i]) out.terms_.emplace(key({i, 0, 0}, 1), c1[i]);
    for (int i = 0; i < 27; ++i)
        for (int j = i; j < 27; ++j) {
            uint16_t v = c2[static_cast<size_t>(i) * 27 + j];
            if (v) out.terms_.emplace(key({i, j, 0}, 2), v);
        }
    for (int i = 0; i < 27; ++i)
        for (int j = i; j < 27; ++j)
            for (int k = j; k < 27; ++k) {
                uint16_t v = c3[(static_cast<size_t>(i) * 27 + j) * 27 + k];
                if (v) out.terms_.emplace(key({i, j, k}, 3), v);
            }
    return out;
}

}  // namespace af
