#include "af/gf_linalg.hpp"

namespace af {

int gf_rref(GfMatrix& m, std::vector<int>* pivot_cols) {
    const Field& F = *m.f;
    int rank = 0;
    if (pivot_cols) pivot_cols->clear();
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        uint16_t inv = F.inv(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = F.mul(m.at(rank, c), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            uint16_t factor = m.at(r, col);
            if (!factor) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(rank, c)));
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

int gf_rank(GfMatrix m) { return gf_rref(m); }

std::vector<std::vector<uint16_t>> gf_kernel(const GfMatrix& m_in) {
    GfMatrix m = m_in;
    const Field& F = *m.f;
    std::vector<int> pivots;
    int rank = gf_rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<uint16_t>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint16_t> v(m.cols, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivots[r]] = F.neg(m.at(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool gf_invert(const GfMatrix& m_in, GfMatrix& out) {
    if (m_in.rows != m_in.cols) return false;
    const Field& F = *m_in.f;
    int n = m_in.rows;
    GfMatrix aug(n, 2 * n, F);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m_in.at(r, c);
        aug.at(r, n + r) = 1;
    }
    if (gf_rref(aug) != n) return false;
    out = GfMatrix(n, n, F);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return true;
}

bool gf_in_span(const std::vector<std::vector<uint16_t>>& basis, const std::vector<uint16_t>& v,
                const Field& f) {
    if (basis.empty()) {
        for (uint16_t c : v)
            if (c) return false;
        return true;
    }
    int cols = static_cast<int>(v.size());
    GfMatrix m(static_cast<int>(basis.size()), cols, f);
    for (size_t r = 0; r < basis.size(); ++r)
        for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = basis[r][c];
    int rank = gf_rank(m);
    GfMatrix m2(static_cast<int>(basis.size()) + 1, cols, f);
    for (size_t r = 0; r < basis.size(); ++r)
        for (int c = 0; c < cols; ++c) m2.at(static_cast<int>(r), c) = basis[r][c];
    for (int c = 0; c < cols; ++c) m2.at(static_cast<int>(basis.size()), c) = v[c];
    return gf_rank(m2) == rank;
}

}  // namespace af
