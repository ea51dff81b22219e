#pragma once
// Dense exact linear algebra over a small finite field: row reduction,
// rank, kernels, inverses, span membership.  Matrices are row-major
// vectors of element codes.

#include <cstdint>
#include <vector>

#include "af/gf.hpp"

namespace af {

struct GfMatrix {
    int rows = 0, cols = 0;
    std::vector<uint16_t> a;  // row-major codes
    const Field* f = nullptr;

    GfMatrix() = default;
    GfMatrix(int r, int c, const Field& fld)
        : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0), f(&fld) {}

    uint16_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint16_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// In-place reduced row echelon form; returns the rank and fills
/// pivot_cols (one entry per pivot row).
int gf_rref(GfMatrix& m, std::vector<int>* pivot_cols = nullptr);

int gf_rank(GfMatrix m);

/// Basis of the right kernel {x : Mx = 0}, one vector per row of the result.
std::vector<std::vector<uint16_t>> gf_kernel(const GfMatrix& m);

/// Inverse of a square matrix; returns false if singular.
bool gf_invert(const GfMatrix& m, GfMatrix& out);

/// Is v in the row span of basis (vectors of equal length)?
bool gf_in_span(const std::vector<std::vector<uint16_t>>& basis, const std::vector<uint16_t>& v,
                const Field& f);

}  // namespace af
