#pragma once

#include "wittenlab/rational.hpp"

#include <optional>
#include <vector>

namespace wittenlab {

// Exact Gaussian elimination for small dense overdetermined systems A x = b.
// Returns the unique solution, or nullopt if the system is inconsistent or
// underdetermined. Surplus equations are checked exactly.
inline std::optional<std::vector<Rational>> exact_linear_solve(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const size_t rows = a.size();
    if (rows == 0) return std::nullopt;
    const size_t cols = a[0].size();
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        std::swap(b[p], b[rank]);
        const Rational inv = Rational(1) / a[rank][c];
        for (size_t cc = c; cc < cols; ++cc) a[rank][cc] *= inv;
        b[rank] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            const Rational f = a[r][c];
            for (size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank < cols) return std::nullopt;  // underdetermined
    for (size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;  // inconsistent surplus equation
    std::vector<Rational> x(cols, Rational(0));
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace wittenlab
