#include "curve3/linalg.hpp"

namespace curve3 {

std::vector<int> rref(const Field& F, FqMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pv = row;
        while (pv < rows && F.is_zero(m[pv][col])) ++pv;
        if (pv == rows) continue;
        std::swap(m[pv], m[row]);
        Fq inv = F.inv(m[row][col]);
        for (size_t c = 0; c < cols; ++c) m[row][c] = F.mul(m[row][c], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || F.is_zero(m[r][col])) continue;
            Fq f = m[r][col];
            for (size_t c = 0; c < cols; ++c) m[r][c] = F.sub(m[r][c], F.mul(f, m[row][c]));
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int matrix_rank(const Field& F, FqMat m) { return static_cast<int>(rref(F, m).size()); }

FqMat null_space(const Field& F, const FqMat& m, int ncols) {
    FqMat a = m;
    for (auto& r : a) r.resize(ncols, F.zero());
    std::vector<int> pivots = rref(F, a);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    FqMat basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        FqVec v(ncols, F.zero());
        v[free] = F.one();
        for (size_t r = 0; r < pivots.size(); ++r) {
            // pivot row r has leading 1 at column pivots[r]
            if (free < static_cast<int>(a[r].size()))
                v[pivots[r]] = F.neg(a[r][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

FqMat mat_mul(const Field& F, const FqMat& a, const FqMat& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    FqMat c(n, FqVec(m, F.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (F.is_zero(a[i][l])) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] = F.add(c[i][j], F.mul(a[i][l], b[l][j]));
        }
    return c;
}

FqMat mat_frob(const Field& F, FqMat a, int e) {
    for (auto& row : a)
        for (auto& x : row)
            for (int i = 0; i < e; ++i) x = F.frob(x);
    return a;
}

} // namespace curve3
