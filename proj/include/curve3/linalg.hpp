#ifndef CURVE3_LINALG_HPP
#define CURVE3_LINALG_HPP

#include <vector>

#include "curve3/gf.hpp"

namespace curve3 {

using FqVec = std::vector<Fq>;
using FqMat = std::vector<FqVec>;

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(const Field& F, FqMat& m);

int matrix_rank(const Field& F, FqMat m);

// Basis of the right null space of m (rows = equations), in RREF-canonical
// form w.r.t. the free columns in increasing order.
FqMat null_space(const Field& F, const FqMat& m, int ncols);

FqMat mat_mul(const Field& F, const FqMat& a, const FqMat& b);

// Entrywise p^e-th power.
FqMat mat_frob(const Field& F, FqMat a, int e = 1);

} // namespace curve3

#endif
