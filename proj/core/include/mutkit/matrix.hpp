#pragma once

#include <optional>
#include <vector>

#include "mutkit/numeric.hpp"

namespace mutkit {

// Small dense exact matrices, row-major. Everything here is desk scale
// (dimensions <= 8), so the code favors clarity over asymptotics.
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_apply(const IntMat& m, const IntVec& v);  // m * v (column convention)
IntMat mat_transpose(const IntMat& m);
bool mat_equal(const IntMat& a, const IntMat& b);

// Bareiss fraction-free determinant of a square integer matrix.
Int determinant(const IntMat& m);

// Exact inverse over the rationals; nullopt when singular.
std::optional<RatMat> inverse_rational(const IntMat& m);

// Integer inverse of a unimodular matrix; nullopt when |det| != 1.
std::optional<IntMat> inverse_unimodular(const IntMat& m);

// Row-style Hermite normal form: transform * input = hnf with transform
// unimodular. Pivots positive, entries above each pivot reduced into
// [0, pivot). Zero rows sink to the bottom; `rank` counts the nonzero rows.
struct HnfResult {
    IntMat hnf;
    IntMat transform;
    int rank = 0;
};
HnfResult hermite_normal_form(const IntMat& rows);

// Basis (as rows) of { x in Z^n : rows * x = 0 }. The result spans the
// saturated kernel lattice.
IntMat integer_kernel(const IntMat& rows);

// Unimodular U (|det| = 1) whose last row is the given primitive vector.
IntMat unimodular_completion(const IntVec& w);

// Gaussian elimination helpers over Q.
int rational_rank(RatMat m);
// Solve A x = b for square A; nullopt when singular.
std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b);
// Least structured solve: any solution of A x = b (A m x n); nullopt when
// inconsistent.
std::optional<RatVec> solve_any(RatMat a, RatVec b);

RatMat to_rational(const IntMat& m);
bool is_integral(const RatMat& m);
IntMat to_integral(const RatMat& m);

}  // namespace mutkit
