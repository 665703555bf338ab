#pragma once

// Exact elimination over Q / F_p.
//
// Pivot rule: Markowitz-style minimum fill-in, cost (nnz(row)-1)*(nnz(col)-1)
// over the active submatrix, ties broken by lowest row then lowest column.
// The rule is deterministic, so ranks, kernels and reduced forms are
// reproducible bit for bit.

#include <optional>
#include <utility>
#include <vector>

#include "cobarkit/sparse_matrix.hpp"

namespace ck {

struct RrefResult {
  // fully reduced (Gauss-Jordan) rows; pivot columns hold a single 1
  SparseMatrix reduced;
  std::vector<std::pair<std::int64_t, std::int64_t>> pivots;  // (row, col)
  std::int64_t rank() const { return static_cast<std::int64_t>(pivots.size()); }
};

// pivot_col_limit < 0 allows pivots anywhere; otherwise only columns
// < pivot_col_limit are eligible (columns past the limit are still reduced).
RrefResult rref(const SparseMatrix& m, const Field& f, std::int64_t pivot_col_limit = -1);

std::int64_t rank(const SparseMatrix& m, const Field& f);

// Columns form a basis of {x : m x = 0}; column count = cols - rank.
SparseMatrix kernel_basis(const SparseMatrix& m, const Field& f);

// Does every column of b lie in the column span of a?
bool cols_in_span(const SparseMatrix& a, const SparseMatrix& b, const Field& f);

// Solve a x = b for one dense column b; nullopt if unsolvable.
std::optional<std::vector<Scalar>> solve(const SparseMatrix& a, const std::vector<Scalar>& b,
                                         const Field& f);

}  // namespace ck
