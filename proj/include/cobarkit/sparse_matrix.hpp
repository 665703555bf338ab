#pragma once

// Sparse matrices over an exact field.  Entries are stored row-major with no
// duplicates and no explicit zeros; construction sums duplicate coordinates
// and drops anything that cancels.

#include <cstdint>
#include <vector>

#include "cobarkit/field.hpp"

namespace ck {

struct SparseMatrix {
  struct Entry {
    std::int64_t row = 0;
    std::int64_t col = 0;
    Scalar value;
  };

  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<Entry> entries;  // sorted by (row, col)

  SparseMatrix() = default;
  SparseMatrix(std::int64_t r, std::int64_t c) : rows(r), cols(c) {}

  static SparseMatrix from_triplets(std::int64_t rows, std::int64_t cols,
                                    std::vector<Entry> triplets);
  static SparseMatrix identity(std::int64_t n, const Field& f);
  static SparseMatrix zero(std::int64_t r, std::int64_t c) { return SparseMatrix(r, c); }

  bool is_zero() const { return entries.empty(); }
  std::int64_t nnz() const { return static_cast<std::int64_t>(entries.size()); }

  Scalar at(std::int64_t r, std::int64_t c, const Field& f) const;

  // column vector accessors (columns are how kernels and images are passed around)
  std::vector<Scalar> col_dense(std::int64_t c, const Field& f) const;

  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& s) const;
  SparseMatrix transpose() const;
  bool operator==(const SparseMatrix& o) const;

  // glue columns side by side: [a | b]
  static SparseMatrix hcat(const SparseMatrix& a, const SparseMatrix& b);

  void check_well_formed(const Field& f) const;  // throws malformed_input
  std::string str() const;                       // small human-readable dump
};

}  // namespace ck
