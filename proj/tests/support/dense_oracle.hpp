#pragma once

// Independent dense elimination used as a test oracle.  Deliberately naive:
// dense storage, first-nonzero pivoting, no sharing with the library's sparse
// Markowitz code path.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cobarkit/sparse_matrix.hpp"

namespace oracle {

// dense rational rank
inline std::int64_t dense_rank_q(std::vector<std::vector<mpq_class>> m) {
  std::int64_t rows = m.size();
  std::int64_t cols = rows ? m[0].size() : 0;
  std::int64_t rank = 0;
  for (std::int64_t c = 0; c < cols && rank < rows; ++c) {
    std::int64_t piv = -1;
    for (std::int64_t r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (std::int64_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::int64_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

inline std::int64_t mod_inv(std::int64_t v, std::int64_t p) {
  v = mod_norm(v, p);
  for (std::int64_t c = 1; c < p; ++c)
    if (mod_norm(c * v, p) == 1) return c;
  return 0;
}

// dense rank mod p
inline std::int64_t dense_rank_fp(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::int64_t rows = m.size();
  std::int64_t cols = rows ? m[0].size() : 0;
  std::int64_t rank = 0;
  for (std::int64_t c = 0; c < cols && rank < rows; ++c) {
    std::int64_t piv = -1;
    for (std::int64_t r = rank; r < rows; ++r)
      if (mod_norm(m[r][c], p) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    std::int64_t inv = mod_inv(m[rank][c], p);
    for (std::int64_t k = 0; k < cols; ++k) m[rank][k] = mod_norm(m[rank][k] * inv, p);
    for (std::int64_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      std::int64_t f = mod_norm(m[r][c], p);
      if (f == 0) continue;
      for (std::int64_t k = 0; k < cols; ++k)
        m[r][k] = mod_norm(m[r][k] - f * m[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

// rank of a library matrix via the dense routines
inline std::int64_t dense_rank(const ck::SparseMatrix& m, const ck::Field& f) {
  if (f.kind == ck::FieldKind::rationals) {
    std::vector<std::vector<mpq_class>> d(m.rows, std::vector<mpq_class>(m.cols, 0));
    for (auto& e : m.entries) d[e.row][e.col] = e.value.rational();
    return dense_rank_q(std::move(d));
  }
  std::vector<std::vector<std::int64_t>> d(m.rows, std::vector<std::int64_t>(m.cols, 0));
  for (auto& e : m.entries) d[e.row][e.col] = e.value.residue();
  return dense_rank_fp(std::move(d), f.p);
}

}  // namespace oracle
