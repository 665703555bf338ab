#pragma once

// Test-side normalized-chain complex of a simplicial set, built directly from
// the face maps: basis = nondegenerate simplices, boundary = alternating face
// sum with degenerate faces dropped.  Written independently of the library's
// chains layer so it can serve as an oracle for it.

#include "cobarkit/chain_complex.hpp"
#include "cobarkit/sset.hpp"

namespace ck_test {

inline ck::ChainComplexSlice sset_complex(const ck::SSet& x, int level,
                                          const ck::Field& f) {
  ck::ChainComplexSlice c;
  c.min_degree = 0;
  c.max_degree = level;
  c.below_is_zero = true;
  for (int k = 0; k <= level; ++k) {
    c.basis_size.push_back(x.count(k));
    c.complete[k] = true;
  }
  for (int k = 1; k <= level; ++k) {
    std::vector<ck::SparseMatrix::Entry> tri;
    for (int idx = 0; idx < x.count(k); ++idx) {
      ck::SimplexRef r = ck::SimplexRef::of({k, idx});
      for (int i = 0; i <= k; ++i) {
        ck::SimplexRef fr = ck::face(x, r, i);
        if (!fr.nondegenerate()) continue;
        ck::Scalar s = ck::Scalar::of(f, i % 2 == 0 ? 1 : -1);
        tri.push_back({fr.base.idx, idx, s});
      }
    }
    c.d[k] = ck::SparseMatrix::from_triplets(x.count(k - 1), x.count(k), tri);
  }
  return c;
}

inline ck::BettiTable sset_betti(const ck::SSet& x, int level, const ck::Field& f) {
  return ck::homology(sset_complex(x, level, f), f);
}

}  // namespace ck_test
