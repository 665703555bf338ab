#pragma once

// Finite windows of chain complexes and their homology.
//
// A slice records bases for degrees min..max and the differentials
// d_k : degree k -> degree k-1 for min < k <= max.  Per-degree completeness
// flags say "this basis is the whole degree, nothing was truncated away";
// homology of degree k is only marked exact when degrees k-1, k, k+1 are all
// complete (so kernel and image are both computed from full matrices).

#include <map>
#include <string>
#include <vector>

#include "cobarkit/linalg.hpp"

namespace ck {

struct corrupt_complex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChainComplexSlice {
  std::int64_t min_degree = 0;
  std::int64_t max_degree = -1;
  bool below_is_zero = true;  // nothing lives under min_degree (usual non-negative grading)
  std::vector<std::int64_t> basis_size;            // index k - min_degree
  std::map<std::int64_t, SparseMatrix> d;          // d[k]: size(k-1) x size(k), for k > min
  std::map<std::int64_t, bool> complete;           // per degree

  std::int64_t size(std::int64_t k) const {
    if (k < min_degree || k > max_degree) return 0;
    return basis_size[k - min_degree];
  }
  bool is_complete(std::int64_t k) const {
    if (k < min_degree) return below_is_zero;
    auto it = complete.find(k);
    return it != complete.end() && it->second;
  }
  const SparseMatrix* diff(std::int64_t k) const {
    auto it = d.find(k);
    return it == d.end() ? nullptr : &it->second;
  }

  // throws corrupt_complex when d∘d != 0 on consecutive complete degrees
  void check_dd_zero(const Field& f) const;
};

struct BettiTable {
  struct Row {
    std::int64_t degree = 0;
    std::int64_t dim = 0;
    bool exact = false;
  };
  std::vector<Row> rows;

  const Row* at(std::int64_t degree) const;
  std::string str() const;  // "(1,1,0,0)" with '~' marking approximate degrees
  bool operator==(const BettiTable& o) const;
};

// dim H_k = dim ker d_k - rank d_{k+1} on the slice window.
BettiTable homology(const ChainComplexSlice& c, const Field& f);

namespace betti {
// convenience for tests: exact table from (degree0 dim, ...) starting at 0
BettiTable table(std::vector<std::int64_t> dims, std::vector<bool> exact);
}  // namespace betti

}  // namespace ck
