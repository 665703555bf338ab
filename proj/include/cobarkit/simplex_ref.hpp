#pragma once

// References to simplices in canonical form.
//
// Every simplex of a simplicial set is uniquely s_{i_k} ... s_{i_1} x with x
// nondegenerate and i_k > ... > i_1 (the canonical degeneracy form).  A
// SimplexRef stores that word (outermost index first) plus the nondegenerate
// base; the empty word refers to the base itself.

#include <cstdint>
#include <string>
#include <vector>

#include "cobarkit/field.hpp"

namespace ck {

struct malformed_operator : malformed_input {
  using malformed_input::malformed_input;
};

struct SimplexKey {
  int dim = 0;
  int idx = 0;
  auto operator<=>(const SimplexKey&) const = default;
};

struct SimplexRef {
  std::vector<int> degs;  // strictly decreasing, degs.front() applied last
  SimplexKey base;

  int dim() const { return base.dim + static_cast<int>(degs.size()); }
  bool nondegenerate() const { return degs.empty(); }

  static SimplexRef of(SimplexKey k) { return SimplexRef{{}, k}; }
  auto operator<=>(const SimplexRef&) const = default;

  // canonical text, e.g. "s[2,0]1:3" (word, dim:index)
  std::string key_str() const;
};

// s_i applied to a canonical ref, renormalized: s_i s_j = s_{j+1} s_i (i <= j)
SimplexRef degenerate(const SimplexRef& r, int i);

}  // namespace ck
