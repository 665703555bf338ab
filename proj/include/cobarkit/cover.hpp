#pragma once

// Covers as twisted cartesian products.
//
// Given a group G and edge labels forming a cocycle, the total space has
// n-simplices X_n x G with
//   d_i(sigma, h) = (d_i sigma, h)              for i < n,
//   d_n(sigma, h) = (d_n sigma, h * t(sigma)),  t = label of the last edge,
//   s_i(sigma, h) = (s_i sigma, h),
// where degenerate edges carry the unit.  The simplicial identities reduce to
// the cocycle condition l(d0 a) * l(d2 a) = l(d1 a) on 2-simplices.
//
// universal_cover additionally demands a certificate that the labeled group
// is the whole fundamental group (finite, cyclic certification only); the raw
// construction is exposed as twisted_cover for plain covers.

#include <map>
#include <string>
#include <vector>

#include "cobarkit/sset.hpp"

namespace ck {

struct invalid_cover : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> mult;  // mult[a][b], unit is 0

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  bool is_cyclic_standard() const;  // mult[a][b] == (a+b) mod order
  void check() const;               // associativity, unit, inverses
};

// labeling: nondegenerate 1-simplex name -> group element (unlabeled edges
// default to the unit)
SSetPtr twisted_cover(const SSetPtr& x, const FiniteGroup& g,
                      const std::map<std::string, int>& labeling);

// Requires x's pi1 oracle to certify pi1 = Z/n with n = |g| (or the trivial
// group) and the labeling to match the oracle labels.
SSetPtr universal_cover(const SSetPtr& x, const FiniteGroup& g,
                        const std::map<std::string, int>& labeling, int level);

}  // namespace ck
