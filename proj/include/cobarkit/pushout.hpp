#pragma once

// Levelwise pushouts of simplicial sets and the edge localization built from
// them.
//
// The pushout of B <- A -> C is computed dimension by dimension as a set
// quotient of B_n ⊔ C_n by the relation i(a) ~ f(a); the relation commutes
// with faces and degeneracies, so a class is degenerate exactly when it
// contains a degenerate member, and the nondegenerate classes become the
// generators of the result.  The result is truncated at the build level.

#include <functional>
#include <vector>

#include "cobarkit/sset.hpp"
#include "cobarkit/sset_map.hpp"

namespace ck {

struct bad_marking : malformed_input {
  using malformed_input::malformed_input;
};

struct PushoutResult {
  SSetPtr p;
  SSetMap from_b;  // B -> P (defined up to the build level)
  SSetMap from_c;  // C -> P
  // side (0 = B, 1 = C) and member ref for each nondegenerate simplex of p
  std::vector<std::vector<std::pair<int, SimplexRef>>> provenance;
};

PushoutResult pushout(const SSetMap& i_ab, const SSetMap& f_ac, int level,
                      const std::string& label);

struct MarkedSSet {
  SSetPtr base;
  std::vector<SimplexKey> marked;  // nondegenerate 1-simplices

  static MarkedSSet of(SSetPtr base, const std::vector<std::string>& edges);
  static MarkedSSet sharp(SSetPtr base);  // mark every nondegenerate edge
};

struct LocalizationResult {
  SSetPtr k;                   // the localized object
  SSetMap include;             // base -> k
  SSetMap from_wedge;          // wedge of localized circles -> k
  SSetPtr wedge_circles;       // the glued wedge (empty marking: pt)
  std::vector<SSetPtr> circle_copies;
  std::vector<SimplexKey> marked;
  std::vector<std::vector<std::pair<int, SimplexRef>>> provenance;
};

// K(S, W): glue one localized circle along each marked loop class, i.e. the
// pushout of  wedge of circles -> S  against  wedge of circles -> wedge of
// localized circles, together with the canonical inclusion.
LocalizationResult simplicial_localization(const MarkedSSet& m, int level);

// Functorial map K(S, all edges) -> K(T, all edges) induced by f: S -> T,
// collapsing glued circles over edges that f degenerates.
SSetMap localized_map(const SSetMap& f, const LocalizationResult& ks,
                      const LocalizationResult& kt, int level);

}  // namespace ck
