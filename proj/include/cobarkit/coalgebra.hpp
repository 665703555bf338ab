#pragma once

// Simplicial cocommutative coalgebras over a field.
//
// A level is a basis-presented coalgebra (structure constants for the
// coproduct, a counit vector); a simplicial coalgebra is a finite stack of
// levels 0..top with face/degeneracy matrices between them.  The simplicial
// chains of a simplicial set are the set-like instance: basis = simplices
// (canonical refs, degenerate ones included), diagonal coproduct, counit 1,
// structure maps induced by the face/degeneracy maps on refs.
//
// Levels are materialized up to the requested top at construction; laziness
// lives in the underlying SSet, so deeper windows are obtained by rebuilding
// with a larger level.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cobarkit/sparse_matrix.hpp"
#include "cobarkit/sset.hpp"
#include "cobarkit/sset_map.hpp"

namespace ck {

struct CoTerm {
  Scalar coef;
  int left = 0;
  int right = 0;
};

struct Coalgebra {
  Field field = Field::q();
  std::vector<std::string> names;
  std::vector<std::vector<CoTerm>> cop;  // Delta of each basis element
  std::vector<Scalar> counit;
  bool set_like = false;

  int dim() const { return static_cast<int>(names.size()); }
  // coassociativity, counit laws, cocommutativity — exact; empty = all hold
  std::vector<std::string> check_laws() const;
};

struct SimplicialCoalgebra {
  Field field = Field::q();
  std::string label;
  int top = -1;  // levels 0..top are present
  std::vector<Coalgebra> levels;
  // face[n][i]: level n -> n-1 (1 <= n <= top, 0 <= i <= n)
  std::vector<std::vector<SparseMatrix>> face;
  // deg[n][i]: level n -> n+1 (0 <= n < top, 0 <= i <= n)
  std::vector<std::vector<SparseMatrix>> deg;
  bool set_like = false;
  // for chains instances: the simplex behind each basis element, plus the
  // reverse lookup
  std::vector<std::vector<SimplexRef>> refs;
  std::vector<std::map<SimplexRef, int>> ref_index;
  SSetPtr underlying;  // set when built from a simplicial set

  const Coalgebra& level(int n) const;
  int dim(int n) const { return n < 0 || n > top ? 0 : levels[n].dim(); }
  bool connected() const { return top >= 0 && levels[0].dim() == 1; }
  int basis_index(int n, const SimplexRef& r) const;  // set-like lookup
  // index of the fully degenerate base vertex at level n (connected set-like)
  int unit_index(int n) const;

  // All invariants, exactly: levelwise laws, structure maps are coalgebra
  // morphisms, simplicial identities as matrix equations.  Empty = pass.
  // The interval tensor is the one intermediate that is legitimately
  // non-connected; it opts out of the level-0 dimension check.
  std::vector<std::string> check(bool require_connected = true) const;
};

struct CoalgebraMap {
  std::string label;
  std::vector<SparseMatrix> mats;  // per level 0..top of the source

  const SparseMatrix& at(int n) const;
};

// F[x] up to the given level; x must be reduced.
SimplicialCoalgebra chains_coalgebra(const SSetPtr& x, const Field& f, int level);

// the coalgebra map F[g] induced by a simplicial map (both sides set-like)
CoalgebraMap chains_map(const SSetMap& g, const SimplicialCoalgebra& src,
                        const SimplicialCoalgebra& tgt);

// Check that m is a map of simplicial coalgebras src -> tgt (counit,
// coproduct, faces, degeneracies).  Empty = pass.
std::vector<std::string> check_coalgebra_map(const SimplicialCoalgebra& src,
                                             const SimplicialCoalgebra& tgt,
                                             const CoalgebraMap& m);

struct PointsResult {
  std::vector<std::vector<std::string>> elements;  // per level
  bool exact = false;
  std::string status;  // "exact" | "inconclusive: <why>"
};

// Set-like elements (Delta x = x (x) x, eps x = 1) per level.  Exact on
// set-like bases; otherwise exhaustive over F_p when p^dim <= budget.
PointsResult points(const SimplicialCoalgebra& c, long long budget);

// C (x) F[interval]: level n basis = basis(C_n) x (n+2 monotone 0/1 words)
SimplicialCoalgebra tensor_interval(const SimplicialCoalgebra& c);

// interval word helpers: words at level n are encoded by their number of
// zeros r in 0..n+1; face/degeneracy act by deleting/doubling a letter
int interval_face(int n, int r, int i);
int interval_deg(int n, int r, int i);
std::string interval_word_str(int n, int r);

struct Cylinder {
  SimplicialCoalgebra cyl;
  CoalgebraMap i0, i1, q;
  SimplicialCoalgebra source;   // copy of the input
  std::vector<int> unit_src;    // per level: source index of the base vertex

  // basis bookkeeping at level n: index 0 is the unit; the rest are pairs
  int unit_index() const { return 0; }
  int pair_index(int n, int x_idx, int zeros) const;
  // inverse: (x_idx, zeros) of a non-unit basis element
  std::pair<int, int> pair_of(int n, int idx) const;
};

// Cylinder of a connected set-like simplicial coalgebra: the interval tensor
// with all pairs (base vertex | word) collapsed to a single unit column.
Cylinder cylinder(const SimplicialCoalgebra& c);

struct MappingCylinder {
  SimplicialCoalgebra m;
  CoalgebraMap i;        // C -> M, injective levelwise
  CoalgebraMap p;        // M -> C', with p i = f
  CoalgebraMap s_prime;  // C' -> M, with p s' = id
};

MappingCylinder mapping_cylinder(const CoalgebraMap& f,
                                 const SimplicialCoalgebra& c,
                                 const SimplicialCoalgebra& cprime);

}  // namespace ck
