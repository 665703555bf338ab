#pragma once

// Normalized chains of a simplicial coalgebra: a coaugmented dg coalgebra.
//
// Degree-n basis = nondegenerate level-n basis classes (degenerate classes
// are quotiented away eagerly).  The differential is the alternating face
// sum.  The coproduct splits each class into a front face tensor an iterated
// zeroth face of its two levelwise coproduct legs:
//
//   cop(x) = sum over p = 1..n+1 of (d_p ... d_n x') (x) (d_0^{p-1} x'')
//
// with no signs; the left factor has degree p-1, the right factor n-p+1.
// The coproduct is coassociative and counital but NOT cocommutative; the
// differential is a coderivation for it with the usual Koszul sign.

#include <optional>
#include <string>
#include <vector>

#include "cobarkit/chain_complex.hpp"
#include "cobarkit/coalgebra.hpp"

namespace ck {

struct DgCoalgebra {
  struct Term {
    Scalar coef;
    int left_deg = 0;  // degree of the left leg; the right leg has total - left_deg
    int left = 0;
    int right = 0;
  };

  Field field = Field::q();
  std::string label;
  int top = -1;  // degrees 0..top
  std::vector<std::vector<std::string>> names;
  // diff[n]: degree n -> n-1 for 1 <= n <= top; diff[0] has zero rows
  std::vector<SparseMatrix> diff;
  std::vector<std::vector<std::vector<Term>>> cop;  // per degree, per basis element
  std::vector<Scalar> counit;  // on degree 0 (zero in higher degrees)
  int coaug = 0;               // degree-0 index of the coaugmentation class

  // plumbing back to the simplicial side (set when built by
  // normalized_chains): per level, the degree-n class of each level basis
  // element (-1 for degenerate classes) and the level index of each class
  std::vector<std::vector<int>> class_of;
  std::vector<std::vector<int>> rep_of;

  int dim(int n) const {
    return n < 0 || n > top ? 0 : static_cast<int>(names[static_cast<size_t>(n)].size());
  }
  bool connected() const { return top >= 0 && dim(0) == 1; }
  // basis indices spanning the coaugmentation complement in the given degree
  std::vector<int> reduced_basis(int n) const;

  // All axioms, exactly: shapes, dd = 0, coassociativity, counit laws,
  // coderivation (Koszul sign), coaugmentation group-likeness.  Empty = pass.
  std::vector<std::string> check() const;

  // least k <= bound with iterated reduced coproduct^k of the element zero;
  // nullopt when the bound is exhausted first
  std::optional<int> conilpotence_degree(int deg, int idx, int bound) const;
};

// nondegenerate-class chains of a connected simplicial coalgebra whose
// degeneracy matrices map basis to basis
DgCoalgebra normalized_chains(const SimplicialCoalgebra& c, int level);

// the front-face/zeroth-face coproduct expansion of a level-n vector,
// before the nondegenerate quotient: terms live in levels of c
struct AwTerm {
  Scalar coef;
  int left_level = 0;  // the right leg lives in level n - left_level
  int left = 0;
  int right = 0;
};
std::vector<AwTerm> aw_on_element(const SimplicialCoalgebra& c, int n,
                                  const std::vector<Scalar>& x);

struct DgCoalgebraMap {
  std::string label;
  std::vector<SparseMatrix> mats;  // per degree 0..top of the source

  const SparseMatrix& at(int n) const;
};

// the induced map on nondegenerate classes (sources/targets built by
// normalized_chains from the given simplicial sides)
DgCoalgebraMap normalized_map(const CoalgebraMap& f, const DgCoalgebra& src,
                              const DgCoalgebra& tgt);

// differential, coproduct, counit and coaugmentation compatibility; empty = pass
std::vector<std::string> check_dg_map(const DgCoalgebra& src,
                                      const DgCoalgebra& tgt,
                                      const DgCoalgebraMap& m);

// the underlying complex of the dg coalgebra as an exactfield slice; every
// represented degree is complete, so homology is exact strictly below top
ChainComplexSlice dg_slice(const DgCoalgebra& n);

BettiTable chain_homology(const DgCoalgebra& n, int level);
// builds the chains to level+1 internally so degrees 0..level are exact
BettiTable chain_homology(const SSetPtr& x, const Field& f, int level);

}  // namespace ck
