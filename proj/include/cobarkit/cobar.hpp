#pragma once

// The cobar construction on connected dg coalgebras and everything built on
// top of it:
//
//  - cobar / cobar_map: the free dg algebra on the reduced classes shifted
//    down one degree, with D(x) = -shift(dx) + sum (-1)^{|x'|} x' * x'' over
//    the interior coproduct terms, and the induced maps;
//  - lambda: simplicial set -> chains -> normalized chains -> cobar bundle;
//  - h0_presentation: degree-zero generators modulo the differentials of the
//    degree-one generators;
//  - fundamental_bialgebra: that presentation for normalized chains, with
//    the comultiplication induced by the level-one coproduct and the
//    underlying simplicial set's monoid oracle when present;
//  - monoidlike_reps / localized_cobar: grouplike-minus-one representatives
//    of the degree-one classes, and the cobar construction with those
//    representatives inverted by amalgamating one looped circle per
//    representative and eliminating its forward generator;
//  - bar / DgAlgebraInput: the dual construction back from explicit finite
//    dg algebra tables to a dg coalgebra of words.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobarkit/coalgebra.hpp"
#include "cobarkit/dg_coalgebra.hpp"
#include "cobarkit/free_dga.hpp"
#include "cobarkit/presentation_alg.hpp"
#include "cobarkit/sset.hpp"

namespace ck {

// generators: one per reduced class in degrees 1..top of `n`, named after
// the class, in degree one lower; gen_source (when supplied) receives the
// (class degree, class index) origin of each generator.  Throws
// malformed_input unless n is connected.
FreeDgAlgebra cobar(const DgCoalgebra& n, std::vector<std::pair<int, int>>* gen_source = nullptr);

// the induced algebra map between the cobar constructions of two coalgebras
// related by a dg coalgebra map (generator ordering is the deterministic one
// used by cobar)
DgAlgebraMap cobar_map(const DgCoalgebraMap& f, const DgCoalgebra& src, const DgCoalgebra& tgt);

// chains -> normalized chains -> cobar, bundled with the provenance needed
// to walk back down
struct CobarOfSpace {
  SimplicialCoalgebra chains;
  DgCoalgebra normalized;
  FreeDgAlgebra omega;
  std::vector<std::pair<int, int>> gen_source;
};
CobarOfSpace lambda(const SSetPtr& x, const Field& f, int level);

// the degree-zero homology presentation of a free dg algebra: its
// degree-zero generators subject to the differentials of its degree-one
// generators
AlgebraPresentation h0_presentation(const FreeDgAlgebra& a, const std::string& label = "");

// the fundamental bialgebra of a simplicial coalgebra: the degree-zero cobar
// presentation of its normalized chains, with comultiplication obtained by
// sending a level-one basis element to (its class generator) + 1 -- the unit
// for degenerate legs -- and the counit zero on generators.  Needs two
// levels of c; inherits the underlying monoid oracle when one is attached.
AlgebraPresentation fundamental_bialgebra(const SimplicialCoalgebra& c);

// grouplike-minus-one representatives, one per degree-one class: for
// set-like coalgebras the canonical choice (class generator) + 1 shifted
// back by one, i.e. the cobar generator plus the unit.  Other coalgebras
// have no canonical choice and must supply their own; this throws
// malformed_input for them.
std::vector<NcPolynomial> monoidlike_reps(const SimplicialCoalgebra& c, const DgCoalgebra& n,
                                          const FreeDgAlgebra& omega);

// The cobar construction with the given degree-zero representatives made
// invertible: one looped circle is amalgamated per representative p, gluing
// its forward generator u_p to rep_p - 1, so u_p is eliminated by
// substitution and its reverse companion v_p survives as a new generator
// witnessing the inverse.  Each rep must be a degree-zero cycle of `omega =
// cobar(n)`; with no reps the result is cobar(n) itself, unchanged.
FreeDgAlgebra localized_cobar(const DgCoalgebra& n, const std::vector<NcPolynomial>& reps);

// A finite slice of an augmented dg algebra given by explicit tables: a
// named basis per degree -- degree zero must be exactly the unit -- the
// differential and the pairwise products.  Missing diff or product blocks
// read as zero; product columns are indexed left * dim(right degree) +
// right.
struct DgAlgebraInput {
  Field field = Field::q();
  std::string label;
  int top = 0;
  std::vector<std::vector<std::string>> basis;
  std::map<int, SparseMatrix> diff;                    // diff[k]: dim(k-1) x dim(k)
  std::map<std::pair<int, int>, SparseMatrix> product; // j,k >= 1, j+k <= top

  int dim(int n) const {
    return n < 0 || n > top ? 0 : static_cast<int>(basis[static_cast<size_t>(n)].size());
  }
  // unit shape, table shapes, the degree-one differential vanishing (forced
  // by the augmentation being a chain map), dd = 0, Leibniz, and
  // associativity on every tabulated triple; empty = pass
  std::vector<std::string> check() const;
};

// the ground field as a dg algebra, tabulated (with empty positive degrees)
// through the given top degree
DgAlgebraInput unit_algebra(const Field& f, int top = 0);

// the exterior algebra on one degree-one generator 'x' (dx = 0, x*x = 0),
// tabulated through the given top degree
DgAlgebraInput exterior_on_one_generator(const Field& f, int top);

// tabulate a free dg algebra without degree-zero generators through degree
// `top` (word bases are finite there); throws malformed_input otherwise
DgAlgebraInput dga_input_from_free(const FreeDgAlgebra& a, int top);

// The bar construction through the given degree: the dg coalgebra of words
// in the suspended positive-degree basis, with the tensor differential
// combining suspended internal differentials and neighbor merges, and the
// deconcatenation coproduct.  Requires tables through degree max_degree - 1.
DgCoalgebra bar(const DgAlgebraInput& a, int max_degree);

}  // namespace ck
