#pragma once

// Free dg algebras: tensor algebras on graded generators with a derivation
// differential, plus finite slices of their underlying complexes.
//
// Truncation has two independent axes: homological degree and word length.
// A degree window is complete (nothing truncated away) when either no length
// bound is in force, or there are no degree-0 generators, so that a word of
// degree d has at most d letters.  Homology is only exact on complete
// windows; the honest flags propagate through BettiTable.

#include <optional>
#include <string>
#include <vector>

#include "cobarkit/chain_complex.hpp"
#include "cobarkit/nc_poly.hpp"

namespace ck {

struct FreeDgAlgebra {
  Field field = Field::q();
  std::string label;
  std::vector<std::string> gen_names;
  std::vector<int> gen_degrees;          // >= 0
  std::vector<NcPolynomial> d_gen;       // degree one lower
  std::vector<Scalar> augmentation;      // degree-0 generators only; 0 by default

  int gens() const { return static_cast<int>(gen_names.size()); }
  int gen_index(const std::string& name) const;  // throws on unknown names
  int degree(const GenWord& w) const;
  bool has_degree0_gens() const;

  // derivation extension: d(ab) = d(a) b + (-1)^{deg a} a d(b)
  NcPolynomial d(const NcPolynomial& p) const;
  // multiplicative evaluation of the augmentation (degree-0 terms only)
  Scalar augment(const NcPolynomial& p) const;

  // canonical text form: terms ordered by (degree, length, lexicographic)
  std::string poly_str(const NcPolynomial& p) const;

  // degree bookkeeping, augmentation support, and dd = 0 on every generator
  std::vector<std::string> check() const;
};

struct TruncationSpec {
  int max_degree = 4;
  std::optional<int> max_length;  // nullopt = unbounded

  static TruncationSpec degrees(int d) { return {d, std::nullopt}; }
  static TruncationSpec bounded(int d, int len) { return {d, len}; }

  // is the degree-d window of words in `a` fully enumerated under this spec?
  bool complete(const FreeDgAlgebra& a, int d) const;
};

// the word basis of one degree under the spec, deterministically ordered by
// (length, lexicographic)
std::vector<GenWord> word_basis(const FreeDgAlgebra& a, const TruncationSpec& t,
                                int degree);

// underlying complex of the algebra in degrees 0..max_degree
ChainComplexSlice cobar_complex_slice(const FreeDgAlgebra& a,
                                      const TruncationSpec& t);

BettiTable cobar_homology(const FreeDgAlgebra& a, const TruncationSpec& t,
                          const Field& f);

// an algebra map given on generators, extended multiplicatively
struct DgAlgebraMap {
  std::string label;
  std::vector<NcPolynomial> gen_images;  // per source generator

  NcPolynomial apply(const NcPolynomial& p, const Field& f) const;
};

// commutes with the differentials on every source generator; empty = pass
std::vector<std::string> check_dga_map(const FreeDgAlgebra& src,
                                       const FreeDgAlgebra& tgt,
                                       const DgAlgebraMap& m);

// the matrix of m between one degree of the two word bases.  Image words
// that fall outside a complete target window throw malformed_input; on an
// incomplete window they are projected away (such windows are never used
// for exact homology comparisons).
SparseMatrix dga_map_matrix(const FreeDgAlgebra& src, const TruncationSpec& ts,
                            const FreeDgAlgebra& tgt, const TruncationSpec& tt,
                            const DgAlgebraMap& m, int degree);

}  // namespace ck
