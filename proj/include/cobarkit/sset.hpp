#pragma once

// Simplicial sets presented by nondegenerate simplices.
//
// An SSet stores, per dimension, the nondegenerate simplices with their faces
// (as canonical SimplexRefs).  Degenerate simplices are never stored; they are
// represented by SimplexRef words.  A set may be populated eagerly via
// add_simplex, or lazily by a generator rule that fills one dimension at a
// time (used for infinite objects that are finite in each dimension).
//
// A set built only up to a finite level (e.g. the result of a truncated
// colimit) carries a truncation bound; querying beyond it throws.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cobarkit/oracle.hpp"
#include "cobarkit/simplex_ref.hpp"

namespace ck {

struct insufficient_truncation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SSet;
using SSetPtr = std::shared_ptr<const SSet>;

class SSet {
 public:
  using Rule = std::function<void(SSet&, int dim)>;

  SSet() = default;
  explicit SSet(std::string label) : label_(std::move(label)) {}

  // --- construction -------------------------------------------------------
  // Faces must reference simplices already added.  Returns the new index.
  int add_simplex(int dim, std::string name, std::vector<SimplexRef> faces);
  void set_rule(Rule rule);          // called once per dimension, ascending
  void set_truncation(int level);    // queries above `level` throw

  // --- queries ------------------------------------------------------------
  const std::string& label() const { return label_; }
  int truncation() const { return truncation_; }

  int count(int dim) const;  // number of nondegenerate simplices
  const std::string& name(SimplexKey k) const;
  std::string ref_str(const SimplexRef& r) const;  // e.g. "s1 s0 sigma"
  SimplexKey key_of(int dim, const std::string& name) const;
  std::optional<SimplexKey> find(int dim, const std::string& name) const;
  // stored face of a nondegenerate simplex
  const SimplexRef& base_face(SimplexKey k, int i) const;

  // Certified descriptions of word problems over this object, attached only
  // by constructions that can justify them.
  std::optional<OracleSpec> tau_oracle;  // for the path monoid
  std::optional<OracleSpec> pi1_oracle;  // for the localized/group version

 private:
  struct Cell {
    std::string name;
    std::vector<SimplexRef> faces;
  };

  void ensure_level(int dim) const;
  void check_queryable(int dim) const;

  std::string label_;
  Rule rule_;
  int truncation_ = -1;  // -1: unbounded
  mutable int built_to_ = -1;
  mutable bool building_ = false;
  mutable std::recursive_mutex mu_;
  mutable std::vector<std::vector<Cell>> levels_;
  mutable std::vector<std::map<std::string, int>> by_name_;
};

// d_i applied to an arbitrary canonical ref, using
//   d_i s_j = s_{j-1} d_i (i < j),  d_i s_j = id (i = j, j+1),
//   d_i s_j = s_j d_{i-1} (i > j+1).
SimplexRef face(const SSet& x, const SimplexRef& r, int i);

// A face/degeneracy symbol, parsed from "d3" / "s0".
struct OpSym {
  bool is_face = true;
  int index = 0;
  static OpSym parse(const std::string& s);
  std::string str() const;
};

// Apply a composite operator word to a simplex and return the canonical form.
// The word is in composition order: the last symbol acts first.
SimplexRef normalize_operator(const SSet& x, const std::vector<OpSym>& word,
                              const SimplexRef& start);

// All simplices of the given dimension in canonical form (nondegenerate ones
// first, then degenerate, ordered by base dimension / index / word).
std::vector<SimplexRef> all_simplices(const SSet& x, int dim);

struct ValidationReport {
  bool ok = true;
  bool reduced = false;
  int checked_to = -1;
  std::vector<std::string> violations;
  std::string str() const;
};

// Check the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every
// stored simplex up to `level`, plus face shape and reference well-formedness.
ValidationReport validate(const SSet& x, int level);

}  // namespace ck
