#pragma once

// Maps of simplicial sets.
//
// A map is determined by the images of nondegenerate simplices; images of
// degenerate ones follow by re-applying the degeneracy word.  Images may be
// stored eagerly or produced by a rule (for maps out of lazily built sets).

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cobarkit/sset.hpp"

namespace ck {

class SSetMap {
 public:
  using Rule = std::function<SimplexRef(SimplexKey)>;

  SSetMap() = default;
  SSetMap(std::string label, SSetPtr src, SSetPtr tgt)
      : label_(std::move(label)), src_(std::move(src)), tgt_(std::move(tgt)) {}

  const std::string& label() const { return label_; }
  const SSetPtr& src() const { return src_; }
  const SSetPtr& tgt() const { return tgt_; }

  // image of a nondegenerate source simplex, as a ref in the target
  void set_image(SimplexKey k, SimplexRef image);
  void set_rule(Rule rule);  // consulted when no stored image exists

  SimplexRef apply_base(SimplexKey k) const;
  SimplexRef apply(const SimplexRef& r) const;

  static SSetMap identity(const SSetPtr& x);
  // collapse everything to the unique vertex of a reduced target
  static SSetMap constant(const SSetPtr& x, const SSetPtr& pt);

  SSetMap compose_after(const SSetMap& first) const;  // this ∘ first

  // Check d_i f = f d_i on all nondegenerate source simplices up to `level`;
  // returns a list of violations (empty = commutes).
  std::vector<std::string> check_faces(int level) const;

 private:
  std::string label_;
  SSetPtr src_, tgt_;
  Rule rule_;
  mutable std::vector<std::vector<SimplexRef>> images_;
  mutable std::vector<std::vector<bool>> have_;
};

// true if the two maps agree on all nondegenerate simplices up to `level`
bool maps_equal(const SSetMap& a, const SSetMap& b, int level);

}  // namespace ck
