#include "cobarkit/sset_map.hpp"

#include <sstream>

namespace ck {

void SSetMap::set_image(SimplexKey k, SimplexRef image) {
  if (image.dim() != k.dim)
    throw malformed_input("map '" + label_ + "': image of a " +
                          std::to_string(k.dim) + "-simplex has dimension " +
                          std::to_string(image.dim()));
  if (static_cast<int>(images_.size()) <= k.dim) {
    images_.resize(k.dim + 1);
    have_.resize(k.dim + 1);
  }
  if (static_cast<int>(images_[k.dim].size()) <= k.idx) {
    images_[k.dim].resize(k.idx + 1);
    have_[k.dim].resize(k.idx + 1, false);
  }
  images_[k.dim][k.idx] = std::move(image);
  have_[k.dim][k.idx] = true;
}

void SSetMap::set_rule(Rule rule) { rule_ = std::move(rule); }

SimplexRef SSetMap::apply_base(SimplexKey k) const {
  if (k.dim < static_cast<int>(images_.size()) &&
      k.idx < static_cast<int>(images_[k.dim].size()) && have_[k.dim][k.idx])
    return images_[k.dim][k.idx];
  if (!rule_)
    throw malformed_input("map '" + label_ + "' has no image for '" +
                          src_->name(k) + "'");
  SimplexRef img = rule_(k);
  const_cast<SSetMap*>(this)->set_image(k, img);
  return img;
}

SimplexRef SSetMap::apply(const SimplexRef& r) const {
  SimplexRef img = apply_base(r.base);
  for (auto it = r.degs.rbegin(); it != r.degs.rend(); ++it)
    img = degenerate(img, *it);
  return img;
}

SSetMap SSetMap::identity(const SSetPtr& x) {
  SSetMap m("id_" + x->label(), x, x);
  m.set_rule([](SimplexKey k) { return SimplexRef::of(k); });
  return m;
}

SSetMap SSetMap::constant(const SSetPtr& x, const SSetPtr& pt) {
  if (pt->count(0) != 1)
    throw malformed_input("constant map target must have a unique vertex");
  SSetMap m("collapse_" + x->label(), x, pt);
  m.set_rule([](SimplexKey k) {
    SimplexRef r = SimplexRef::of({0, 0});
    for (int i = 0; i < k.dim; ++i) r = degenerate(r, i);
    return r;
  });
  return m;
}

SSetMap SSetMap::compose_after(const SSetMap& first) const {
  if (first.tgt_.get() != src_.get())
    throw malformed_input("composite '" + label_ + "' after '" + first.label_ +
                          "': middle objects differ");
  SSetMap m(label_ + "*" + first.label_, first.src_, tgt_);
  const SSetMap* outer = this;
  const SSetMap* inner = &first;
  m.set_rule([outer, inner](SimplexKey k) {
    return outer->apply(inner->apply_base(k));
  });
  return m;
}

std::vector<std::string> SSetMap::check_faces(int level) const {
  std::vector<std::string> bad;
  int top = level;
  if (src_->truncation() >= 0) top = std::min(top, src_->truncation());
  for (int n = 1; n <= top; ++n) {
    for (int idx = 0; idx < src_->count(n); ++idx) {
      SimplexRef r = SimplexRef::of({n, idx});
      for (int i = 0; i <= n; ++i) {
        SimplexRef a = apply(face(*src_, r, i));
        SimplexRef b = face(*tgt_, apply(r), i);
        if (a != b) {
          std::ostringstream os;
          os << "map '" << label_ << "': f(d" << i << ' ' << src_->name(r.base)
             << ") = " << tgt_->ref_str(a) << " but d" << i
             << " f = " << tgt_->ref_str(b);
          bad.push_back(os.str());
        }
      }
    }
  }
  return bad;
}

bool maps_equal(const SSetMap& a, const SSetMap& b, int level) {
  if (a.src().get() != b.src().get() || a.tgt().get() != b.tgt().get())
    return false;
  int top = level;
  if (a.src()->truncation() >= 0) top = std::min(top, a.src()->truncation());
  for (int n = 0; n <= top; ++n)
    for (int idx = 0; idx < a.src()->count(n); ++idx)
      if (a.apply_base({n, idx}) != b.apply_base({n, idx})) return false;
  return true;
}

}  // namespace ck
