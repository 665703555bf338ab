#include "cobarkit/simplex_ref.hpp"

#include <sstream>

namespace ck {

std::string SimplexRef::key_str() const {
  std::ostringstream os;
  if (!degs.empty()) {
    os << "s[";
    for (size_t i = 0; i < degs.size(); ++i) {
      if (i) os << ',';
      os << degs[i];
    }
    os << ']';
  }
  os << base.dim << ':' << base.idx;
  return os.str();
}

SimplexRef degenerate(const SimplexRef& r, int i) {
  if (i < 0 || i > r.dim())
    throw malformed_operator("degeneracy index out of range: s_" +
                             std::to_string(i) + " on a " +
                             std::to_string(r.dim()) + "-simplex");
  // The new s_i is outermost; push it inward past each stored index j with
  // i <= j via s_i s_j = s_{j+1} s_i until the word is decreasing again.
  SimplexRef out = r;
  size_t pos = 0;
  while (pos < out.degs.size() && i <= out.degs[pos]) {
    out.degs[pos] += 1;
    ++pos;
  }
  out.degs.insert(out.degs.begin() + static_cast<long>(pos), i);
  return out;
}

}  // namespace ck
