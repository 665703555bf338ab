#include "cobarkit/chain_complex.hpp"

#include <sstream>

namespace ck {

void ChainComplexSlice::check_dd_zero(const Field&) const {
  for (std::int64_t k = min_degree + 2; k <= max_degree; ++k) {
    const SparseMatrix* dk = diff(k);
    const SparseMatrix* dk1 = diff(k - 1);
    if (!dk || !dk1) continue;
    if (!(is_complete(k) && is_complete(k - 1) && is_complete(k - 2))) continue;
    if (!((*dk1) * (*dk)).is_zero())
      throw corrupt_complex("d∘d != 0 between degrees " + std::to_string(k) + " and " +
                            std::to_string(k - 2));
  }
}

const BettiTable::Row* BettiTable::at(std::int64_t degree) const {
  for (auto& r : rows)
    if (r.degree == degree) return &r;
  return nullptr;
}

std::string BettiTable::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << rows[i].dim;
    if (!rows[i].exact) os << "~";
  }
  os << ")";
  return os.str();
}

bool BettiTable::operator==(const BettiTable& o) const {
  if (rows.size() != o.rows.size()) return false;
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i].degree != o.rows[i].degree || rows[i].dim != o.rows[i].dim ||
        rows[i].exact != o.rows[i].exact)
      return false;
  return true;
}

BettiTable homology(const ChainComplexSlice& c, const Field& f) {
  c.check_dd_zero(f);
  BettiTable t;
  for (std::int64_t k = c.min_degree; k <= c.max_degree; ++k) {
    std::int64_t nk = c.size(k);
    // kernel of d_k (d at the bottom degree is the zero map when below_is_zero)
    std::int64_t dim_ker;
    bool ker_known = true;
    const SparseMatrix* dk = c.diff(k);
    if (dk) {
      dim_ker = nk - rank(*dk, f);
    } else if (k == c.min_degree && c.below_is_zero) {
      dim_ker = nk;
    } else {
      dim_ker = nk;  // treat missing d as zero map, flagged approximate below
      ker_known = false;
    }
    // image of d_{k+1}
    std::int64_t rank_next = 0;
    bool im_known = false;
    if (k + 1 <= c.max_degree) {
      const SparseMatrix* dk1 = c.diff(k + 1);
      if (dk1) {
        rank_next = rank(*dk1, f);
        im_known = true;
      } else if (c.size(k + 1) == 0) {
        im_known = true;
      }
    }
    bool exact = ker_known && im_known && c.is_complete(k - 1) && c.is_complete(k) &&
                 c.is_complete(k + 1);
    t.rows.push_back({k, dim_ker - rank_next, exact});
  }
  return t;
}

namespace betti {
BettiTable table(std::vector<std::int64_t> dims, std::vector<bool> exact) {
  BettiTable t;
  for (size_t i = 0; i < dims.size(); ++i)
    t.rows.push_back({static_cast<std::int64_t>(i), dims[i], i < exact.size() && exact[i]});
  return t;
}
}  // namespace betti

}  // namespace ck
