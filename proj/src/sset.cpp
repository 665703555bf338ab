#include "cobarkit/sset.hpp"

#include <algorithm>
#include <sstream>

namespace ck {

// --- SSet construction ------------------------------------------------------

int SSet::add_simplex(int dim, std::string name, std::vector<SimplexRef> faces) {
  if (dim < 0) throw malformed_input("negative simplex dimension");
  if (dim == 0) {
    if (!faces.empty()) throw malformed_input("a 0-simplex has no faces");
  } else if (static_cast<int>(faces.size()) != dim + 1) {
    throw malformed_input("a " + std::to_string(dim) + "-simplex needs " +
                          std::to_string(dim + 1) + " faces, got " +
                          std::to_string(faces.size()) + " for '" + name + "'");
  }
  if (static_cast<int>(levels_.size()) <= dim) {
    levels_.resize(dim + 1);
    by_name_.resize(dim + 1);
  }
  for (const auto& f : faces) {
    if (f.dim() != dim - 1)
      throw malformed_input("face of '" + name + "' has dimension " +
                            std::to_string(f.dim()) + ", expected " +
                            std::to_string(dim - 1));
    // degeneracy word must be strictly decreasing and in range as applied
    int cur = f.base.dim;
    for (auto it = f.degs.rbegin(); it != f.degs.rend(); ++it) {
      if (*it < 0 || *it > cur)
        throw malformed_input("face of '" + name + "' has out-of-range degeneracy");
      ++cur;
    }
    for (size_t i = 0; i + 1 < f.degs.size(); ++i)
      if (f.degs[i] <= f.degs[i + 1])
        throw malformed_input("face of '" + name + "' has non-canonical degeneracy word");
    if (f.base.dim >= static_cast<int>(levels_.size()) ||
        f.base.idx < 0 ||
        f.base.idx >= static_cast<int>(levels_[f.base.dim].size()))
      throw malformed_input("face of '" + name + "' references a missing simplex");
  }
  if (by_name_[dim].count(name))
    throw malformed_input("duplicate simplex name '" + name + "' in dimension " +
                          std::to_string(dim));
  int idx = static_cast<int>(levels_[dim].size());
  by_name_[dim][name] = idx;
  levels_[dim].push_back(Cell{std::move(name), std::move(faces)});
  return idx;
}

void SSet::set_rule(Rule rule) {
  rule_ = std::move(rule);
  built_to_ = static_cast<int>(levels_.size()) - 1;
}

void SSet::set_truncation(int level) { truncation_ = level; }

// --- SSet queries -----------------------------------------------------------

void SSet::check_queryable(int dim) const {
  if (truncation_ >= 0 && dim > truncation_)
    throw insufficient_truncation(
        "'" + label_ + "' is only known up to level " +
        std::to_string(truncation_) + "; dimension " + std::to_string(dim) +
        " was requested (rebuild with a higher level)");
}

void SSet::ensure_level(int dim) const {
  if (!rule_ || dim <= built_to_) return;
  std::lock_guard<std::recursive_mutex> lock(mu_);
  while (built_to_ < dim) {
    if (building_)
      throw std::logic_error("generator rule queried its own dimension");
    building_ = true;
    int d = built_to_ + 1;
    try {
      rule_(const_cast<SSet&>(*this), d);
    } catch (...) {
      building_ = false;
      throw;
    }
    building_ = false;
    built_to_ = d;
  }
}

int SSet::count(int dim) const {
  if (dim < 0) return 0;
  check_queryable(dim);
  ensure_level(dim);
  if (dim >= static_cast<int>(levels_.size())) return 0;
  return static_cast<int>(levels_[dim].size());
}

const std::string& SSet::name(SimplexKey k) const {
  check_queryable(k.dim);
  ensure_level(k.dim);
  if (k.dim < 0 || k.dim >= static_cast<int>(levels_.size()) || k.idx < 0 ||
      k.idx >= static_cast<int>(levels_[k.dim].size()))
    throw malformed_input("simplex key out of range");
  return levels_[k.dim][k.idx].name;
}

std::string SSet::ref_str(const SimplexRef& r) const {
  std::ostringstream os;
  for (int d : r.degs) os << 's' << d << ' ';
  os << name(r.base);
  return os.str();
}

SimplexKey SSet::key_of(int dim, const std::string& nm) const {
  auto k = find(dim, nm);
  if (!k)
    throw malformed_input("no " + std::to_string(dim) + "-simplex named '" +
                          nm + "' in '" + label_ + "'");
  return *k;
}

std::optional<SimplexKey> SSet::find(int dim, const std::string& nm) const {
  if (dim < 0) return std::nullopt;
  check_queryable(dim);
  ensure_level(dim);
  if (dim >= static_cast<int>(by_name_.size())) return std::nullopt;
  auto it = by_name_[dim].find(nm);
  if (it == by_name_[dim].end()) return std::nullopt;
  return SimplexKey{dim, it->second};
}

const SimplexRef& SSet::base_face(SimplexKey k, int i) const {
  check_queryable(k.dim);
  ensure_level(k.dim);
  if (k.dim <= 0)
    throw malformed_operator("face of a 0-simplex");
  if (i < 0 || i > k.dim)
    throw malformed_operator("face index d_" + std::to_string(i) +
                             " out of range on a " + std::to_string(k.dim) +
                             "-simplex");
  return levels_[k.dim][k.idx].faces[i];
}

// --- general face application -----------------------------------------------

SimplexRef face(const SSet& x, const SimplexRef& r, int i) {
  int n = r.dim();
  if (n == 0) throw malformed_operator("face of a 0-simplex");
  if (i < 0 || i > n)
    throw malformed_operator("face index d_" + std::to_string(i) +
                             " out of range on a " + std::to_string(n) +
                             "-simplex");
  if (r.degs.empty()) return x.base_face(r.base, i);
  int j = r.degs.front();
  SimplexRef inner{std::vector<int>(r.degs.begin() + 1, r.degs.end()), r.base};
  if (i == j || i == j + 1) return inner;
  if (i < j) return degenerate(face(x, inner, i), j - 1);
  return degenerate(face(x, inner, i - 1), j);
}

// --- operator words ----------------------------------------------------------

OpSym OpSym::parse(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'd' && s[0] != 's'))
    throw malformed_operator("bad operator symbol '" + s + "' (want d<i> or s<i>)");
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw malformed_operator("bad operator symbol '" + s + "'");
  return OpSym{s[0] == 'd', std::stoi(s.substr(1))};
}

std::string OpSym::str() const {
  return (is_face ? "d" : "s") + std::to_string(index);
}

SimplexRef normalize_operator(const SSet& x, const std::vector<OpSym>& word,
                              const SimplexRef& start) {
  SimplexRef cur = start;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->is_face)
      cur = face(x, cur, it->index);
    else
      cur = degenerate(cur, it->index);
  }
  return cur;
}

// --- enumeration --------------------------------------------------------------

namespace {
// strictly decreasing words of length `len` valid on a base of dimension k;
// built innermost-first then reversed
void gen_words(int k, int len, int min_next, std::vector<int>& acc,
               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == len) {
    std::vector<int> w(acc.rbegin(), acc.rend());
    out.push_back(std::move(w));
    return;
  }
  int applied = static_cast<int>(acc.size());  // degeneracies already applied
  for (int i = min_next; i <= k + applied; ++i) {
    acc.push_back(i);
    gen_words(k, len, i + 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<SimplexRef> all_simplices(const SSet& x, int dim) {
  std::vector<SimplexRef> out;
  for (int k = 0; k <= dim; ++k) {
    int cnt = x.count(k);
    int len = dim - k;
    std::vector<std::vector<int>> words;
    std::vector<int> acc;
    gen_words(k, len, 0, acc, words);
    for (int idx = 0; idx < cnt; ++idx)
      for (const auto& w : words) out.push_back(SimplexRef{w, {k, idx}});
  }
  return out;
}

// --- validation ----------------------------------------------------------------

std::string ValidationReport::str() const {
  std::ostringstream os;
  os << (ok ? "valid" : "INVALID") << " (checked to level " << checked_to
     << ", " << (reduced ? "reduced" : "not reduced") << ")";
  for (const auto& v : violations) os << "\n  violation: " << v;
  return os.str();
}

ValidationReport validate(const SSet& x, int level) {
  ValidationReport rep;
  int top = level;
  if (x.truncation() >= 0) top = std::min(top, x.truncation());
  rep.checked_to = top;
  rep.reduced = x.count(0) == 1;
  for (int n = 2; n <= top; ++n) {
    for (int idx = 0; idx < x.count(n); ++idx) {
      SimplexRef r = SimplexRef::of({n, idx});
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          SimplexRef a = face(x, face(x, r, j), i);
          SimplexRef b = face(x, face(x, r, i), j - 1);
          if (a != b) {
            rep.ok = false;
            rep.violations.push_back(
                "d" + std::to_string(i) + " d" + std::to_string(j) + " '" +
                x.name(r.base) + "' = " + x.ref_str(a) + " but d" +
                std::to_string(j - 1) + " d" + std::to_string(i) + " gives " +
                x.ref_str(b));
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace ck
