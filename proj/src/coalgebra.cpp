#include "cobarkit/coalgebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace ck {

namespace {

using PairKey = std::pair<int, int>;
using PairSum = std::map<PairKey, Scalar>;
using TripleKey = std::array<int, 3>;
using TripleSum = std::map<TripleKey, Scalar>;

void add_to(PairSum& m, PairKey k, const Scalar& s) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (!s.is_zero()) m.emplace(k, s);
    return;
  }
  it->second = it->second + s;
  if (it->second.is_zero()) m.erase(it);
}

void add_to3(TripleSum& m, TripleKey k, const Scalar& s) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (!s.is_zero()) m.emplace(k, s);
    return;
  }
  it->second = it->second + s;
  if (it->second.is_zero()) m.erase(it);
}

PairSum cop_of_vector(const Coalgebra& c, const std::vector<Scalar>& v) {
  PairSum out;
  for (int j = 0; j < c.dim(); ++j) {
    if (v[static_cast<size_t>(j)].is_zero()) continue;
    for (const auto& t : c.cop[static_cast<size_t>(j)])
      add_to(out, {t.left, t.right}, v[static_cast<size_t>(j)] * t.coef);
  }
  return out;
}

}  // namespace

std::vector<std::string> Coalgebra::check_laws() const {
  std::vector<std::string> bad;
  Scalar one = Scalar::of(field, 1);
  for (int b = 0; b < dim(); ++b) {
    const auto& terms = cop[static_cast<size_t>(b)];
    // coassociativity
    TripleSum lhs, rhs;
    for (const auto& t : terms) {
      for (const auto& u : cop[static_cast<size_t>(t.left)])
        add_to3(lhs, {u.left, u.right, t.right}, t.coef * u.coef);
      for (const auto& u : cop[static_cast<size_t>(t.right)])
        add_to3(rhs, {t.left, u.left, u.right}, t.coef * u.coef);
    }
    if (lhs != rhs)
      bad.push_back("coassociativity fails on '" + names[static_cast<size_t>(b)] + "'");
    // counit laws
    std::map<int, Scalar> left_sum, right_sum;
    for (const auto& t : terms) {
      Scalar cl = counit[static_cast<size_t>(t.left)] * t.coef;
      Scalar cr = counit[static_cast<size_t>(t.right)] * t.coef;
      if (!cl.is_zero()) {
        auto it = left_sum.find(t.right);
        if (it == left_sum.end())
          left_sum.emplace(t.right, cl);
        else {
          it->second = it->second + cl;
          if (it->second.is_zero()) left_sum.erase(it);
        }
      }
      if (!cr.is_zero()) {
        auto it = right_sum.find(t.left);
        if (it == right_sum.end())
          right_sum.emplace(t.left, cr);
        else {
          it->second = it->second + cr;
          if (it->second.is_zero()) right_sum.erase(it);
        }
      }
    }
    std::map<int, Scalar> expect{{b, one}};
    if (left_sum != expect || right_sum != expect)
      bad.push_back("counit law fails on '" + names[static_cast<size_t>(b)] + "'");
    // cocommutativity
    PairSum fwd, swp;
    for (const auto& t : terms) {
      add_to(fwd, {t.left, t.right}, t.coef);
      add_to(swp, {t.right, t.left}, t.coef);
    }
    if (fwd != swp)
      bad.push_back("cocommutativity fails on '" + names[static_cast<size_t>(b)] + "'");
  }
  return bad;
}

const Coalgebra& SimplicialCoalgebra::level(int n) const {
  if (n < 0 || n > top)
    throw insufficient_truncation("'" + label + "' has levels 0.." +
                                  std::to_string(top) + "; level " +
                                  std::to_string(n) + " requested");
  return levels[static_cast<size_t>(n)];
}

int SimplicialCoalgebra::basis_index(int n, const SimplexRef& r) const {
  if (n < 0 || n >= static_cast<int>(ref_index.size()))
    throw malformed_input("'" + label + "' has no ref index at level " +
                          std::to_string(n));
  auto it = ref_index[static_cast<size_t>(n)].find(r);
  if (it == ref_index[static_cast<size_t>(n)].end())
    throw malformed_input("ref not in the basis of '" + label + "' at level " +
                          std::to_string(n));
  return it->second;
}

int SimplicialCoalgebra::unit_index(int n) const {
  if (!connected() || refs.empty())
    throw malformed_input("unit index needs a connected chains-built instance");
  SimplexRef v = SimplexRef::of({0, 0});
  for (int i = 0; i < n; ++i) v = degenerate(v, i);
  return basis_index(n, v);
}

namespace {

// checks that `m : a -> b` is a coalgebra morphism, exactly
void check_morphism(const Coalgebra& a, const Coalgebra& b, const SparseMatrix& m,
                    const std::string& what, std::vector<std::string>& bad) {
  if (m.rows != b.dim() || m.cols != a.dim()) {
    bad.push_back(what + ": shape " + std::to_string(m.rows) + "x" +
                  std::to_string(m.cols) + " does not match " +
                  std::to_string(b.dim()) + "x" + std::to_string(a.dim()));
    return;
  }
  const Field& f = a.field;
  for (int x = 0; x < a.dim(); ++x) {
    std::vector<Scalar> mx = m.col_dense(x, f);
    // counit
    Scalar e = Scalar::of(f, 0);
    for (int j = 0; j < b.dim(); ++j)
      e = e + mx[static_cast<size_t>(j)] * b.counit[static_cast<size_t>(j)];
    if (!(e == a.counit[static_cast<size_t>(x)])) {
      bad.push_back(what + ": counit not preserved on '" +
                    a.names[static_cast<size_t>(x)] + "'");
      continue;
    }
    // coproduct: Delta_b(m x) vs (m (x) m)(Delta_a x)
    PairSum lhs = cop_of_vector(b, mx);
    PairSum rhs;
    for (const auto& t : a.cop[static_cast<size_t>(x)]) {
      std::vector<Scalar> ml = m.col_dense(t.left, f);
      std::vector<Scalar> mr = m.col_dense(t.right, f);
      for (int p = 0; p < b.dim(); ++p) {
        if (ml[static_cast<size_t>(p)].is_zero()) continue;
        for (int q = 0; q < b.dim(); ++q) {
          if (mr[static_cast<size_t>(q)].is_zero()) continue;
          add_to(rhs, {p, q},
                 t.coef * ml[static_cast<size_t>(p)] * mr[static_cast<size_t>(q)]);
        }
      }
    }
    if (lhs != rhs)
      bad.push_back(what + ": coproduct not preserved on '" +
                    a.names[static_cast<size_t>(x)] + "'");
  }
}

}  // namespace

std::vector<std::string> SimplicialCoalgebra::check(bool require_connected) const {
  std::vector<std::string> bad;
  if (top < 0) {
    bad.push_back("no levels");
    return bad;
  }
  if (require_connected && levels[0].dim() != 1)
    bad.push_back("level 0 is not one-dimensional");
  for (int n = 0; n <= top; ++n) {
    for (auto& v : levels[static_cast<size_t>(n)].check_laws())
      bad.push_back("level " + std::to_string(n) + ": " + v);
  }
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      check_morphism(levels[static_cast<size_t>(n)], levels[static_cast<size_t>(n) - 1],
                     face[static_cast<size_t>(n)][static_cast<size_t>(i)],
                     "d" + std::to_string(i) + " at level " + std::to_string(n), bad);
  for (int n = 0; n < top; ++n)
    for (int i = 0; i <= n; ++i)
      check_morphism(levels[static_cast<size_t>(n)], levels[static_cast<size_t>(n) + 1],
                     deg[static_cast<size_t>(n)][static_cast<size_t>(i)],
                     "s" + std::to_string(i) + " at level " + std::to_string(n), bad);

  auto D = [&](int n, int i) -> const SparseMatrix& {
    return face[static_cast<size_t>(n)][static_cast<size_t>(i)];
  };
  auto S = [&](int n, int i) -> const SparseMatrix& {
    return deg[static_cast<size_t>(n)][static_cast<size_t>(i)];
  };
  // d_i d_j = d_{j-1} d_i (i < j)
  for (int n = 2; n <= top; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (!(D(n - 1, i) * D(n, j) == D(n - 1, j - 1) * D(n, i)))
          bad.push_back("face identity d" + std::to_string(i) + " d" +
                        std::to_string(j) + " fails at level " + std::to_string(n));
  // s_i s_j = s_{j+1} s_i (i <= j)
  for (int n = 0; n + 1 < top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!(S(n + 1, i) * S(n, j) == S(n + 1, j + 1) * S(n, i)))
          bad.push_back("degeneracy identity s" + std::to_string(i) + " s" +
                        std::to_string(j) + " fails at level " + std::to_string(n));
  // d_i s_j mixed identities
  for (int n = 0; n < top; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n + 1; ++i) {
        SparseMatrix lhs = D(n + 1, i) * S(n, j);
        SparseMatrix want = SparseMatrix::identity(dim(n), field);
        if (i == j || i == j + 1) {
          if (!(lhs == want))
            bad.push_back("d" + std::to_string(i) + " s" + std::to_string(j) +
                          " != id at level " + std::to_string(n));
        } else if (i < j) {
          if (n >= 1 && !(lhs == S(n - 1, j - 1) * D(n, i)))
            bad.push_back("d" + std::to_string(i) + " s" + std::to_string(j) +
                          " != s d at level " + std::to_string(n));
        } else {
          if (n >= 1 && !(lhs == S(n - 1, j) * D(n, i - 1)))
            bad.push_back("d" + std::to_string(i) + " s" + std::to_string(j) +
                          " != s d at level " + std::to_string(n));
        }
      }
    }
  }
  return bad;
}

const SparseMatrix& CoalgebraMap::at(int n) const {
  if (n < 0 || n >= static_cast<int>(mats.size()))
    throw insufficient_truncation("map '" + label + "' has no level " +
                                  std::to_string(n));
  return mats[static_cast<size_t>(n)];
}

SimplicialCoalgebra chains_coalgebra(const SSetPtr& x, const Field& f, int level) {
  if (level < 0) throw malformed_input("negative level");
  if (x->count(0) != 1)
    throw malformed_input("chains need a reduced simplicial set; '" +
                          x->label() + "' is not reduced");
  SimplicialCoalgebra c;
  c.field = f;
  c.label = "F[" + x->label() + "]";
  c.top = level;
  c.set_like = true;
  c.underlying = x;
  Scalar one = Scalar::of(f, 1);
  for (int n = 0; n <= level; ++n) {
    Coalgebra lv;
    lv.field = f;
    lv.set_like = true;
    c.refs.push_back(all_simplices(*x, n));
    std::map<SimplexRef, int> index;
    for (size_t i = 0; i < c.refs.back().size(); ++i) {
      const SimplexRef& r = c.refs.back()[i];
      index[r] = static_cast<int>(i);
      lv.names.push_back(x->ref_str(r));
      lv.cop.push_back({CoTerm{one, static_cast<int>(i), static_cast<int>(i)}});
      lv.counit.push_back(one);
    }
    c.ref_index.push_back(std::move(index));
    c.levels.push_back(std::move(lv));
  }
  c.face.resize(1);  // face[0] is unused; face[n] starts at n = 1
  for (int n = 1; n <= level; ++n) {
    std::vector<SparseMatrix> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<SparseMatrix::Entry> tri;
      for (int b = 0; b < c.dim(n); ++b) {
        SimplexRef fr = face(*x, c.refs[static_cast<size_t>(n)][static_cast<size_t>(b)], i);
        tri.push_back({c.basis_index(n - 1, fr), b, one});
      }
      row.push_back(SparseMatrix::from_triplets(c.dim(n - 1), c.dim(n), tri));
    }
    c.face.push_back(std::move(row));
  }
  for (int n = 0; n < level; ++n) {
    std::vector<SparseMatrix> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<SparseMatrix::Entry> tri;
      for (int b = 0; b < c.dim(n); ++b) {
        SimplexRef sr = degenerate(c.refs[static_cast<size_t>(n)][static_cast<size_t>(b)], i);
        tri.push_back({c.basis_index(n + 1, sr), b, one});
      }
      row.push_back(SparseMatrix::from_triplets(c.dim(n + 1), c.dim(n), tri));
    }
    c.deg.push_back(std::move(row));
  }
  return c;
}

CoalgebraMap chains_map(const SSetMap& g, const SimplicialCoalgebra& src,
                        const SimplicialCoalgebra& tgt) {
  if (src.refs.empty() || tgt.refs.empty())
    throw malformed_input("chains_map needs chains-built sides");
  CoalgebraMap m;
  m.label = "F[" + g.label() + "]";
  Scalar one = Scalar::of(src.field, 1);
  for (int n = 0; n <= src.top; ++n) {
    std::vector<SparseMatrix::Entry> tri;
    for (int b = 0; b < src.dim(n); ++b) {
      SimplexRef img = g.apply(src.refs[static_cast<size_t>(n)][static_cast<size_t>(b)]);
      tri.push_back({tgt.basis_index(n, img), b, one});
    }
    m.mats.push_back(SparseMatrix::from_triplets(tgt.dim(n), src.dim(n), tri));
  }
  return m;
}

std::vector<std::string> check_coalgebra_map(const SimplicialCoalgebra& src,
                                             const SimplicialCoalgebra& tgt,
                                             const CoalgebraMap& m) {
  std::vector<std::string> bad;
  int top = std::min(src.top, static_cast<int>(m.mats.size()) - 1);
  top = std::min(top, tgt.top);
  for (int n = 0; n <= top; ++n)
    check_morphism(src.level(n), tgt.level(n), m.at(n),
                   "'" + m.label + "' level " + std::to_string(n), bad);
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      if (!(m.at(n - 1) * src.face[static_cast<size_t>(n)][static_cast<size_t>(i)] ==
            tgt.face[static_cast<size_t>(n)][static_cast<size_t>(i)] * m.at(n)))
        bad.push_back("'" + m.label + "' does not commute with d" +
                      std::to_string(i) + " at level " + std::to_string(n));
  for (int n = 0; n < top; ++n)
    for (int i = 0; i <= n; ++i)
      if (!(m.at(n + 1) * src.deg[static_cast<size_t>(n)][static_cast<size_t>(i)] ==
            tgt.deg[static_cast<size_t>(n)][static_cast<size_t>(i)] * m.at(n)))
        bad.push_back("'" + m.label + "' does not commute with s" +
                      std::to_string(i) + " at level " + std::to_string(n));
  return bad;
}

PointsResult points(const SimplicialCoalgebra& c, long long budget) {
  PointsResult out;
  if (c.set_like) {
    for (int n = 0; n <= c.top; ++n)
      out.elements.push_back(c.level(n).names);
    out.exact = true;
    out.status = "exact";
    return out;
  }
  if (c.field.kind != FieldKind::prime) {
    out.status = "inconclusive: enumeration over the rationals is unsupported";
    return out;
  }
  long long p = c.field.p;
  for (int n = 0; n <= c.top; ++n) {
    const Coalgebra& lv = c.level(n);
    // p^dim within budget?
    long long total = 1;
    bool too_big = false;
    for (int i = 0; i < lv.dim(); ++i) {
      total *= p;
      if (total > budget) {
        too_big = true;
        break;
      }
    }
    if (too_big) {
      out.status = "inconclusive: " + std::to_string(p) + "^" +
                   std::to_string(lv.dim()) + " exceeds budget " +
                   std::to_string(budget) + " at level " + std::to_string(n);
      out.elements.clear();
      return out;
    }
    std::vector<std::string> found;
    std::vector<Scalar> v(static_cast<size_t>(lv.dim()), Scalar::of(c.field, 0));
    for (long long code = 1; code < total; ++code) {
      long long rem = code;
      for (size_t i = 0; i < v.size(); ++i) {
        v[i] = Scalar::of(c.field, rem % p);
        rem /= p;
      }
      Scalar e = Scalar::of(c.field, 0);
      for (int j = 0; j < lv.dim(); ++j)
        e = e + v[static_cast<size_t>(j)] * lv.counit[static_cast<size_t>(j)];
      if (!e.is_one()) continue;
      PairSum dv = cop_of_vector(lv, v);
      PairSum sq;
      for (int l = 0; l < lv.dim(); ++l)
        for (int r = 0; r < lv.dim(); ++r) {
          Scalar s = v[static_cast<size_t>(l)] * v[static_cast<size_t>(r)];
          if (!s.is_zero()) add_to(sq, {l, r}, s);
        }
      if (dv != sq) continue;
      std::ostringstream os;
      bool first = true;
      for (int j = 0; j < lv.dim(); ++j) {
        if (v[static_cast<size_t>(j)].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!v[static_cast<size_t>(j)].is_one()) os << v[static_cast<size_t>(j)].str() << "*";
        os << lv.names[static_cast<size_t>(j)];
      }
      found.push_back(os.str());
    }
    out.elements.push_back(std::move(found));
  }
  out.exact = true;
  out.status = "exact";
  return out;
}

int interval_face(int n, int r, int i) {
  (void)n;
  return i < r ? r - 1 : r;
}

int interval_deg(int n, int r, int i) {
  (void)n;
  return i < r ? r + 1 : r;
}

std::string interval_word_str(int n, int r) {
  std::string w;
  for (int i = 0; i <= n; ++i) w += i < r ? '0' : '1';
  return w;
}

SimplicialCoalgebra tensor_interval(const SimplicialCoalgebra& c) {
  SimplicialCoalgebra t;
  t.field = c.field;
  t.label = c.label + "(x)F[interval]";
  t.top = c.top;
  t.set_like = c.set_like;
  Scalar one = Scalar::of(c.field, 1);
  auto idx = [&](int n, int x, int r) { return x * (n + 2) + r; };
  for (int n = 0; n <= c.top; ++n) {
    const Coalgebra& lv = c.level(n);
    Coalgebra out;
    out.field = c.field;
    out.set_like = lv.set_like;
    out.names.resize(static_cast<size_t>(lv.dim() * (n + 2)));
    out.cop.resize(out.names.size());
    out.counit.resize(out.names.size(), Scalar::of(c.field, 0));
    for (int x = 0; x < lv.dim(); ++x) {
      for (int r = 0; r <= n + 1; ++r) {
        int me = idx(n, x, r);
        out.names[static_cast<size_t>(me)] =
            "(" + lv.names[static_cast<size_t>(x)] + "|" + interval_word_str(n, r) + ")";
        for (const auto& tm : lv.cop[static_cast<size_t>(x)])
          out.cop[static_cast<size_t>(me)].push_back(
              CoTerm{tm.coef, idx(n, tm.left, r), idx(n, tm.right, r)});
        out.counit[static_cast<size_t>(me)] = lv.counit[static_cast<size_t>(x)];
      }
    }
    t.levels.push_back(std::move(out));
  }
  t.face.resize(1);
  for (int n = 1; n <= c.top; ++n) {
    std::vector<SparseMatrix> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<SparseMatrix::Entry> tri;
      const SparseMatrix& df = c.face[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& e : df.entries)
        for (int r = 0; r <= n + 1; ++r)
          tri.push_back({e.row * (n + 1) + interval_face(n, r, i),
                         e.col * (n + 2) + r, e.value});
      row.push_back(SparseMatrix::from_triplets(t.dim(n - 1), t.dim(n), tri));
    }
    t.face.push_back(std::move(row));
  }
  for (int n = 0; n < c.top; ++n) {
    std::vector<SparseMatrix> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<SparseMatrix::Entry> tri;
      const SparseMatrix& ds = c.deg[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& e : ds.entries)
        for (int r = 0; r <= n + 1; ++r)
          tri.push_back({e.row * (n + 3) + interval_deg(n, r, i),
                         e.col * (n + 2) + r, e.value});
      row.push_back(SparseMatrix::from_triplets(t.dim(n + 1), t.dim(n), tri));
    }
    t.deg.push_back(std::move(row));
  }
  return t;
}

int Cylinder::pair_index(int n, int x_idx, int zeros) const {
  int v = unit_src[static_cast<size_t>(n)];
  if (x_idx == v) throw malformed_input("base vertex class has no pair index");
  int adj = x_idx < v ? x_idx : x_idx - 1;
  return 1 + adj * (n + 2) + zeros;
}

std::pair<int, int> Cylinder::pair_of(int n, int idx) const {
  if (idx <= 0) throw malformed_input("unit has no pair decomposition");
  int v = unit_src[static_cast<size_t>(n)];
  int adj = (idx - 1) / (n + 2);
  int zeros = (idx - 1) % (n + 2);
  int x = adj < v ? adj : adj + 1;
  return {x, zeros};
}

Cylinder cylinder(const SimplicialCoalgebra& c) {
  if (!c.set_like || c.refs.empty())
    throw malformed_input(
        "cylinder is implemented for chains-built coalgebras; '" + c.label +
        "' is not one");
  if (!c.connected())
    throw malformed_input("cylinder needs a connected input");
  Cylinder out;
  out.source = c;
  for (int n = 0; n <= c.top; ++n) out.unit_src.push_back(c.unit_index(n));

  Scalar one = Scalar::of(c.field, 1);
  SimplicialCoalgebra& cy = out.cyl;
  cy.field = c.field;
  cy.label = "Cyl(" + c.label + ")";
  cy.top = c.top;
  cy.set_like = true;
  for (int n = 0; n <= c.top; ++n) {
    const Coalgebra& lv = c.level(n);
    Coalgebra L;
    L.field = c.field;
    L.set_like = true;
    int d = 1 + (lv.dim() - 1) * (n + 2);
    L.names.resize(static_cast<size_t>(d));
    L.cop.resize(static_cast<size_t>(d));
    L.counit.assign(static_cast<size_t>(d), one);
    L.names[0] = "1";
    for (int i = 0; i < d; ++i) L.cop[static_cast<size_t>(i)] = {CoTerm{one, i, i}};
    for (int x = 0; x < lv.dim(); ++x) {
      if (x == out.unit_src[static_cast<size_t>(n)]) continue;
      for (int r = 0; r <= n + 1; ++r)
        L.names[static_cast<size_t>(out.pair_index(n, x, r))] =
            "(" + lv.names[static_cast<size_t>(x)] + "|" + interval_word_str(n, r) + ")";
    }
    cy.levels.push_back(std::move(L));
  }

  // image of a tensor pair (x, r) at level n in the cylinder basis
  auto project = [&](int n, int x, int r) -> int {
    return x == out.unit_src[static_cast<size_t>(n)] ? 0 : out.pair_index(n, x, r);
  };

  cy.face.resize(1);
  for (int n = 1; n <= c.top; ++n) {
    std::vector<SparseMatrix> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<SparseMatrix::Entry> tri;
      tri.push_back({0, 0, one});  // unit to unit
      const SparseMatrix& df = c.face[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& e : df.entries) {
        if (e.col == out.unit_src[static_cast<size_t>(n)]) continue;
        for (int r = 0; r <= n + 1; ++r)
          tri.push_back({project(n - 1, e.row, interval_face(n, r, i)),
                         out.pair_index(n, e.col, r), e.value});
      }
      row.push_back(SparseMatrix::from_triplets(cy.dim(n - 1), cy.dim(n), tri));
    }
    cy.face.push_back(std::move(row));
  }
  for (int n = 0; n < c.top; ++n) {
    std::vector<SparseMatrix> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<SparseMatrix::Entry> tri;
      tri.push_back({0, 0, one});
      const SparseMatrix& ds = c.deg[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& e : ds.entries) {
        if (e.col == out.unit_src[static_cast<size_t>(n)]) continue;
        for (int r = 0; r <= n + 1; ++r)
          tri.push_back({project(n + 1, e.row, interval_deg(n, r, i)),
                         out.pair_index(n, e.col, r), e.value});
      }
      row.push_back(SparseMatrix::from_triplets(cy.dim(n + 1), cy.dim(n), tri));
    }
    cy.deg.push_back(std::move(row));
  }

  out.i0.label = "i0";
  out.i1.label = "i1";
  out.q.label = "q";
  for (int n = 0; n <= c.top; ++n) {
    std::vector<SparseMatrix::Entry> t0, t1, tq;
    for (int x = 0; x < c.dim(n); ++x) {
      t0.push_back({project(n, x, n + 1), x, one});
      t1.push_back({project(n, x, 0), x, one});
    }
    tq.push_back({out.unit_src[static_cast<size_t>(n)], 0, one});
    for (int x = 0; x < c.dim(n); ++x) {
      if (x == out.unit_src[static_cast<size_t>(n)]) continue;
      for (int r = 0; r <= n + 1; ++r)
        tq.push_back({x, out.pair_index(n, x, r), one});
    }
    out.i0.mats.push_back(SparseMatrix::from_triplets(cy.dim(n), c.dim(n), t0));
    out.i1.mats.push_back(SparseMatrix::from_triplets(cy.dim(n), c.dim(n), t1));
    out.q.mats.push_back(SparseMatrix::from_triplets(c.dim(n), cy.dim(n), tq));
  }
  return out;
}

MappingCylinder mapping_cylinder(const CoalgebraMap& f,
                                 const SimplicialCoalgebra& c,
                                 const SimplicialCoalgebra& cprime) {
  if (!c.set_like || c.refs.empty() || !cprime.set_like || cprime.refs.empty())
    throw malformed_input("mapping_cylinder is implemented for chains-built sides");
  if (!c.connected() || !cprime.connected())
    throw malformed_input("mapping_cylinder needs connected sides");
  int top = std::min({c.top, cprime.top, static_cast<int>(f.mats.size()) - 1});
  Scalar one = Scalar::of(c.field, 1);

  std::vector<int> vsrc, vtgt;
  for (int n = 0; n <= top; ++n) {
    vsrc.push_back(c.unit_index(n));
    vtgt.push_back(cprime.unit_index(n));
  }
  // basis of M at level n: C'-part first, then pairs (x != v, zeros >= 1)
  auto pair_idx = [&](int n, int x, int r) {
    int adj = x < vsrc[static_cast<size_t>(n)] ? x : x - 1;
    return cprime.dim(n) + adj * (n + 1) + (r - 1);
  };
  // single target index of a set-like map column
  auto f_of = [&](int n, int x) {
    for (const auto& e : f.at(n).entries)
      if (e.col == x) return e.row;
    throw malformed_input("map column is empty on a set-like basis");
  };
  // class of a tensor pair (x, r) at level n
  auto project = [&](int n, int x, int r) -> int {
    if (x == vsrc[static_cast<size_t>(n)]) return vtgt[static_cast<size_t>(n)];
    if (r == 0) return f_of(n, x);
    return pair_idx(n, x, r);
  };

  MappingCylinder out;
  SimplicialCoalgebra& m = out.m;
  m.field = c.field;
  m.label = "M(" + f.label + ")";
  m.top = top;
  m.set_like = true;
  for (int n = 0; n <= top; ++n) {
    Coalgebra L;
    L.field = c.field;
    L.set_like = true;
    int d = cprime.dim(n) + (c.dim(n) - 1) * (n + 1);
    L.names.resize(static_cast<size_t>(d));
    L.cop.resize(static_cast<size_t>(d));
    L.counit.assign(static_cast<size_t>(d), one);
    for (int i = 0; i < d; ++i) L.cop[static_cast<size_t>(i)] = {CoTerm{one, i, i}};
    for (int y = 0; y < cprime.dim(n); ++y)
      L.names[static_cast<size_t>(y)] = cprime.level(n).names[static_cast<size_t>(y)];
    for (int x = 0; x < c.dim(n); ++x) {
      if (x == vsrc[static_cast<size_t>(n)]) continue;
      for (int r = 1; r <= n + 1; ++r)
        L.names[static_cast<size_t>(pair_idx(n, x, r))] =
            "(" + c.level(n).names[static_cast<size_t>(x)] + "|" +
            interval_word_str(n, r) + ")";
    }
    m.levels.push_back(std::move(L));
  }

  m.face.resize(1);
  for (int n = 1; n <= top; ++n) {
    std::vector<SparseMatrix> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<SparseMatrix::Entry> tri;
      for (const auto& e : cprime.face[static_cast<size_t>(n)][static_cast<size_t>(i)].entries)
        tri.push_back(e);
      const SparseMatrix& df = c.face[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& e : df.entries) {
        if (e.col == vsrc[static_cast<size_t>(n)]) continue;
        for (int r = 1; r <= n + 1; ++r)
          tri.push_back({project(n - 1, e.row, interval_face(n, r, i)),
                         pair_idx(n, e.col, r), e.value});
      }
      row.push_back(SparseMatrix::from_triplets(m.dim(n - 1), m.dim(n), tri));
    }
    m.face.push_back(std::move(row));
  }
  for (int n = 0; n < top; ++n) {
    std::vector<SparseMatrix> row;
    for (int i = 0; i <= n; ++i) {
      std::vector<SparseMatrix::Entry> tri;
      for (const auto& e : cprime.deg[static_cast<size_t>(n)][static_cast<size_t>(i)].entries)
        tri.push_back(e);
      const SparseMatrix& ds = c.deg[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& e : ds.entries) {
        if (e.col == vsrc[static_cast<size_t>(n)]) continue;
        for (int r = 1; r <= n + 1; ++r)
          tri.push_back({project(n + 1, e.row, interval_deg(n, r, i)),
                         pair_idx(n, e.col, r), e.value});
      }
      row.push_back(SparseMatrix::from_triplets(m.dim(n + 1), m.dim(n), tri));
    }
    m.deg.push_back(std::move(row));
  }

  out.i.label = "i";
  out.p.label = "p";
  out.s_prime.label = "s'";
  for (int n = 0; n <= top; ++n) {
    std::vector<SparseMatrix::Entry> ti, tp, ts;
    for (int x = 0; x < c.dim(n); ++x)
      ti.push_back({project(n, x, n + 1), x, one});
    for (int y = 0; y < cprime.dim(n); ++y) {
      tp.push_back({y, y, one});
      ts.push_back({y, y, one});
    }
    for (int x = 0; x < c.dim(n); ++x) {
      if (x == vsrc[static_cast<size_t>(n)]) continue;
      for (int r = 1; r <= n + 1; ++r)
        tp.push_back({f_of(n, x), pair_idx(n, x, r), one});
    }
    out.i.mats.push_back(SparseMatrix::from_triplets(m.dim(n), c.dim(n), ti));
    out.p.mats.push_back(SparseMatrix::from_triplets(cprime.dim(n), m.dim(n), tp));
    out.s_prime.mats.push_back(SparseMatrix::from_triplets(m.dim(n), cprime.dim(n), ts));
  }
  return out;
}

}  // namespace ck
