#include "cobarkit/dg_coalgebra.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ck {

namespace {

using PairKey = std::array<int, 3>;  // (left_deg, left, right)
using PairSum = std::map<PairKey, Scalar>;

void add_to(PairSum& m, PairKey k, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, s);
    return;
  }
  it->second = it->second + s;
  if (it->second.is_zero()) m.erase(it);
}

// dense matrix-vector product
std::vector<Scalar> apply(const SparseMatrix& m, const std::vector<Scalar>& v,
                          const Field& f) {
  std::vector<Scalar> out(static_cast<size_t>(m.rows), Scalar::of(f, 0));
  for (const auto& e : m.entries) {
    const Scalar& x = v[static_cast<size_t>(e.col)];
    if (x.is_zero()) continue;
    out[static_cast<size_t>(e.row)] = out[static_cast<size_t>(e.row)] + e.value * x;
  }
  return out;
}

std::vector<Scalar> unit_vec(int dim, int idx, const Field& f) {
  std::vector<Scalar> v(static_cast<size_t>(dim), Scalar::of(f, 0));
  v[static_cast<size_t>(idx)] = Scalar::of(f, 1);
  return v;
}

// front face d_p ... d_n (drop the last vertex n-p+1 times)
std::vector<Scalar> front_face(const SimplicialCoalgebra& c, int n, int p,
                               std::vector<Scalar> v) {
  for (int k = n; k >= p; --k)
    v = apply(c.face[static_cast<size_t>(k)][static_cast<size_t>(k)], v, c.field);
  return v;
}

// iterated zeroth face d_0^{p-1}
std::vector<Scalar> back_face(const SimplicialCoalgebra& c, int n, int p,
                              std::vector<Scalar> v) {
  for (int k = 0; k < p - 1; ++k)
    v = apply(c.face[static_cast<size_t>(n - k)][0], v, c.field);
  return v;
}

}  // namespace

std::vector<int> DgCoalgebra::reduced_basis(int n) const {
  std::vector<int> out;
  for (int i = 0; i < dim(n); ++i)
    if (n != 0 || i != coaug) out.push_back(i);
  return out;
}

std::vector<AwTerm> aw_on_element(const SimplicialCoalgebra& c, int n,
                                  const std::vector<Scalar>& x) {
  if (n < 0 || n > c.top) throw insufficient_truncation("level out of range");
  if (static_cast<int>(x.size()) != c.dim(n))
    throw malformed_input("vector length does not match the level basis");
  PairSum acc;  // keyed by (left level, left, right)
  for (int j = 0; j < c.dim(n); ++j) {
    const Scalar& cj = x[static_cast<size_t>(j)];
    if (cj.is_zero()) continue;
    for (const auto& t : c.level(n).cop[static_cast<size_t>(j)]) {
      for (int p = 1; p <= n + 1; ++p) {
        std::vector<Scalar> lv =
            front_face(c, n, p, unit_vec(c.dim(n), t.left, c.field));
        std::vector<Scalar> rv =
            back_face(c, n, p, unit_vec(c.dim(n), t.right, c.field));
        for (size_t a = 0; a < lv.size(); ++a) {
          if (lv[a].is_zero()) continue;
          for (size_t b = 0; b < rv.size(); ++b) {
            if (rv[b].is_zero()) continue;
            add_to(acc, {p - 1, static_cast<int>(a), static_cast<int>(b)},
                   cj * t.coef * lv[a] * rv[b]);
          }
        }
      }
    }
  }
  std::vector<AwTerm> out;
  for (const auto& [k, s] : acc) out.push_back({s, k[0], k[1], k[2]});
  return out;
}

DgCoalgebra normalized_chains(const SimplicialCoalgebra& c, int level) {
  if (!c.connected())
    throw malformed_input("normalized chains need a connected input; '" +
                          c.label + "' is not connected");
  if (level < 0 || level > c.top)
    throw insufficient_truncation("'" + c.label + "' is built to level " +
                                  std::to_string(c.top) + "; chains to " +
                                  std::to_string(level) + " requested");
  DgCoalgebra n;
  n.field = c.field;
  n.label = "N(" + c.label + ")";
  n.top = level;
  n.coaug = 0;
  Scalar one = Scalar::of(c.field, 1);

  // classify degenerate classes: union of degeneracy images, which must be
  // basis elements (unit columns)
  for (int k = 0; k <= level; ++k) {
    std::vector<bool> degen(static_cast<size_t>(c.dim(k)), false);
    if (k >= 1) {
      for (int i = 0; i <= k - 1; ++i) {
        const SparseMatrix& s = c.deg[static_cast<size_t>(k) - 1][static_cast<size_t>(i)];
        if (s.nnz() != s.cols)
          throw malformed_input("'" + c.label +
                                "' has a degeneracy that is not basis-to-basis");
        for (const auto& e : s.entries) {
          if (!e.value.is_one())
            throw malformed_input("'" + c.label +
                                  "' has a degeneracy that is not basis-to-basis");
          degen[static_cast<size_t>(e.row)] = true;
        }
      }
    }
    std::vector<int> cls(static_cast<size_t>(c.dim(k)), -1);
    std::vector<int> rep;
    std::vector<std::string> nm;
    for (int j = 0; j < c.dim(k); ++j) {
      if (degen[static_cast<size_t>(j)]) continue;
      cls[static_cast<size_t>(j)] = static_cast<int>(rep.size());
      rep.push_back(j);
      nm.push_back(c.level(k).names[static_cast<size_t>(j)]);
    }
    n.class_of.push_back(std::move(cls));
    n.rep_of.push_back(std::move(rep));
    n.names.push_back(std::move(nm));
  }

  // projection of a level-k vector onto the nondegenerate classes
  auto project = [&](int k, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(n.names[static_cast<size_t>(k)].size(),
                            Scalar::of(c.field, 0));
    for (size_t j = 0; j < v.size(); ++j) {
      int cl = n.class_of[static_cast<size_t>(k)][j];
      if (cl >= 0) out[static_cast<size_t>(cl)] = out[static_cast<size_t>(cl)] + v[j];
    }
    return out;
  };

  // differential: alternating face sum of each class representative
  n.diff.push_back(SparseMatrix(0, n.dim(0)));
  for (int k = 1; k <= level; ++k) {
    std::vector<SparseMatrix::Entry> tri;
    for (int b = 0; b < n.dim(k); ++b) {
      int rep = n.rep_of[static_cast<size_t>(k)][static_cast<size_t>(b)];
      std::vector<Scalar> sum(static_cast<size_t>(c.dim(k - 1)), Scalar::of(c.field, 0));
      Scalar sign = one;
      for (int i = 0; i <= k; ++i) {
        std::vector<Scalar> fv =
            apply(c.face[static_cast<size_t>(k)][static_cast<size_t>(i)],
                  unit_vec(c.dim(k), rep, c.field), c.field);
        for (size_t j = 0; j < sum.size(); ++j) sum[j] = sum[j] + sign * fv[j];
        sign = -sign;
      }
      std::vector<Scalar> pv = project(k - 1, sum);
      for (size_t j = 0; j < pv.size(); ++j)
        if (!pv[j].is_zero()) tri.push_back({static_cast<int>(j), b, pv[j]});
    }
    n.diff.push_back(SparseMatrix::from_triplets(n.dim(k - 1), n.dim(k), tri));
  }

  // coproduct: project both legs of the level expansion
  for (int k = 0; k <= level; ++k) {
    std::vector<std::vector<DgCoalgebra::Term>> at_k;
    for (int b = 0; b < n.dim(k); ++b) {
      int rep = n.rep_of[static_cast<size_t>(k)][static_cast<size_t>(b)];
      PairSum acc;
      for (const auto& t :
           aw_on_element(c, k, unit_vec(c.dim(k), rep, c.field))) {
        int lcl = n.class_of[static_cast<size_t>(t.left_level)][static_cast<size_t>(t.left)];
        int rcl = n.class_of[static_cast<size_t>(k - t.left_level)][static_cast<size_t>(t.right)];
        if (lcl < 0 || rcl < 0) continue;
        add_to(acc, {t.left_level, lcl, rcl}, t.coef);
      }
      std::vector<DgCoalgebra::Term> terms;
      for (const auto& [key, s] : acc) terms.push_back({s, key[0], key[1], key[2]});
      at_k.push_back(std::move(terms));
    }
    n.cop.push_back(std::move(at_k));
  }

  n.counit = c.level(0).counit;
  return n;
}

std::vector<std::string> DgCoalgebra::check() const {
  std::vector<std::string> bad;
  if (top < 0) {
    bad.push_back("no degrees");
    return bad;
  }
  Scalar one = Scalar::of(field, 1);
  // shapes
  if (static_cast<int>(diff.size()) != top + 1 ||
      static_cast<int>(cop.size()) != top + 1)
    bad.push_back("degree bookkeeping is inconsistent");
  for (int k = 1; k <= top && k < static_cast<int>(diff.size()); ++k)
    if (diff[static_cast<size_t>(k)].rows != dim(k - 1) ||
        diff[static_cast<size_t>(k)].cols != dim(k))
      bad.push_back("differential shape is wrong in degree " + std::to_string(k));
  if (coaug < 0 || coaug >= dim(0))
    bad.push_back("coaugmentation index out of range");
  if (!bad.empty()) return bad;

  // dd = 0
  for (int k = 2; k <= top; ++k)
    if (!(diff[static_cast<size_t>(k) - 1] * diff[static_cast<size_t>(k)]).is_zero())
      bad.push_back("dd != 0 from degree " + std::to_string(k));

  // coaugmentation is group-like
  if (!counit[static_cast<size_t>(coaug)].is_one())
    bad.push_back("counit of the coaugmentation is not 1");
  {
    const auto& terms = cop[0][static_cast<size_t>(coaug)];
    bool ok = terms.size() == 1 && terms[0].coef.is_one() &&
              terms[0].left_deg == 0 && terms[0].left == coaug &&
              terms[0].right == coaug;
    if (!ok) bad.push_back("coaugmentation is not group-like");
  }

  for (int k = 0; k <= top; ++k) {
    for (int b = 0; b < dim(k); ++b) {
      const auto& terms = cop[static_cast<size_t>(k)][static_cast<size_t>(b)];
      // counit laws: only degree-0 legs contribute
      std::map<int, Scalar> lsum, rsum;
      for (const auto& t : terms) {
        if (t.left_deg == 0) {
          Scalar s = counit[static_cast<size_t>(t.left)] * t.coef;
          if (!s.is_zero()) {
            auto [it, fresh] = lsum.emplace(t.right, s);
            if (!fresh) {
              it->second = it->second + s;
              if (it->second.is_zero()) lsum.erase(it);
            }
          }
        }
        if (t.left_deg == k) {
          Scalar s = counit[static_cast<size_t>(t.right)] * t.coef;
          if (!s.is_zero()) {
            auto [it, fresh] = rsum.emplace(t.left, s);
            if (!fresh) {
              it->second = it->second + s;
              if (it->second.is_zero()) rsum.erase(it);
            }
          }
        }
      }
      std::map<int, Scalar> expect{{b, one}};
      if (lsum != expect || rsum != expect)
        bad.push_back("counit law fails on '" +
                      names[static_cast<size_t>(k)][static_cast<size_t>(b)] + "'");

      // coassociativity, keyed by (deg a, a, deg b, b, c)
      std::map<std::array<int, 5>, Scalar> lhs, rhs;
      auto add5 = [](std::map<std::array<int, 5>, Scalar>& m, std::array<int, 5> key,
                     const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = m.emplace(key, s);
        if (!fresh) {
          it->second = it->second + s;
          if (it->second.is_zero()) m.erase(it);
        }
      };
      for (const auto& t : terms) {
        for (const auto& u : cop[static_cast<size_t>(t.left_deg)][static_cast<size_t>(t.left)])
          add5(lhs, {u.left_deg, u.left, t.left_deg - u.left_deg, u.right, t.right},
               t.coef * u.coef);
        for (const auto& u :
             cop[static_cast<size_t>(k - t.left_deg)][static_cast<size_t>(t.right)])
          add5(rhs, {t.left_deg, t.left, u.left_deg, u.left, u.right},
               t.coef * u.coef);
      }
      if (lhs != rhs)
        bad.push_back("coassociativity fails on '" +
                      names[static_cast<size_t>(k)][static_cast<size_t>(b)] + "'");

      // coderivation: cop(d x) = (d (x) id + Koszul id (x) d) cop(x)
      if (k >= 1) {
        PairSum want;
        std::vector<Scalar> dx =
            diff[static_cast<size_t>(k)].col_dense(b, field);
        for (size_t j = 0; j < dx.size(); ++j) {
          if (dx[j].is_zero()) continue;
          for (const auto& t : cop[static_cast<size_t>(k) - 1][j])
            add_to(want, {t.left_deg, t.left, t.right}, dx[j] * t.coef);
        }
        PairSum got;
        for (const auto& t : terms) {
          if (t.left_deg >= 1) {
            std::vector<Scalar> dl =
                diff[static_cast<size_t>(t.left_deg)].col_dense(t.left, field);
            for (size_t j = 0; j < dl.size(); ++j)
              if (!dl[j].is_zero())
                add_to(got, {t.left_deg - 1, static_cast<int>(j), t.right},
                       t.coef * dl[j]);
          }
          if (k - t.left_deg >= 1) {
            Scalar sign = t.left_deg % 2 == 0 ? one : -one;
            std::vector<Scalar> dr =
                diff[static_cast<size_t>(k - t.left_deg)].col_dense(t.right, field);
            for (size_t j = 0; j < dr.size(); ++j)
              if (!dr[j].is_zero())
                add_to(got, {t.left_deg, t.left, static_cast<int>(j)},
                       sign * t.coef * dr[j]);
          }
        }
        if (want != got)
          bad.push_back("coderivation fails on '" +
                        names[static_cast<size_t>(k)][static_cast<size_t>(b)] + "'");
      }
    }
  }
  return bad;
}

std::optional<int> DgCoalgebra::conilpotence_degree(int deg, int idx,
                                                    int bound) const {
  // tensors over the reduced quotient: word of (degree, class index) -> coef
  using Word = std::vector<std::pair<int, int>>;
  auto reduced = [&](int d, int i) { return d != 0 || i != coaug; };
  std::map<Word, Scalar> cur;
  if (reduced(deg, idx)) cur[{{deg, idx}}] = Scalar::of(field, 1);
  for (int k = 0; k <= bound; ++k) {
    if (cur.empty()) return k;
    // expand the leftmost factor with the reduced coproduct
    std::map<Word, Scalar> next;
    for (const auto& [w, s] : cur) {
      auto [d0, i0] = w.front();
      for (const auto& t : cop[static_cast<size_t>(d0)][static_cast<size_t>(i0)]) {
        if (!reduced(t.left_deg, t.left) || !reduced(d0 - t.left_deg, t.right))
          continue;
        Word nw;
        nw.push_back({t.left_deg, t.left});
        nw.push_back({d0 - t.left_deg, t.right});
        nw.insert(nw.end(), w.begin() + 1, w.end());
        Scalar add = s * t.coef;
        auto [it, fresh] = next.emplace(std::move(nw), add);
        if (!fresh) {
          it->second = it->second + add;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    cur = std::move(next);
  }
  return std::nullopt;
}

const SparseMatrix& DgCoalgebraMap::at(int n) const {
  if (n < 0 || n >= static_cast<int>(mats.size()))
    throw insufficient_truncation("map '" + label + "' has no degree " +
                                  std::to_string(n));
  return mats[static_cast<size_t>(n)];
}

DgCoalgebraMap normalized_map(const CoalgebraMap& f, const DgCoalgebra& src,
                              const DgCoalgebra& tgt) {
  if (src.rep_of.empty() || tgt.class_of.empty())
    throw malformed_input("normalized_map needs chains built by normalized_chains");
  DgCoalgebraMap m;
  m.label = "N(" + f.label + ")";
  int top = std::min({src.top, tgt.top, static_cast<int>(f.mats.size()) - 1});
  for (int n = 0; n <= top; ++n) {
    std::vector<SparseMatrix::Entry> tri;
    for (int b = 0; b < src.dim(n); ++b) {
      int rep = src.rep_of[static_cast<size_t>(n)][static_cast<size_t>(b)];
      std::vector<Scalar> img = f.at(n).col_dense(rep, src.field);
      for (size_t j = 0; j < img.size(); ++j) {
        if (img[j].is_zero()) continue;
        int cl = tgt.class_of[static_cast<size_t>(n)][j];
        if (cl >= 0) tri.push_back({cl, b, img[j]});
      }
    }
    m.mats.push_back(SparseMatrix::from_triplets(tgt.dim(n), src.dim(n), tri));
  }
  return m;
}

std::vector<std::string> check_dg_map(const DgCoalgebra& src,
                                      const DgCoalgebra& tgt,
                                      const DgCoalgebraMap& m) {
  std::vector<std::string> bad;
  int top = std::min({src.top, tgt.top, static_cast<int>(m.mats.size()) - 1});
  for (int n = 0; n <= top; ++n)
    if (m.at(n).rows != tgt.dim(n) || m.at(n).cols != src.dim(n)) {
      bad.push_back("shape mismatch in degree " + std::to_string(n));
      return bad;
    }
  for (int n = 1; n <= top; ++n)
    if (!(m.at(n - 1) * src.diff[static_cast<size_t>(n)] ==
          tgt.diff[static_cast<size_t>(n)] * m.at(n)))
      bad.push_back("differential compatibility fails in degree " + std::to_string(n));
  // counit and coaugmentation
  for (int x = 0; x < src.dim(0); ++x) {
    std::vector<Scalar> mx = m.at(0).col_dense(x, src.field);
    Scalar e = Scalar::of(src.field, 0);
    for (size_t j = 0; j < mx.size(); ++j)
      e = e + mx[j] * tgt.counit[j];
    if (!(e == src.counit[static_cast<size_t>(x)]))
      bad.push_back("counit not preserved");
  }
  {
    std::vector<Scalar> mc = m.at(0).col_dense(src.coaug, src.field);
    bool ok = true;
    for (size_t j = 0; j < mc.size(); ++j) {
      if (static_cast<int>(j) == tgt.coaug)
        ok = ok && mc[j].is_one();
      else
        ok = ok && mc[j].is_zero();
    }
    if (!ok) bad.push_back("coaugmentation not preserved");
  }
  // naturality of the coproduct: (m (x) m) cop_src = cop_tgt m
  for (int n = 0; n <= top; ++n) {
    for (int b = 0; b < src.dim(n); ++b) {
      PairSum lhs, rhs;
      for (const auto& t : src.cop[static_cast<size_t>(n)][static_cast<size_t>(b)]) {
        std::vector<Scalar> ml = m.at(t.left_deg).col_dense(t.left, src.field);
        std::vector<Scalar> mr = m.at(n - t.left_deg).col_dense(t.right, src.field);
        for (size_t p = 0; p < ml.size(); ++p) {
          if (ml[p].is_zero()) continue;
          for (size_t q = 0; q < mr.size(); ++q) {
            if (mr[q].is_zero()) continue;
            add_to(lhs, {t.left_deg, static_cast<int>(p), static_cast<int>(q)},
                   t.coef * ml[p] * mr[q]);
          }
        }
      }
      std::vector<Scalar> mb = m.at(n).col_dense(b, src.field);
      for (size_t j = 0; j < mb.size(); ++j) {
        if (mb[j].is_zero()) continue;
        for (const auto& t : tgt.cop[static_cast<size_t>(n)][j])
          add_to(rhs, {t.left_deg, t.left, t.right}, mb[j] * t.coef);
      }
      if (lhs != rhs)
        bad.push_back("coproduct naturality fails on '" +
                      src.names[static_cast<size_t>(n)][static_cast<size_t>(b)] +
                      "'");
    }
  }
  return bad;
}

ChainComplexSlice dg_slice(const DgCoalgebra& n) {
  ChainComplexSlice s;
  s.min_degree = 0;
  s.max_degree = n.top;
  s.below_is_zero = true;
  for (int k = 0; k <= n.top; ++k) {
    s.basis_size.push_back(n.dim(k));
    s.complete[k] = true;
    if (k >= 1) s.d[k] = n.diff[static_cast<size_t>(k)];
  }
  return s;
}

BettiTable chain_homology(const DgCoalgebra& n, int level) {
  BettiTable full = homology(dg_slice(n), n.field);
  BettiTable out;
  for (const auto& r : full.rows)
    if (r.degree <= level) out.rows.push_back(r);
  return out;
}

BettiTable chain_homology(const SSetPtr& x, const Field& f, int level) {
  SimplicialCoalgebra c = chains_coalgebra(x, f, level + 1);
  DgCoalgebra n = normalized_chains(c, level + 1);
  return chain_homology(n, level);
}

}  // namespace ck
