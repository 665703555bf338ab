#include "cobarkit/cobar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cobarkit/builtins.hpp"

namespace ck {

namespace {

// the deterministic generator numbering used by cobar: classes by degree,
// then by index within the degree
std::map<std::pair<int, int>, int> cobar_numbering(const DgCoalgebra& n) {
  std::map<std::pair<int, int>, int> out;
  int next = 0;
  for (int d = 1; d <= n.top; ++d)
    for (int i = 0; i < n.dim(d); ++i) out[{d, i}] = next++;
  return out;
}

std::string fresh_name(std::set<std::string>& used, std::string name) {
  while (used.count(name)) name += "~";
  used.insert(name);
  return name;
}

}  // namespace

FreeDgAlgebra cobar(const DgCoalgebra& n, std::vector<std::pair<int, int>>* gen_source) {
  if (!n.connected())
    throw malformed_input("cobar input '" + n.label + "' is not connected");
  FreeDgAlgebra a;
  a.field = n.field;
  a.label = "Omega(" + n.label + ")";
  auto numbering = cobar_numbering(n);
  std::set<std::string> used;
  std::vector<std::pair<int, int>> sources(numbering.size());
  a.gen_names.resize(numbering.size());
  a.gen_degrees.resize(numbering.size());
  for (const auto& [src, g] : numbering) {
    std::string name = n.names[static_cast<size_t>(src.first)][static_cast<size_t>(src.second)];
    if (used.count(name)) name += "#" + std::to_string(src.first);
    a.gen_names[static_cast<size_t>(g)] = fresh_name(used, std::move(name));
    a.gen_degrees[static_cast<size_t>(g)] = src.first - 1;
    sources[static_cast<size_t>(g)] = src;
  }
  const Scalar one = Scalar::of(n.field, 1);
  for (const auto& [src, g] : numbering) {
    (void)g;
    const int d = src.first;
    const int i = src.second;
    NcPolynomial dg;
    std::vector<Scalar> del = n.diff[static_cast<size_t>(d)].col_dense(i, n.field);
    if (d == 1) {
      for (const auto& c : del)
        if (!c.is_zero())
          throw corrupt_complex("degree-one class '" +
                                n.names[1][static_cast<size_t>(i)] +
                                "' of a connected coalgebra has nonzero boundary");
    } else {
      for (size_t j = 0; j < del.size(); ++j)
        if (!del[j].is_zero())
          dg.add_term(-del[j], {numbering.at({d - 1, static_cast<int>(j)})});
    }
    for (const auto& t : n.cop[static_cast<size_t>(d)][static_cast<size_t>(i)]) {
      if (t.left_deg < 1 || t.left_deg > d - 1) continue;
      Scalar sign = t.left_deg % 2 == 0 ? one : -one;
      dg.add_term(sign * t.coef, {numbering.at({t.left_deg, t.left}),
                                  numbering.at({d - t.left_deg, t.right})});
    }
    a.d_gen.push_back(std::move(dg));
  }
  a.augmentation.assign(a.gen_names.size(), Scalar::of(n.field, 0));
  if (gen_source) *gen_source = std::move(sources);
  return a;
}

DgAlgebraMap cobar_map(const DgCoalgebraMap& f, const DgCoalgebra& src,
                       const DgCoalgebra& tgt) {
  auto num_src = cobar_numbering(src);
  auto num_tgt = cobar_numbering(tgt);
  DgAlgebraMap m;
  m.label = "Omega(" + f.label + ")";
  m.gen_images.resize(num_src.size());
  for (const auto& [s, g] : num_src) {
    const int d = s.first;
    std::vector<Scalar> col = f.at(d).col_dense(s.second, src.field);
    NcPolynomial img;
    for (size_t j = 0; j < col.size(); ++j)
      if (!col[j].is_zero())
        img.add_term(col[j], {num_tgt.at({d, static_cast<int>(j)})});
    m.gen_images[static_cast<size_t>(g)] = std::move(img);
  }
  return m;
}

CobarOfSpace lambda(const SSetPtr& x, const Field& f, int level) {
  CobarOfSpace out;
  out.chains = chains_coalgebra(x, f, level);
  out.normalized = normalized_chains(out.chains, level);
  out.omega = cobar(out.normalized, &out.gen_source);
  return out;
}

AlgebraPresentation h0_presentation(const FreeDgAlgebra& a, const std::string& label) {
  AlgebraPresentation p;
  p.field = a.field;
  p.label = label.empty() ? "H0(" + a.label + ")" : label;
  std::vector<int> remap(a.gen_names.size(), -1);
  for (int g = 0; g < a.gens(); ++g)
    if (a.gen_degrees[static_cast<size_t>(g)] == 0) {
      remap[static_cast<size_t>(g)] = p.gen_count();
      p.gen_names.push_back(a.gen_names[static_cast<size_t>(g)]);
    }
  for (int g = 0; g < a.gens(); ++g) {
    if (a.gen_degrees[static_cast<size_t>(g)] != 1) continue;
    NcPolynomial rel;
    for (const auto& [w, c] : a.d_gen[static_cast<size_t>(g)].terms) {
      GenWord nw;
      for (int letter : w) {
        int t = remap[static_cast<size_t>(letter)];
        if (t < 0)
          throw corrupt_complex("degree-zero differential touches a positive-degree generator");
        nw.push_back(t);
      }
      rel.add_term(c, nw);
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

AlgebraPresentation fundamental_bialgebra(const SimplicialCoalgebra& c) {
  if (c.top < 2)
    throw insufficient_truncation(
        "the fundamental bialgebra needs two levels of '" + c.label + "'");
  DgCoalgebra n = normalized_chains(c, 2);
  FreeDgAlgebra omega = cobar(n);
  AlgebraPresentation p = h0_presentation(omega, "pi(" + c.label + ")");

  // comultiplication: send a level-one basis element to its class generator
  // plus one (just the unit on degenerate legs), apply that to both legs of
  // the level-one coproduct, and subtract the unit tensor unit
  const Scalar one = Scalar::of(c.field, 1);
  const NcPolynomial unit = NcPolynomial::unit(c.field);
  auto beta = [&](int level_index) {
    int cl = n.class_of[1][static_cast<size_t>(level_index)];
    if (cl < 0) return unit;
    return NcPolynomial::gen(c.field, cl) + unit;
  };
  for (int k = 0; k < n.dim(1); ++k) {
    int rep = n.rep_of[1][static_cast<size_t>(k)];
    TensorPoly nabla;
    for (const auto& t : c.levels[1].cop[static_cast<size_t>(rep)])
      nabla = nabla + TensorPoly::of(beta(t.left), beta(t.right)).scaled(t.coef);
    nabla = nabla - TensorPoly::of(unit, unit);
    p.cop.push_back(std::move(nabla));
  }
  if (c.underlying && c.underlying->tau_oracle) p.oracle = c.underlying->tau_oracle;
  return p;
}

std::vector<NcPolynomial> monoidlike_reps(const SimplicialCoalgebra& c, const DgCoalgebra& n,
                                          const FreeDgAlgebra& omega) {
  if (!c.set_like)
    throw malformed_input("'" + c.label +
                          "' is not set-like: supply monoid-like representatives explicitly");
  auto numbering = cobar_numbering(n);
  const NcPolynomial unit = NcPolynomial::unit(omega.field);
  std::vector<NcPolynomial> reps;
  for (int i = 0; i < n.dim(1); ++i)
    reps.push_back(NcPolynomial::gen(omega.field, numbering.at({1, i})) + unit);
  return reps;
}

FreeDgAlgebra localized_cobar(const DgCoalgebra& n, const std::vector<NcPolynomial>& reps) {
  FreeDgAlgebra base = cobar(n);
  if (reps.empty()) return base;

  const Scalar zero = Scalar::of(n.field, 0);
  const NcPolynomial unit = NcPolynomial::unit(n.field);
  for (const auto& r : reps) {
    for (const auto& [w, c] : r.terms)
      if (base.degree(w) != 0)
        throw malformed_input("representative " + base.poly_str(r) +
                              " is not homogeneous of degree zero");
    if (!base.d(r).is_zero())
      throw malformed_input("representative " + base.poly_str(r) +
                            " has nonzero differential");
  }

  const int m = static_cast<int>(reps.size());
  std::vector<SSetPtr> comps(static_cast<size_t>(m), s1_localized());
  SSetPtr w = wedge(std::move(comps));
  SimplicialCoalgebra cw = chains_coalgebra(w, n.field, n.top);
  DgCoalgebra nw = normalized_chains(cw, n.top);
  FreeDgAlgebra circles = cobar(nw);

  // the forward generator of each circle copy gets glued to rep - 1
  std::vector<int> forward(static_cast<size_t>(m), -1);
  for (int p = 0; p < m; ++p) {
    std::string want = std::to_string(p) + ".u";
    for (int g = 0; g < circles.gens(); ++g)
      if (circles.gen_names[static_cast<size_t>(g)] == want &&
          circles.gen_degrees[static_cast<size_t>(g)] == 0)
        forward[static_cast<size_t>(p)] = g;
    if (forward[static_cast<size_t>(p)] < 0)
      throw corrupt_complex("looped circle " + std::to_string(p) +
                            " lost its forward generator");
  }

  FreeDgAlgebra out = base;
  out.label = "Omega^(" + n.label + ")";
  std::set<std::string> used(out.gen_names.begin(), out.gen_names.end());

  // substitution of circle generators into the combined algebra
  std::vector<NcPolynomial> image(static_cast<size_t>(circles.gens()));
  std::vector<int> kept(static_cast<size_t>(circles.gens()), -1);
  for (int p = 0; p < m; ++p)
    image[static_cast<size_t>(forward[static_cast<size_t>(p)])] =
        reps[static_cast<size_t>(p)] - unit;
  for (int g = 0; g < circles.gens(); ++g) {
    if (!image[static_cast<size_t>(g)].is_zero() ||
        std::find(forward.begin(), forward.end(), g) != forward.end())
      continue;  // an eliminated forward generator
    int idx = out.gens();
    kept[static_cast<size_t>(g)] = idx;
    out.gen_names.push_back(fresh_name(used, circles.gen_names[static_cast<size_t>(g)]));
    out.gen_degrees.push_back(circles.gen_degrees[static_cast<size_t>(g)]);
    out.d_gen.push_back(NcPolynomial::zero());  // filled below
    out.augmentation.push_back(zero);
    image[static_cast<size_t>(g)] = NcPolynomial::gen(n.field, idx);
  }
  for (int g = 0; g < circles.gens(); ++g) {
    if (kept[static_cast<size_t>(g)] < 0) continue;
    NcPolynomial dg;
    for (const auto& [word, c] : circles.d_gen[static_cast<size_t>(g)].terms) {
      NcPolynomial acc = NcPolynomial::mono(Scalar::of(n.field, 1), {});
      for (int letter : word) acc = acc * image[static_cast<size_t>(letter)];
      dg = dg + acc.scaled(c);
    }
    out.d_gen[static_cast<size_t>(kept[static_cast<size_t>(g)])] = std::move(dg);
  }
  return out;
}

std::vector<std::string> DgAlgebraInput::check() const {
  std::vector<std::string> bad;
  if (static_cast<int>(basis.size()) != top + 1) {
    bad.push_back("basis table does not cover degrees 0.." + std::to_string(top));
    return bad;
  }
  if (basis[0].size() != 1) {
    bad.push_back("degree zero must be exactly the unit");
    return bad;
  }

  auto diff_or_zero = [&](int k) {
    auto it = diff.find(k);
    if (it != diff.end()) return it->second;
    return SparseMatrix::zero(dim(k - 1), dim(k));
  };
  auto prod_or_zero = [&](int j, int k) {
    auto it = product.find({j, k});
    if (it != product.end()) return it->second;
    return SparseMatrix::zero(dim(j + k),
                              static_cast<std::int64_t>(dim(j)) * dim(k));
  };
  // m (x) identity and identity (x) m on pair indices l * right + r
  auto kron_left = [&](const SparseMatrix& mm, std::int64_t right) {
    std::vector<SparseMatrix::Entry> tri;
    for (const auto& e : mm.entries)
      for (std::int64_t r = 0; r < right; ++r)
        tri.push_back({e.row * right + r, e.col * right + r, e.value});
    return SparseMatrix::from_triplets(mm.rows * right, mm.cols * right, std::move(tri));
  };
  auto kron_right = [&](std::int64_t left, const SparseMatrix& mm) {
    std::vector<SparseMatrix::Entry> tri;
    for (std::int64_t l = 0; l < left; ++l)
      for (const auto& e : mm.entries)
        tri.push_back({l * mm.rows + e.row, l * mm.cols + e.col, e.value});
    return SparseMatrix::from_triplets(left * mm.rows, left * mm.cols, std::move(tri));
  };

  for (const auto& [k, mat] : diff) {
    if (k < 1 || k > top) {
      bad.push_back("differential block at degree " + std::to_string(k) + " is out of range");
      continue;
    }
    if (mat.rows != dim(k - 1) || mat.cols != dim(k))
      bad.push_back("differential block at degree " + std::to_string(k) + " has wrong shape");
  }
  if (!diff_or_zero(1).is_zero())
    bad.push_back("the degree-one differential must vanish (the augmentation is a chain map)");
  for (int k = 2; k <= top; ++k)
    if (!(diff_or_zero(k - 1) * diff_or_zero(k)).is_zero())
      bad.push_back("dd != 0 between degrees " + std::to_string(k) + " and " +
                    std::to_string(k - 2));
  for (const auto& [jk, mat] : product) {
    const auto [j, k] = jk;
    if (j < 1 || k < 1 || j + k > top) {
      bad.push_back("product block (" + std::to_string(j) + "," + std::to_string(k) +
                    ") is out of range");
      continue;
    }
    if (mat.rows != dim(j + k) || mat.cols != static_cast<std::int64_t>(dim(j)) * dim(k))
      bad.push_back("product block (" + std::to_string(j) + "," + std::to_string(k) +
                    ") has wrong shape");
  }
  if (!bad.empty()) return bad;

  const Scalar one = Scalar::of(field, 1);
  for (int j = 1; j <= top; ++j)
    for (int k = 1; j + k <= top; ++k) {
      SparseMatrix lhs = diff_or_zero(j + k) * prod_or_zero(j, k);
      SparseMatrix rhs = SparseMatrix::zero(dim(j + k - 1),
                                            static_cast<std::int64_t>(dim(j)) * dim(k));
      if (j >= 2) rhs = rhs + prod_or_zero(j - 1, k) * kron_left(diff_or_zero(j), dim(k));
      if (k >= 2) {
        SparseMatrix term = prod_or_zero(j, k - 1) * kron_right(dim(j), diff_or_zero(k));
        rhs = rhs + (j % 2 == 0 ? term : term.scaled(-one));
      }
      if (!(lhs == rhs))
        bad.push_back("Leibniz fails on the product block (" + std::to_string(j) + "," +
                      std::to_string(k) + ")");
    }
  for (int j = 1; j <= top; ++j)
    for (int k = 1; j + k <= top; ++k)
      for (int l = 1; j + k + l <= top; ++l) {
        SparseMatrix lhs = prod_or_zero(j + k, l) * kron_left(prod_or_zero(j, k), dim(l));
        SparseMatrix rhs = prod_or_zero(j, k + l) * kron_right(dim(j), prod_or_zero(k, l));
        if (!(lhs == rhs))
          bad.push_back("associativity fails on degrees (" + std::to_string(j) + "," +
                        std::to_string(k) + "," + std::to_string(l) + ")");
      }
  return bad;
}

DgAlgebraInput unit_algebra(const Field& f, int top) {
  DgAlgebraInput a;
  a.field = f;
  a.label = "F";
  a.top = top;
  a.basis.assign(static_cast<size_t>(top) + 1, {});
  a.basis[0] = {"1"};
  return a;
}

DgAlgebraInput exterior_on_one_generator(const Field& f, int top) {
  DgAlgebraInput a;
  a.field = f;
  a.label = "exterior(x)";
  a.top = top;
  a.basis.assign(static_cast<size_t>(top) + 1, {});
  a.basis[0] = {"1"};
  if (top >= 1) a.basis[1] = {"x"};
  if (top >= 2) a.product[{1, 1}] = SparseMatrix::zero(0, 1);
  return a;
}

DgAlgebraInput dga_input_from_free(const FreeDgAlgebra& a, int top) {
  if (a.has_degree0_gens())
    throw malformed_input("'" + a.label +
                          "' has degree-zero generators: its degree slices are infinite");
  TruncationSpec t = TruncationSpec::degrees(top);
  DgAlgebraInput out;
  out.field = a.field;
  out.label = a.label;
  out.top = top;
  std::vector<std::vector<GenWord>> bases;
  std::vector<std::map<GenWord, int>> index;
  for (int k = 0; k <= top; ++k) {
    bases.push_back(word_basis(a, t, k));
    std::map<GenWord, int> ix;
    std::vector<std::string> names;
    for (size_t i = 0; i < bases.back().size(); ++i) {
      ix[bases.back()[i]] = static_cast<int>(i);
      const GenWord& w = bases.back()[i];
      std::ostringstream os;
      for (size_t j = 0; j < w.size(); ++j) {
        if (j) os << "*";
        os << a.gen_names[static_cast<size_t>(w[j])];
      }
      names.push_back(w.empty() ? "1" : os.str());
    }
    index.push_back(std::move(ix));
    out.basis.push_back(std::move(names));
  }
  ChainComplexSlice s = cobar_complex_slice(a, t);
  for (int k = 1; k <= top; ++k) {
    const SparseMatrix* d = s.diff(k);
    if (d && !d->is_zero()) out.diff[k] = *d;
  }
  const Scalar one = Scalar::of(a.field, 1);
  for (int j = 1; j <= top; ++j)
    for (int k = 1; j + k <= top; ++k) {
      std::vector<SparseMatrix::Entry> tri;
      const auto& lw = bases[static_cast<size_t>(j)];
      const auto& rw = bases[static_cast<size_t>(k)];
      for (size_t l = 0; l < lw.size(); ++l)
        for (size_t r = 0; r < rw.size(); ++r) {
          GenWord cat = lw[l];
          cat.insert(cat.end(), rw[r].begin(), rw[r].end());
          tri.push_back({index[static_cast<size_t>(j + k)].at(cat),
                         static_cast<std::int64_t>(l * rw.size() + r), one});
        }
      out.product[{j, k}] = SparseMatrix::from_triplets(
          static_cast<std::int64_t>(bases[static_cast<size_t>(j + k)].size()),
          static_cast<std::int64_t>(lw.size() * rw.size()), std::move(tri));
    }
  return out;
}

DgCoalgebra bar(const DgAlgebraInput& a, int max_degree) {
  {
    auto bad = a.check();
    if (!bad.empty())
      throw malformed_input("bar input '" + a.label + "': " + bad.front());
  }
  if (a.top < max_degree - 1)
    throw insufficient_truncation("bar through degree " + std::to_string(max_degree) +
                                  " needs tables through degree " +
                                  std::to_string(max_degree - 1));

  using Letter = std::pair<int, int>;  // (internal degree, basis index)
  using BarWord = std::vector<Letter>;
  std::vector<Letter> letters;
  for (int d = 1; d <= std::min(a.top, max_degree - 1); ++d)
    for (int i = 0; i < a.dim(d); ++i) letters.push_back({d, i});

  std::vector<std::vector<BarWord>> words(static_cast<size_t>(max_degree) + 1);
  BarWord current;
  auto enumerate = [&](auto&& self, int remaining) -> void {
    words[static_cast<size_t>(max_degree - remaining)].push_back(current);
    for (const auto& [d, i] : letters) {
      if (d + 1 > remaining) continue;
      current.push_back({d, i});
      self(self, remaining - (d + 1));
      current.pop_back();
    }
  };
  enumerate(enumerate, max_degree);
  // enumeration above grouped words by total degree already; rebucket by the
  // usual deterministic order (letters ascending within the DFS)
  std::vector<std::map<BarWord, int>> index(static_cast<size_t>(max_degree) + 1);
  DgCoalgebra out;
  out.field = a.field;
  out.label = "B(" + a.label + ")";
  out.top = max_degree;
  out.names.resize(static_cast<size_t>(max_degree) + 1);
  for (int deg = 0; deg <= max_degree; ++deg) {
    auto& bucket = words[static_cast<size_t>(deg)];
    std::sort(bucket.begin(), bucket.end());
    for (size_t i = 0; i < bucket.size(); ++i) {
      index[static_cast<size_t>(deg)][bucket[i]] = static_cast<int>(i);
      std::ostringstream os;
      os << "[";
      for (size_t j = 0; j < bucket[i].size(); ++j) {
        if (j) os << "|";
        os << a.basis[static_cast<size_t>(bucket[i][j].first)]
                     [static_cast<size_t>(bucket[i][j].second)];
      }
      os << "]";
      out.names[static_cast<size_t>(deg)].push_back(os.str());
    }
  }

  const Scalar one = Scalar::of(a.field, 1);
  auto diff_block = [&](int k) -> const SparseMatrix* {
    auto it = a.diff.find(k);
    return it == a.diff.end() ? nullptr : &it->second;
  };
  auto prod_block = [&](int j, int k) -> const SparseMatrix* {
    auto it = a.product.find({j, k});
    return it == a.product.end() ? nullptr : &it->second;
  };

  out.diff.push_back(SparseMatrix::zero(0, 1));
  for (int deg = 1; deg <= max_degree; ++deg) {
    std::vector<SparseMatrix::Entry> tri;
    const auto& bucket = words[static_cast<size_t>(deg)];
    for (size_t b = 0; b < bucket.size(); ++b) {
      const BarWord& w = bucket[b];
      Scalar prefix = one;
      for (size_t t = 0; t < w.size(); ++t) {
        const auto [dt, it] = w[t];
        if (dt >= 2) {
          if (const SparseMatrix* dm = diff_block(dt)) {
            std::vector<Scalar> col = dm->col_dense(it, a.field);
            for (size_t j = 0; j < col.size(); ++j) {
              if (col[j].is_zero()) continue;
              BarWord nw = w;
              nw[t] = {dt - 1, static_cast<int>(j)};
              tri.push_back({index[static_cast<size_t>(deg - 1)].at(nw),
                             static_cast<std::int64_t>(b), prefix * (-col[j])});
            }
          }
        }
        if (t + 1 < w.size()) {
          const auto [dn, in] = w[t + 1];
          if (const SparseMatrix* pm = prod_block(dt, dn)) {
            std::int64_t col_index =
                static_cast<std::int64_t>(it) * a.dim(dn) + in;
            std::vector<Scalar> col = pm->col_dense(col_index, a.field);
            Scalar merge_sign = dt % 2 == 0 ? -one : one;  // (-1)^{dt + 1}
            for (size_t j = 0; j < col.size(); ++j) {
              if (col[j].is_zero()) continue;
              BarWord nw;
              nw.reserve(w.size() - 1);
              nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
              nw.push_back({dt + dn, static_cast<int>(j)});
              nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(t) + 2, w.end());
              tri.push_back({index[static_cast<size_t>(deg - 1)].at(nw),
                             static_cast<std::int64_t>(b),
                             prefix * merge_sign * col[j]});
            }
          }
        }
        prefix = (dt + 1) % 2 == 0 ? prefix : -prefix;
      }
    }
    out.diff.push_back(SparseMatrix::from_triplets(
        static_cast<std::int64_t>(words[static_cast<size_t>(deg) - 1].size()),
        static_cast<std::int64_t>(bucket.size()), std::move(tri)));
  }

  out.cop.resize(static_cast<size_t>(max_degree) + 1);
  for (int deg = 0; deg <= max_degree; ++deg) {
    const auto& bucket = words[static_cast<size_t>(deg)];
    for (const auto& w : bucket) {
      std::vector<DgCoalgebra::Term> terms;
      for (size_t cut = 0; cut <= w.size(); ++cut) {
        BarWord left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        BarWord right(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        int left_deg = 0;
        for (const auto& [d, i] : left) left_deg += d + 1;
        terms.push_back({one, left_deg, index[static_cast<size_t>(left_deg)].at(left),
                         index[static_cast<size_t>(deg - left_deg)].at(right)});
      }
      out.cop[static_cast<size_t>(deg)].push_back(std::move(terms));
    }
  }
  out.counit = {one};
  out.coaug = 0;
  return out;
}

}  // namespace ck
