#include "cobarkit/free_dga.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ck {

int FreeDgAlgebra::gen_index(const std::string& name) const {
  for (int i = 0; i < gens(); ++i)
    if (gen_names[static_cast<size_t>(i)] == name) return i;
  throw malformed_input("'" + label + "' has no generator named '" + name + "'");
}

int FreeDgAlgebra::degree(const GenWord& w) const {
  int d = 0;
  for (int g : w) d += gen_degrees[static_cast<size_t>(g)];
  return d;
}

bool FreeDgAlgebra::has_degree0_gens() const {
  return std::find(gen_degrees.begin(), gen_degrees.end(), 0) != gen_degrees.end();
}

NcPolynomial FreeDgAlgebra::d(const NcPolynomial& p) const {
  NcPolynomial out;
  for (const auto& [w, c] : p.terms) {
    int sign_deg = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      const NcPolynomial& dg = d_gen[static_cast<size_t>(w[i])];
      if (!dg.is_zero()) {
        Scalar s = c;
        if (sign_deg % 2 != 0) s = -s;
        // prefix * d(letter) * suffix
        for (const auto& [dw, dc] : dg.terms) {
          GenWord nw(w.begin(), w.begin() + static_cast<long>(i));
          nw.insert(nw.end(), dw.begin(), dw.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 1, w.end());
          out.add_term(s * dc, nw);
        }
      }
      sign_deg += gen_degrees[static_cast<size_t>(w[i])];
    }
  }
  return out;
}

Scalar FreeDgAlgebra::augment(const NcPolynomial& p) const {
  Scalar out = Scalar::of(field, 0);
  for (const auto& [w, c] : p.terms) {
    Scalar v = c;
    bool dead = false;
    for (int g : w) {
      if (gen_degrees[static_cast<size_t>(g)] != 0 ||
          augmentation[static_cast<size_t>(g)].is_zero()) {
        dead = true;
        break;
      }
      v = v * augmentation[static_cast<size_t>(g)];
    }
    if (!dead) out = out + v;
  }
  return out;
}

std::string FreeDgAlgebra::poly_str(const NcPolynomial& p) const {
  if (p.is_zero()) return "0";
  std::vector<std::pair<std::tuple<int, size_t, GenWord>, const Scalar*>> ord;
  for (const auto& [w, c] : p.terms)
    ord.push_back({{degree(w), w.size(), w}, &c});
  std::sort(ord.begin(), ord.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : ord) {
    const GenWord& w = std::get<2>(key);
    std::string cs = c->str();
    if (!first)
      os << (cs[0] == '-' ? " - " : " + ");
    else if (cs[0] == '-')
      os << "-";
    first = false;
    std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
    if (w.empty()) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << "*";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) os << "*";
      os << gen_names[static_cast<size_t>(w[i])];
    }
  }
  return os.str();
}

std::vector<std::string> FreeDgAlgebra::check() const {
  std::vector<std::string> bad;
  size_t n = gen_names.size();
  if (gen_degrees.size() != n || d_gen.size() != n || augmentation.size() != n) {
    bad.push_back("generator bookkeeping sizes disagree");
    return bad;
  }
  for (int g = 0; g < gens(); ++g) {
    int deg = gen_degrees[static_cast<size_t>(g)];
    if (deg < 0)
      bad.push_back("'" + gen_names[static_cast<size_t>(g)] + "' has negative degree");
    for (const auto& [w, c] : d_gen[static_cast<size_t>(g)].terms)
      if (degree(w) != deg - 1)
        bad.push_back("d('" + gen_names[static_cast<size_t>(g)] +
                      "') is not homogeneous of degree one lower");
    if (deg != 0 && !augmentation[static_cast<size_t>(g)].is_zero())
      bad.push_back("augmentation supported on the positive-degree generator '" +
                    gen_names[static_cast<size_t>(g)] + "'");
    if (!d(d_gen[static_cast<size_t>(g)]).is_zero())
      bad.push_back("dd != 0 on '" + gen_names[static_cast<size_t>(g)] + "'");
  }
  return bad;
}

bool TruncationSpec::complete(const FreeDgAlgebra& a, int d) const {
  if (!max_length.has_value()) return true;
  if (a.has_degree0_gens()) return false;
  return *max_length >= d;
}

std::vector<GenWord> word_basis(const FreeDgAlgebra& a, const TruncationSpec& t,
                                int degree) {
  if (degree < 0 || degree > t.max_degree) return {};
  int len_cap;
  if (t.max_length.has_value())
    len_cap = *t.max_length;
  else if (!a.has_degree0_gens())
    len_cap = degree;  // every letter contributes at least 1
  else
    throw malformed_input(
        "'" + a.label +
        "' has degree-0 generators; an unbounded-length slice is infinite");
  std::vector<GenWord> out;
  GenWord cur;
  auto rec = [&](auto&& self, int deg_left, int len_left) -> void {
    if (deg_left == 0) out.push_back(cur);
    if (len_left == 0) return;
    for (int g = 0; g < a.gens(); ++g) {
      int gd = a.gen_degrees[static_cast<size_t>(g)];
      if (gd > deg_left) continue;
      cur.push_back(g);
      self(self, deg_left - gd, len_left - 1);
      cur.pop_back();
    }
  };
  rec(rec, degree, len_cap);
  std::sort(out.begin(), out.end(), [](const GenWord& x, const GenWord& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

ChainComplexSlice cobar_complex_slice(const FreeDgAlgebra& a,
                                      const TruncationSpec& t) {
  ChainComplexSlice s;
  s.min_degree = 0;
  s.max_degree = t.max_degree;
  s.below_is_zero = true;
  std::vector<std::vector<GenWord>> bases;
  std::vector<std::map<GenWord, int>> index;
  for (int k = 0; k <= t.max_degree; ++k) {
    bases.push_back(word_basis(a, t, k));
    std::map<GenWord, int> ix;
    for (size_t i = 0; i < bases.back().size(); ++i)
      ix[bases.back()[i]] = static_cast<int>(i);
    index.push_back(std::move(ix));
    s.basis_size.push_back(static_cast<std::int64_t>(bases.back().size()));
    s.complete[k] = t.complete(a, k);
  }
  for (int k = 1; k <= t.max_degree; ++k) {
    std::vector<SparseMatrix::Entry> tri;
    for (size_t b = 0; b < bases[static_cast<size_t>(k)].size(); ++b) {
      NcPolynomial dw = a.d(
          NcPolynomial::mono(Scalar::of(a.field, 1), bases[static_cast<size_t>(k)][b]));
      for (const auto& [w, c] : dw.terms) {
        auto it = index[static_cast<size_t>(k) - 1].find(w);
        if (it == index[static_cast<size_t>(k) - 1].end()) {
          // the image leaves the window; the window must not be flagged
          // complete, or the slice would be lying
          if (s.complete[k - 1])
            throw malformed_input("differential leaves a complete window");
          continue;
        }
        tri.push_back({it->second, static_cast<std::int64_t>(b), c});
      }
    }
    s.d[k] = SparseMatrix::from_triplets(
        s.basis_size[static_cast<size_t>(k) - 1],
        s.basis_size[static_cast<size_t>(k)], tri);
  }
  return s;
}

BettiTable cobar_homology(const FreeDgAlgebra& a, const TruncationSpec& t,
                          const Field& f) {
  // tabulate one guard degree above the requested window so the boundary
  // space of the top requested degree is known, then drop the guard row
  TruncationSpec guard = t;
  ++guard.max_degree;
  BettiTable out = homology(cobar_complex_slice(a, guard), f);
  if (!out.rows.empty()) out.rows.pop_back();
  return out;
}

NcPolynomial DgAlgebraMap::apply(const NcPolynomial& p, const Field& f) const {
  NcPolynomial out;
  for (const auto& [w, c] : p.terms) {
    NcPolynomial img = NcPolynomial::mono(Scalar::of(f, 1), {});
    for (int g : w) img = img * gen_images[static_cast<size_t>(g)];
    out = out + img.scaled(c);
  }
  return out;
}

std::vector<std::string> check_dga_map(const FreeDgAlgebra& src,
                                       const FreeDgAlgebra& tgt,
                                       const DgAlgebraMap& m) {
  std::vector<std::string> bad;
  if (static_cast<int>(m.gen_images.size()) != src.gens()) {
    bad.push_back("image count does not match the source generators");
    return bad;
  }
  for (int g = 0; g < src.gens(); ++g) {
    const NcPolynomial& img = m.gen_images[static_cast<size_t>(g)];
    int deg = src.gen_degrees[static_cast<size_t>(g)];
    for (const auto& [w, c] : img.terms)
      if (tgt.degree(w) != deg)
        bad.push_back("image of '" + src.gen_names[static_cast<size_t>(g)] +
                      "' is not homogeneous of the same degree");
    NcPolynomial lhs = m.apply(src.d_gen[static_cast<size_t>(g)], src.field);
    NcPolynomial rhs = tgt.d(img);
    if (!(lhs == rhs))
      bad.push_back("differential compatibility fails on '" +
                    src.gen_names[static_cast<size_t>(g)] + "'");
  }
  return bad;
}

SparseMatrix dga_map_matrix(const FreeDgAlgebra& src, const TruncationSpec& ts,
                            const FreeDgAlgebra& tgt, const TruncationSpec& tt,
                            const DgAlgebraMap& m, int degree) {
  auto src_words = word_basis(src, ts, degree);
  auto tgt_words = word_basis(tgt, tt, degree);
  std::map<GenWord, int> index;
  for (size_t i = 0; i < tgt_words.size(); ++i) index[tgt_words[i]] = static_cast<int>(i);
  const bool complete = tt.complete(tgt, degree);
  std::vector<SparseMatrix::Entry> tri;
  for (size_t b = 0; b < src_words.size(); ++b) {
    NcPolynomial img =
        m.apply(NcPolynomial::mono(Scalar::of(src.field, 1), src_words[b]), src.field);
    for (const auto& [w, c] : img.terms) {
      auto it = index.find(w);
      if (it == index.end()) {
        if (complete)
          throw malformed_input("image of a word escapes a complete target window");
        continue;
      }
      tri.push_back({it->second, static_cast<std::int64_t>(b), c});
    }
  }
  return SparseMatrix::from_triplets(static_cast<std::int64_t>(tgt_words.size()),
                                     static_cast<std::int64_t>(src_words.size()),
                                     std::move(tri));
}

}  // namespace ck
