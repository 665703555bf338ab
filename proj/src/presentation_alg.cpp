#include "cobarkit/presentation_alg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cobarkit/linalg.hpp"
#include "cobarkit/sparse_matrix.hpp"

namespace ck {

namespace {

constexpr std::size_t kWordLimit = 1 << 20;  // enumeration guard

// all words of length <= cap over the presentation's generators, shortest
// first, lexicographic within a length
std::vector<GenWord> words_up_to(int gens, int cap) {
  std::vector<GenWord> out{GenWord{}};
  std::vector<GenWord> layer{GenWord{}};
  for (int len = 1; len <= cap && gens > 0; ++len) {
    std::vector<GenWord> next;
    for (const auto& w : layer)
      for (int g = 0; g < gens; ++g) {
        GenWord e = w;
        e.push_back(g);
        next.push_back(std::move(e));
      }
    out.insert(out.end(), next.begin(), next.end());
    if (out.size() > kWordLimit)
      throw malformed_input("word enumeration exceeds the safety limit; lower the budget");
    layer = std::move(next);
  }
  return out;
}

// products w * r * w' over all relations r, keeping every product whose
// longest expanded word has at most cap letters
std::vector<NcPolynomial> ideal_span(const AlgebraPresentation& p, int cap) {
  std::vector<NcPolynomial> cols;
  const int gens = p.gen_count();
  for (const auto& r : p.relations) {
    if (r.is_zero()) continue;
    const int body = r.max_length();
    if (body > cap) continue;
    const int room = cap - body;
    auto outer = words_up_to(gens, room);
    for (const auto& left : outer) {
      const int left_len = static_cast<int>(left.size());
      for (const auto& right : outer) {
        if (left_len + static_cast<int>(right.size()) > room) continue;
        NcPolynomial prod =
            NcPolynomial::mono(Scalar::of(p.field, 1), left) * r *
            NcPolynomial::mono(Scalar::of(p.field, 1), right);
        if (!prod.is_zero()) cols.push_back(std::move(prod));
      }
    }
  }
  return cols;
}

// assemble polynomials into a sparse matrix against a shared word -> row map
SparseMatrix columns_matrix(const std::vector<const NcPolynomial*>& cols,
                            std::map<GenWord, std::int64_t>& row_of) {
  for (const auto* c : cols)
    for (const auto& [w, s] : c->terms)
      row_of.emplace(w, static_cast<std::int64_t>(row_of.size()));
  std::vector<SparseMatrix::Entry> tri;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [w, s] : cols[j]->terms)
      tri.push_back({row_of.at(w), static_cast<std::int64_t>(j), s});
  return SparseMatrix::from_triplets(static_cast<std::int64_t>(row_of.size()),
                                     static_cast<std::int64_t>(cols.size()), std::move(tri));
}

AbelianElem abelian_mul(const AbelianElem& a, const AbelianElem& b, int modulus) {
  AbelianElem out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<long long> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (modulus > 0) e[i] = ((e[i] % modulus) + modulus) % modulus;
      }
      Scalar c = ca * cb;
      if (c.is_zero()) continue;
      auto [it, fresh] = out.emplace(std::move(e), c);
      if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

// pairwise oracle evaluation of a tensor polynomial, used for sound
// refutations of comultiplication compatibility
std::map<std::pair<std::vector<long long>, std::vector<long long>>, Scalar>
oracle_eval_tensor(const AlgebraPresentation& p, const TensorPoly& t) {
  std::map<std::pair<std::vector<long long>, std::vector<long long>>, Scalar> out;
  for (const auto& [k, c] : t.terms) {
    AbelianElem l = oracle_eval(p, NcPolynomial::mono(Scalar::of(p.field, 1), k.first));
    AbelianElem r = oracle_eval(p, NcPolynomial::mono(Scalar::of(p.field, 1), k.second));
    for (const auto& [el, cl] : l)
      for (const auto& [er, cr] : r) {
        Scalar v = c * cl * cr;
        if (v.is_zero()) continue;
        auto key = std::make_pair(el, er);
        auto [it, fresh] = out.emplace(std::move(key), v);
        if (!fresh) {
          it->second = it->second + v;
          if (it->second.is_zero()) out.erase(it);
        }
      }
  }
  return out;
}

}  // namespace

int AlgebraPresentation::gen_index(const std::string& name) const {
  for (std::size_t i = 0; i < gen_names.size(); ++i)
    if (gen_names[i] == name) return static_cast<int>(i);
  throw malformed_input("'" + label + "' has no generator named '" + name + "'");
}

Scalar AlgebraPresentation::counit_of(int g) const {
  if (counit_on_generators.empty()) return Scalar::of(field, 0);
  return counit_on_generators[static_cast<size_t>(g)];
}

std::string AlgebraPresentation::str() const {
  std::ostringstream os;
  os << label << " = <";
  for (std::size_t i = 0; i < gen_names.size(); ++i)
    os << (i ? ", " : "") << gen_names[i];
  os << " | ";
  for (std::size_t i = 0; i < relations.size(); ++i)
    os << (i ? ", " : "") << poly_str(relations[i]);
  os << "> over " << field.name();
  return os.str();
}

std::vector<std::string> AlgebraPresentation::check() const {
  std::vector<std::string> bad;
  const int gens = gen_count();
  if (!cop.empty() && cop.size() != gen_names.size())
    bad.push_back("cop table size disagrees with the generator count");
  if (!counit_on_generators.empty() && counit_on_generators.size() != gen_names.size())
    bad.push_back("counit table size disagrees with the generator count");
  auto word_ok = [&](const GenWord& w) {
    return std::all_of(w.begin(), w.end(), [&](int g) { return g >= 0 && g < gens; });
  };
  for (const auto& r : relations)
    for (const auto& [w, c] : r.terms)
      if (!word_ok(w)) bad.push_back("relation uses a generator index out of range");
  for (const auto& t : cop)
    for (const auto& [k, c] : t.terms)
      if (!word_ok(k.first) || !word_ok(k.second))
        bad.push_back("cop uses a generator index out of range");
  if (!counit_on_generators.empty())
    for (const auto& r : relations)
      if (!counit_poly(*this, r).is_zero())
        bad.push_back("counit does not kill the relation " + poly_str(r));
  return bad;
}

AlgebraPresentation monoid_algebra_presentation(const Presentation& p, const Field& f,
                                                const std::string& label) {
  AlgebraPresentation a;
  a.field = f;
  a.label = label;
  a.gen_names = p.gens;
  const int k = static_cast<int>(p.gens.size());
  if (p.group)
    for (const auto& g : p.gens) a.gen_names.push_back(g + "^-1");
  const Scalar one = Scalar::of(f, 1);
  auto letter_index = [&](int letter) {
    if (letter >= 0) return letter;
    if (!p.group) throw malformed_word("inverse letter in a monoid presentation");
    return k + (-letter - 1);
  };
  auto word_poly = [&](const Word& w) {
    GenWord gw;
    for (int letter : w.letters) gw.push_back(letter_index(letter));
    return NcPolynomial::mono(one, std::move(gw));
  };
  for (const auto& [lhs, rhs] : p.relations)
    a.relations.push_back(word_poly(lhs) - word_poly(rhs));
  if (p.group) {
    for (int g = 0; g < k; ++g) {
      NcPolynomial unit = NcPolynomial::unit(f);
      a.relations.push_back(NcPolynomial::mono(one, {g, k + g}) - unit);
      a.relations.push_back(NcPolynomial::mono(one, {k + g, g}) - unit);
    }
  }
  for (std::size_t g = 0; g < a.gen_names.size(); ++g) {
    NcPolynomial m = NcPolynomial::gen(f, static_cast<int>(g));
    a.cop.push_back(TensorPoly::of(m, m));
    a.counit_on_generators.push_back(one);
  }
  if (p.oracle) {
    OracleSpec o = *p.oracle;
    if (p.group && o.kind != OracleKind::free_model) {
      for (const auto& g : p.gens) {
        auto it = o.labels.find(g);
        long long l = it == o.labels.end() ? 0 : it->second;
        long long inv = -l;
        if (o.kind == OracleKind::cyclic && o.modulus > 0)
          inv = ((inv % o.modulus) + o.modulus) % o.modulus;
        o.labels[g + "^-1"] = inv;
      }
    }
    a.oracle = std::move(o);
  }
  return a;
}

AlgebraPresentation laurent_algebra(const Field& f) {
  AlgebraPresentation a;
  a.field = f;
  a.label = "F[t,t^-1]";
  a.gen_names = {"t", "t^-1"};
  const Scalar one = Scalar::of(f, 1);
  NcPolynomial unit = NcPolynomial::unit(f);
  a.relations.push_back(NcPolynomial::mono(one, {0, 1}) - unit);
  a.relations.push_back(NcPolynomial::mono(one, {1, 0}) - unit);
  for (int g = 0; g < 2; ++g) {
    NcPolynomial m = NcPolynomial::gen(f, g);
    a.cop.push_back(TensorPoly::of(m, m));
    a.counit_on_generators.push_back(one);
  }
  a.oracle = OracleSpec::integers({{"t", 1}, {"t^-1", -1}});
  return a;
}

std::string abelian_str(const AbelianElem& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i] != 0) os << "*x" << i << "^" << exp[i];
  }
  return os.str();
}

AbelianElem oracle_eval(const AlgebraPresentation& p, const NcPolynomial& q) {
  if (!p.oracle) throw malformed_input("'" + p.label + "' carries no oracle");
  const OracleSpec& o = *p.oracle;
  const int axes = o.kind == OracleKind::free_model ? p.gen_count() : 1;
  const int modulus = o.kind == OracleKind::cyclic ? o.modulus : 0;
  const Scalar one = Scalar::of(p.field, 1);
  std::vector<AbelianElem> gen_image;
  for (int g = 0; g < p.gen_count(); ++g) {
    std::vector<long long> e(static_cast<std::size_t>(axes), 0);
    if (o.kind == OracleKind::free_model) {
      e[static_cast<std::size_t>(g)] = 1;
    } else {
      auto it = o.labels.find(p.gen_names[static_cast<std::size_t>(g)]);
      long long l = it == o.labels.end() ? 0 : it->second;
      if (modulus > 0) l = ((l % modulus) + modulus) % modulus;
      e[0] = l;
    }
    AbelianElem img{{std::move(e), one}};
    Scalar shift = p.counit_of(g) - one;
    if (!shift.is_zero()) {
      std::vector<long long> zero(static_cast<std::size_t>(axes), 0);
      auto [it, fresh] = img.emplace(std::move(zero), shift);
      if (!fresh) {
        it->second = it->second + shift;
        if (it->second.is_zero()) img.erase(it);
      }
    }
    gen_image.push_back(std::move(img));
  }
  AbelianElem out;
  for (const auto& [w, c] : q.terms) {
    AbelianElem acc{{std::vector<long long>(static_cast<std::size_t>(axes), 0), one}};
    for (int g : w) acc = abelian_mul(acc, gen_image[static_cast<std::size_t>(g)], modulus);
    for (const auto& [e, v] : acc) {
      Scalar t = v * c;
      if (t.is_zero()) continue;
      auto [it, fresh] = out.emplace(e, t);
      if (!fresh) {
        it->second = it->second + t;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

bool oracle_respects_relations(const AlgebraPresentation& p) {
  if (!p.oracle) return false;
  for (const auto& r : p.relations)
    if (!oracle_eval(p, r).empty()) return false;
  return true;
}

std::string cert_status_str(CertStatus s) {
  switch (s) {
    case CertStatus::verified: return "verified";
    case CertStatus::refuted: return "refuted";
    default: return "inconclusive";
  }
}

Certificate ideal_membership(const AlgebraPresentation& p, const NcPolynomial& q, int budget) {
  if (q.is_zero()) return {CertStatus::verified, "span", "the zero polynomial"};
  if (p.oracle && oracle_respects_relations(p)) {
    AbelianElem image = oracle_eval(p, q);
    if (!image.empty())
      return {CertStatus::refuted, "oracle",
              "abelianized image " + abelian_str(image) + " is nonzero"};
  }
  // iterative deepening: a certificate found in a small span stays valid in
  // every larger one, so stop at the first cap that works
  const int cap_hi = std::max(budget, q.max_length());
  for (int cap = q.max_length(); cap <= cap_hi; ++cap) {
    auto span = ideal_span(p, cap);
    if (span.empty()) continue;
    std::vector<const NcPolynomial*> cols;
    cols.reserve(span.size());
    for (const auto& s : span) cols.push_back(&s);
    std::map<GenWord, std::int64_t> row_of;
    SparseMatrix a = columns_matrix(cols, row_of);
    bool fits = true;
    for (const auto& [w, c] : q.terms)
      if (!row_of.count(w)) fits = false;
    if (!fits) continue;
    std::vector<const NcPolynomial*> target{&q};
    SparseMatrix b = columns_matrix(target, row_of);
    if (cols_in_span(a, b, p.field))
      return {CertStatus::verified, "span",
              "combination of " + std::to_string(span.size()) +
                  " bounded products at word length " + std::to_string(cap)};
  }
  return {CertStatus::inconclusive, "none",
          "no certificate within word length " + std::to_string(cap_hi)};
}

Certificate invertible_in_quotient(const AlgebraPresentation& p, const NcPolynomial& q,
                                   int budget) {
  if (p.oracle && oracle_respects_relations(p)) {
    AbelianElem image = oracle_eval(p, q);
    const OracleSpec& o = *p.oracle;
    if (o.kind == OracleKind::free_model) {
      bool constant = image.size() == 1 &&
                      std::all_of(image.begin()->first.begin(), image.begin()->first.end(),
                                  [](long long e) { return e == 0; });
      if (!constant)
        return {CertStatus::refuted, "oracle",
                "abelianized image " + abelian_str(image) +
                    " is not a unit of the polynomial algebra"};
    } else if (o.kind == OracleKind::integers) {
      if (image.size() != 1)
        return {CertStatus::refuted, "oracle",
                "abelianized image " + abelian_str(image) +
                    " is not a unit of the Laurent algebra"};
    } else {
      const int n = o.modulus;
      std::vector<SparseMatrix::Entry> tri;
      for (const auto& [e, c] : image)
        for (int i = 0; i < n; ++i)
          tri.push_back({(i + e[0]) % n, i, c});
      SparseMatrix mult = SparseMatrix::from_triplets(n, n, std::move(tri));
      if (rank(mult, p.field) < n)
        return {CertStatus::refuted, "oracle",
                "abelianized image " + abelian_str(image) +
                    " is a zero divisor of the cyclic group algebra"};
    }
  }
  if (auto inv = find_inverse(p, q, budget))
    return {CertStatus::verified, "inverse", "two-sided inverse " + p.poly_str(*inv)};
  return {CertStatus::inconclusive, "none",
          "no inverse supported on words of length <= " + std::to_string(budget)};
}

std::optional<NcPolynomial> find_inverse(const AlgebraPresentation& p, const NcPolynomial& q,
                                         int budget) {
  // one candidate r with q*r - 1 and r*q - 1 both in the ideal span, solved
  // as a single exact linear system; iterative deepening, since an inverse
  // found under a small budget stays one
  const Scalar one = Scalar::of(p.field, 1);
  for (int b_cur = 0; b_cur <= budget; ++b_cur) {
    const int cap = b_cur + q.max_length();
    auto words = words_up_to(p.gen_count(), b_cur);
    std::vector<NcPolynomial> left, right;
    for (const auto& w : words) {
      NcPolynomial m = NcPolynomial::mono(one, w);
      left.push_back(q * m);
      right.push_back(m * q);
    }
    auto span = ideal_span(p, cap);
    std::map<GenWord, std::int64_t> row_of;
    {
      std::vector<const NcPolynomial*> all;
      for (const auto& c : left) all.push_back(&c);
      for (const auto& c : right) all.push_back(&c);
      for (const auto& c : span) all.push_back(&c);
      columns_matrix(all, row_of);  // builds the shared row indexing
    }
    row_of.emplace(GenWord{}, static_cast<std::int64_t>(row_of.size()));
    const std::int64_t rows = static_cast<std::int64_t>(row_of.size());
    const std::int64_t w_count = static_cast<std::int64_t>(words.size());
    const std::int64_t s_count = static_cast<std::int64_t>(span.size());
    std::vector<SparseMatrix::Entry> tri;
    auto put = [&](std::int64_t block, const NcPolynomial& poly, std::int64_t col) {
      for (const auto& [w, c] : poly.terms)
        tri.push_back({block * rows + row_of.at(w), col, c});
    };
    for (std::int64_t j = 0; j < w_count; ++j) {
      put(0, left[static_cast<std::size_t>(j)], j);
      put(1, right[static_cast<std::size_t>(j)], j);
    }
    for (std::int64_t j = 0; j < s_count; ++j) {
      put(0, span[static_cast<std::size_t>(j)], w_count + j);
      put(1, span[static_cast<std::size_t>(j)], w_count + s_count + j);
    }
    SparseMatrix a =
        SparseMatrix::from_triplets(2 * rows, w_count + 2 * s_count, std::move(tri));
    std::vector<Scalar> b(static_cast<std::size_t>(2 * rows), Scalar::of(p.field, 0));
    b[static_cast<std::size_t>(row_of.at(GenWord{}))] = one;
    b[static_cast<std::size_t>(rows + row_of.at(GenWord{}))] = one;
    if (auto x = solve(a, b, p.field)) {
      NcPolynomial inv;
      for (std::int64_t j = 0; j < w_count; ++j)
        inv.add_term((*x)[static_cast<std::size_t>(j)], words[static_cast<std::size_t>(j)]);
      return inv;
    }
  }
  return std::nullopt;
}

NcPolynomial apply_presentation_map(const PresentationMap& m, const Field& f,
                                    const NcPolynomial& q) {
  NcPolynomial out;
  for (const auto& [w, c] : q.terms) {
    NcPolynomial acc = NcPolynomial::unit(f);
    for (int g : w) acc = acc * m.images[static_cast<std::size_t>(g)];
    out = out + acc.scaled(c);
  }
  return out;
}

TensorPoly cop_of(const AlgebraPresentation& p, const NcPolynomial& q) {
  if (!p.has_cop()) throw malformed_input("'" + p.label + "' carries no comultiplication");
  TensorPoly out;
  const NcPolynomial unit = NcPolynomial::unit(p.field);
  for (const auto& [w, c] : q.terms) {
    TensorPoly acc = TensorPoly::of(unit, unit);
    for (int g : w) acc = acc * p.cop[static_cast<std::size_t>(g)];
    out = out + acc.scaled(c);
  }
  return out;
}

Scalar counit_poly(const AlgebraPresentation& p, const NcPolynomial& q) {
  Scalar out = Scalar::of(p.field, 0);
  for (const auto& [w, c] : q.terms) {
    Scalar acc = c;
    for (int g : w) acc = acc * p.counit_of(g);
    out = out + acc;
  }
  return out;
}

MapCheck presentation_map_check(const AlgebraPresentation& src,
                                const AlgebraPresentation& tgt,
                                const PresentationMap& m, int budget) {
  if (m.images.size() != src.gen_names.size())
    throw malformed_input("map '" + m.label + "' images disagree with '" + src.label +
                          "' generators");
  MapCheck out;
  bool inconclusive = false;

  // relations must land in the target ideal
  for (const auto& r : src.relations) {
    NcPolynomial image = apply_presentation_map(m, tgt.field, r);
    Certificate c = ideal_membership(tgt, image, budget);
    if (c.status == CertStatus::refuted)
      out.violations.push_back("relation " + src.poly_str(r) + " maps to " +
                               tgt.poly_str(image) + " outside the ideal: " + c.detail);
    else if (c.status == CertStatus::inconclusive)
      inconclusive = true;
  }

  // counits must agree, provided both counits actually descend
  bool src_counit_ok = true, tgt_counit_ok = true;
  for (const auto& r : src.relations)
    if (!counit_poly(src, r).is_zero()) src_counit_ok = false;
  for (const auto& r : tgt.relations)
    if (!counit_poly(tgt, r).is_zero()) tgt_counit_ok = false;
  for (int g = 0; g < src.gen_count(); ++g) {
    Scalar want = src.counit_of(g);
    Scalar got = counit_poly(tgt, m.images[static_cast<std::size_t>(g)]);
    if (want == got) continue;
    if (src_counit_ok && tgt_counit_ok)
      out.violations.push_back("counit of '" + src.gen_names[static_cast<std::size_t>(g)] +
                               "' is " + want.str() + " but its image has counit " +
                               got.str());
    else
      inconclusive = true;
  }

  // comultiplication compatibility when both sides carry the data
  if (src.has_cop() && tgt.has_cop()) {
    bool tgt_oracle_ok = tgt.oracle && oracle_respects_relations(tgt);
    for (int g = 0; g < src.gen_count(); ++g) {
      TensorPoly lhs = cop_of(tgt, m.images[static_cast<std::size_t>(g)]);
      TensorPoly rhs;
      for (const auto& [k, c] : src.cop[static_cast<std::size_t>(g)].terms) {
        NcPolynomial l = apply_presentation_map(
            m, tgt.field, NcPolynomial::mono(Scalar::of(src.field, 1), k.first));
        NcPolynomial r = apply_presentation_map(
            m, tgt.field, NcPolynomial::mono(Scalar::of(src.field, 1), k.second));
        rhs = rhs + TensorPoly::of(l, r).scaled(c);
      }
      TensorPoly diff = lhs - rhs;
      if (diff.is_zero()) continue;
      if (tgt_oracle_ok) {
        auto image = oracle_eval_tensor(tgt, diff);
        if (!image.empty()) {
          out.violations.push_back("comultiplication of '" +
                                   src.gen_names[static_cast<std::size_t>(g)] +
                                   "' is not respected: the defect " +
                                   tensor_poly_str(diff, tgt.gen_names) +
                                   " survives abelianization");
          continue;
        }
      }
      // bounded span fallback inside ideal (x) 1 + 1 (x) ideal: columns pair
      // each bounded ideal product with the legs already present in the defect
      std::set<GenWord> legs;
      int leg_cap = 0;
      for (const auto& [k, c] : diff.terms) {
        legs.insert(k.first);
        legs.insert(k.second);
        leg_cap = std::max({leg_cap, static_cast<int>(k.first.size()),
                            static_cast<int>(k.second.size())});
      }
      auto span = ideal_span(tgt, std::max(budget, leg_cap));
      std::map<std::pair<GenWord, GenWord>, std::int64_t> row_of;
      std::vector<TensorPoly> cols;
      const Scalar one = Scalar::of(tgt.field, 1);
      for (const auto& s : span)
        for (const auto& u : legs) {
          NcPolynomial mu = NcPolynomial::mono(one, u);
          cols.push_back(TensorPoly::of(s, mu));
          cols.push_back(TensorPoly::of(mu, s));
        }
      for (const auto& t : cols)
        for (const auto& [k, c] : t.terms)
          row_of.emplace(k, static_cast<std::int64_t>(row_of.size()));
      bool fits = true;
      for (const auto& [k, c] : diff.terms)
        if (!row_of.count(k)) fits = false;
      bool spanned = false;
      if (fits) {
        std::vector<SparseMatrix::Entry> tri;
        for (std::size_t j = 0; j < cols.size(); ++j)
          for (const auto& [k, c] : cols[j].terms)
            tri.push_back({row_of.at(k), static_cast<std::int64_t>(j), c});
        SparseMatrix a =
            SparseMatrix::from_triplets(static_cast<std::int64_t>(row_of.size()),
                                        static_cast<std::int64_t>(cols.size()), std::move(tri));
        std::vector<SparseMatrix::Entry> bt;
        for (const auto& [k, c] : diff.terms) bt.push_back({row_of.at(k), 0, c});
        SparseMatrix b = SparseMatrix::from_triplets(
            static_cast<std::int64_t>(row_of.size()), 1, std::move(bt));
        spanned = cols_in_span(a, b, tgt.field);
      }
      if (!spanned) inconclusive = true;
    }
  }

  if (!out.violations.empty()) {
    out.status = CertStatus::refuted;
    out.detail = out.violations.front();
  } else if (inconclusive) {
    out.status = CertStatus::inconclusive;
    out.detail = "some compatibility checks exhausted the budget";
  } else {
    out.status = CertStatus::verified;
    out.detail = "relations, counit and comultiplication all check out";
  }
  return out;
}

std::optional<NcPolynomial> find_preimage(const AlgebraPresentation& src,
                                          const AlgebraPresentation& tgt,
                                          const PresentationMap& m,
                                          const NcPolynomial& target, int budget) {
  int image_len = 1;
  for (const auto& img : m.images) image_len = std::max(image_len, img.max_length());
  for (int b = 0; b <= budget; ++b) {
    auto words = words_up_to(src.gen_count(), b);
    const Scalar one = Scalar::of(src.field, 1);
    std::vector<NcPolynomial> images;
    for (const auto& w : words)
      images.push_back(apply_presentation_map(m, tgt.field, NcPolynomial::mono(one, w)));
    const int cap = std::max(b * image_len, target.max_length());
    auto span = ideal_span(tgt, cap);
    std::vector<const NcPolynomial*> cols;
    for (const auto& c : images) cols.push_back(&c);
    for (const auto& c : span) cols.push_back(&c);
    std::map<GenWord, std::int64_t> row_of;
    SparseMatrix a = columns_matrix(cols, row_of);
    bool fits = true;
    for (const auto& [w, c] : target.terms)
      if (!row_of.count(w)) fits = false;
    if (!fits) continue;
    std::vector<Scalar> rhs(row_of.size(), Scalar::of(tgt.field, 0));
    for (const auto& [w, c] : target.terms) rhs[static_cast<std::size_t>(row_of.at(w))] = c;
    if (auto x = solve(a, rhs, tgt.field)) {
      NcPolynomial out;
      for (std::size_t j = 0; j < words.size(); ++j) out.add_term((*x)[j], words[j]);
      return out;
    }
  }
  return std::nullopt;
}

IsoCheck presentation_iso_check(const AlgebraPresentation& src,
                                const AlgebraPresentation& tgt,
                                const PresentationMap& m, int budget) {
  IsoCheck out;
  MapCheck forward = presentation_map_check(src, tgt, m, budget);
  if (forward.status == CertStatus::refuted) {
    out.status = CertStatus::refuted;
    out.detail = "the map itself fails: " + forward.detail;
    return out;
  }
  if (forward.status == CertStatus::inconclusive) {
    out.detail = "the forward map check exhausted the budget";
    return out;
  }

  PresentationMap inverse{m.label + "^-1", {}};
  for (int d = 0; d < tgt.gen_count(); ++d) {
    auto pre = find_preimage(src, tgt, m, NcPolynomial::gen(tgt.field, d), budget);
    if (!pre) {
      out.detail = "generator '" + tgt.gen_names[static_cast<std::size_t>(d)] +
                   "' acquired no preimage within the budget";
      return out;
    }
    inverse.images.push_back(std::move(*pre));
  }

  MapCheck backward = presentation_map_check(tgt, src, inverse, budget);
  if (backward.status != CertStatus::verified) {
    out.status = backward.status == CertStatus::refuted ? CertStatus::inconclusive
                                                        : CertStatus::inconclusive;
    out.detail = "the assembled inverse fails its map check: " + backward.detail;
    return out;
  }

  for (int g = 0; g < src.gen_count(); ++g) {
    NcPolynomial round =
        apply_presentation_map(inverse, src.field, m.images[static_cast<std::size_t>(g)]);
    NcPolynomial diff = round - NcPolynomial::gen(src.field, g);
    Certificate c = ideal_membership(src, diff, budget);
    if (c.status != CertStatus::verified) {
      out.detail = "inverse-then-forward misses '" + src.gen_names[static_cast<std::size_t>(g)] +
                   "': " + c.detail;
      return out;
    }
  }
  for (int d = 0; d < tgt.gen_count(); ++d) {
    NcPolynomial round =
        apply_presentation_map(m, tgt.field, inverse.images[static_cast<std::size_t>(d)]);
    NcPolynomial diff = round - NcPolynomial::gen(tgt.field, d);
    Certificate c = ideal_membership(tgt, diff, budget);
    if (c.status != CertStatus::verified) {
      out.detail = "forward-then-inverse misses '" + tgt.gen_names[static_cast<std::size_t>(d)] +
                   "': " + c.detail;
      return out;
    }
  }

  out.status = CertStatus::verified;
  out.detail = "two-sided inverse verified on every generator";
  out.inverse = std::move(inverse);
  return out;
}

}  // namespace ck
