#include "cobarkit/cover.hpp"

#include "cobarkit/presentation.hpp"

namespace ck {

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw malformed_input("cyclic group order must be positive");
  FiniteGroup g;
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
  return g;
}

bool FiniteGroup::is_cyclic_standard() const {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (mult[a][b] != (a + b) % order) return false;
  return true;
}

void FiniteGroup::check() const {
  if (order <= 0 || static_cast<int>(mult.size()) != order)
    throw malformed_input("bad group table size");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != order)
      throw malformed_input("bad group table row");
    for (int v : row)
      if (v < 0 || v >= order) throw malformed_input("group table entry out of range");
  }
  for (int a = 0; a < order; ++a)
    if (mult[0][a] != a || mult[a][0] != a)
      throw malformed_input("group table: 0 is not a unit");
  for (int a = 0; a < order; ++a) {
    bool has_inv = false;
    for (int b = 0; b < order; ++b) has_inv |= mult[a][b] == 0;
    if (!has_inv) throw malformed_input("group table: missing inverse");
  }
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw malformed_input("group table not associative");
}

namespace {

int edge_label(const SSet& x, const std::map<std::string, int>& labeling,
               const SimplexRef& e) {
  if (!e.nondegenerate()) return 0;
  auto it = labeling.find(x.name(e.base));
  return it == labeling.end() ? 0 : it->second;
}

// label of the last edge (vertices n-1, n) of an n-simplex
int last_edge_label(const SSet& x, const std::map<std::string, int>& labeling,
                    SimplexRef r) {
  while (r.dim() > 1) r = face(x, r, 0);
  return edge_label(x, labeling, r);
}

}  // namespace

SSetPtr twisted_cover(const SSetPtr& x, const FiniteGroup& g,
                      const std::map<std::string, int>& labeling) {
  g.check();
  for (const auto& [name, h] : labeling) {
    if (h < 0 || h >= g.order)
      throw invalid_cover("label of '" + name + "' is not a group element");
    if (!x->find(1, name))
      throw invalid_cover("label names missing 1-simplex '" + name + "'");
  }
  // cocycle condition on every nondegenerate 2-simplex
  for (int idx = 0; idx < x->count(2); ++idx) {
    SimplexRef r = SimplexRef::of({2, idx});
    int l0 = edge_label(*x, labeling, face(*x, r, 0));
    int l1 = edge_label(*x, labeling, face(*x, r, 1));
    int l2 = edge_label(*x, labeling, face(*x, r, 2));
    if (g.mult[l0][l2] != l1)
      throw invalid_cover("labels are not a cocycle on 2-simplex '" +
                          x->name({2, idx}) + "'");
  }

  auto cov = std::make_shared<SSet>(x->label() + "~cover");
  SSetPtr base = x;
  FiniteGroup grp = g;
  auto labels = labeling;
  cov->set_rule([base, grp, labels](SSet& self, int n) {
    for (int idx = 0; idx < base->count(n); ++idx) {
      for (int h = 0; h < grp.order; ++h) {
        std::string nm = base->name({n, idx}) + "@" + std::to_string(h);
        std::vector<SimplexRef> faces;
        if (n > 0) {
          SimplexRef r = SimplexRef::of({n, idx});
          int t = last_edge_label(*base, labels, r);
          for (int i = 0; i <= n; ++i) {
            SimplexRef fr = face(*base, r, i);
            int hh = i == n ? grp.mult[h][t] : h;
            // (s_W y, h') = s_W (y, h'): same word over the paired base
            SimplexKey pk = self.key_of(
                fr.base.dim, base->name(fr.base) + "@" + std::to_string(hh));
            faces.push_back(SimplexRef{fr.degs, pk});
          }
        }
        self.add_simplex(n, nm, std::move(faces));
      }
    }
  });
  if (x->truncation() >= 0) cov->set_truncation(x->truncation());
  return cov;
}

SSetPtr universal_cover(const SSetPtr& x, const FiniteGroup& g,
                        const std::map<std::string, int>& labeling, int level) {
  g.check();
  Presentation p = pi1_presentation(*x);
  if (g.order == 1) {
    // trivial group: universal cover = x itself only when pi1 is certified
    // trivial (no generators, or cyclic(1) oracle)
    bool trivial_ok =
        p.gens.empty() ||
        (p.oracle && p.oracle->kind == OracleKind::cyclic && p.oracle->modulus == 1);
    if (!trivial_ok)
      throw invalid_cover("trivial cover requested but pi1 of '" + x->label() +
                          "' is not certified trivial");
    return twisted_cover(x, g, {});
  }
  if (!p.oracle || p.oracle->kind != OracleKind::cyclic)
    throw invalid_cover(
        "universal cover needs a certified finite cyclic pi1; '" + x->label() +
        "' carries " + (p.oracle ? p.oracle->str() : std::string("no oracle")));
  if (p.oracle->modulus != g.order || !g.is_cyclic_standard())
    throw invalid_cover("group order " + std::to_string(g.order) +
                        " does not match certified pi1 = Z/" +
                        std::to_string(p.oracle->modulus));
  for (const auto& gen : p.gens) {
    long long lab = p.oracle->labels.at(gen);
    lab %= g.order;
    if (lab < 0) lab += g.order;
    auto it = labeling.find(gen);
    int given = it == labeling.end() ? 0 : it->second;
    if (given != static_cast<int>(lab))
      throw invalid_cover("labeling of '" + gen +
                          "' disagrees with the certified pi1 labels");
  }
  SSetPtr cov = twisted_cover(x, g, labeling);
  cov->count(std::max(level, 0));  // materialize and surface errors eagerly
  return cov;
}

}  // namespace ck
