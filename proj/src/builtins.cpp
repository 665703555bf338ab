#include "cobarkit/builtins.hpp"

#include <algorithm>
#include <sstream>

namespace ck {

namespace {

std::string vertex_set_name(const std::vector<int>& verts) {
  std::ostringstream os;
  for (size_t i = 0; i < verts.size(); ++i) {
    if (i) {
      if (verts.back() > 9) os << ',';
    }
    os << verts[i];
  }
  return os.str();
}

// all (k+1)-subsets of {0..n} in lexicographic order
void subsets(int n, int k1, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> go = [&](int from) {
    if (static_cast<int>(cur.size()) == k1) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(0);
}

SSetPtr simplex_like(const std::string& label, int n, bool full) {
  auto x = std::make_shared<SSet>(label);
  int top = full ? n : n - 1;
  for (int k = 0; k <= top; ++k) {
    std::vector<std::vector<int>> subs;
    subsets(n, k + 1, subs);
    for (const auto& s : subs) {
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= k && k > 0; ++i) {
        std::vector<int> f = s;
        f.erase(f.begin() + i);
        faces.push_back(
            SimplexRef::of(x->key_of(k - 1, vertex_set_name(f))));
      }
      x->add_simplex(k, vertex_set_name(s), std::move(faces));
    }
  }
  return x;
}

// alternating word of the given length starting with the given letter
std::string alt_word(char first, int len) {
  std::string w;
  for (int i = 0; i < len; ++i) w += (i % 2 == 0) ? first : (first == 'u' ? 'v' : 'u');
  return w;
}

}  // namespace

SSetPtr pt() {
  auto x = std::make_shared<SSet>("pt");
  x->add_simplex(0, "*", {});
  return x;
}

SSetPtr delta(int n) {
  if (n < 0) throw malformed_input("delta(n) needs n >= 0");
  return simplex_like("delta(" + std::to_string(n) + ")", n, true);
}

SSetPtr boundary_delta(int n) {
  if (n < 1) throw malformed_input("boundary_delta(n) needs n >= 1");
  return simplex_like("boundary_delta(" + std::to_string(n) + ")", n, false);
}

SSetPtr s1() {
  auto x = std::make_shared<SSet>("s1");
  x->add_simplex(0, "*", {});
  SimplexRef v = SimplexRef::of({0, 0});
  x->add_simplex(1, "sigma", {v, v});
  x->tau_oracle = OracleSpec::free_model();
  x->pi1_oracle = OracleSpec::integers({{"sigma", 1}});
  return x;
}

SSetPtr sphere2_min() {
  auto x = std::make_shared<SSet>("sphere2_min");
  x->add_simplex(0, "*", {});
  SimplexRef sv = degenerate(SimplexRef::of({0, 0}), 0);
  x->add_simplex(2, "e", {sv, sv, sv});
  x->tau_oracle = OracleSpec::free_model();
  x->pi1_oracle = OracleSpec::free_model();
  return x;
}

SSetPtr rp2_presentation() {
  auto x = std::make_shared<SSet>("rp2_presentation");
  x->add_simplex(0, "*", {});
  SimplexRef v = SimplexRef::of({0, 0});
  x->add_simplex(1, "a", {v, v});
  SimplexRef a = SimplexRef::of({1, 0});
  x->add_simplex(2, "R", {a, degenerate(v, 0), a});
  x->tau_oracle = OracleSpec::cyclic(2, {{"a", 1}});
  x->pi1_oracle = OracleSpec::cyclic(2, {{"a", 1}});
  return x;
}

namespace {

// Shared generator rule for the nerve of the free-living isomorphism and its
// one-vertex quotient.  Cells in dimension n >= 1 are the two alternating
// words; the inner face d_i is s_{i-1} applied to the length-(n-2) prefix
// (composing an adjacent pair yields an identity arrow), and d_0 / d_n drop a
// letter.
void add_alt_cells(SSet& self, int n, bool quotient) {
  auto vertex_of = [&](char first) -> SimplexKey {
    if (quotient) return self.key_of(0, "*");
    return self.key_of(0, first == 'u' ? "x0" : "x1");
  };
  if (n == 0) {
    if (quotient)
      self.add_simplex(0, "*", {});
    else {
      self.add_simplex(0, "x0", {});
      self.add_simplex(0, "x1", {});
    }
    return;
  }
  for (char first : {'u', 'v'}) {
    std::string w = alt_word(first, n);
    std::vector<SimplexRef> faces;
    for (int i = 0; i <= n; ++i) {
      if (i == 0) {
        // drop the first letter; the rest starts with the other letter
        if (n == 1)
          faces.push_back(SimplexRef::of(vertex_of(first == 'u' ? 'v' : 'u')));
        else
          faces.push_back(SimplexRef::of(self.key_of(n - 1, w.substr(1))));
      } else if (i == n) {
        if (n == 1)
          faces.push_back(SimplexRef::of(vertex_of(first)));
        else
          faces.push_back(SimplexRef::of(self.key_of(n - 1, w.substr(0, n - 1))));
      } else {
        SimplexRef inner =
            n == 2 ? SimplexRef::of(vertex_of(first))
                   : SimplexRef::of(self.key_of(n - 2, w.substr(0, n - 2)));
        faces.push_back(degenerate(inner, i - 1));
      }
    }
    self.add_simplex(n, w, std::move(faces));
  }
}

}  // namespace

SSetPtr nerve_j() {
  auto x = std::make_shared<SSet>("nerve_j");
  x->set_rule([](SSet& self, int n) { add_alt_cells(self, n, false); });
  return x;
}

SSetPtr s1_localized() {
  auto x = std::make_shared<SSet>("s1_localized");
  x->set_rule([](SSet& self, int n) { add_alt_cells(self, n, true); });
  x->tau_oracle = OracleSpec::integers({{"u", 1}, {"v", -1}});
  x->pi1_oracle = OracleSpec::integers({{"u", 1}, {"v", -1}});
  return x;
}

SSetPtr wedge(std::vector<SSetPtr> comps) {
  std::string label = "wedge(";
  for (size_t i = 0; i < comps.size(); ++i) {
    if (comps[i]->count(0) != 1)
      throw malformed_input("wedge component " + std::to_string(i) +
                            " ('" + comps[i]->label() + "') is not reduced");
    if (i) label += ",";
    label += comps[i]->label();
  }
  label += ")";
  if (comps.empty()) return pt();
  auto x = std::make_shared<SSet>(label);
  auto cs = comps;
  x->set_rule([cs](SSet& self, int n) {
    if (n == 0) {
      self.add_simplex(0, "*", {});
      return;
    }
    for (size_t c = 0; c < cs.size(); ++c) {
      const SSet& comp = *cs[c];
      for (int idx = 0; idx < comp.count(n); ++idx) {
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= n; ++i) {
          SimplexRef f = comp.base_face({n, idx}, i);
          SimplexKey nb;
          if (f.base.dim == 0)
            nb = SimplexKey{0, 0};
          else
            nb = self.key_of(f.base.dim,
                             std::to_string(c) + "." + comp.name(f.base));
          faces.push_back(SimplexRef{f.degs, nb});
        }
        self.add_simplex(n, std::to_string(c) + "." + comp.name({n, idx}),
                         std::move(faces));
      }
    }
  });
  return x;
}

std::pair<int, SimplexKey> wedge_locate(const SSet& w,
                                        const std::vector<SSetPtr>& comps,
                                        SimplexKey k) {
  if (k.dim == 0) return {-1, {0, 0}};  // the shared basepoint
  const std::string& nm = w.name(k);
  auto dot = nm.find('.');
  if (dot == std::string::npos)
    throw malformed_input("'" + nm + "' is not a wedge cell");
  int c = std::stoi(nm.substr(0, dot));
  return {c, comps[static_cast<size_t>(c)]->key_of(k.dim, nm.substr(dot + 1))};
}

SimplexRef wedge_embed(const SSet& w, const std::vector<SSetPtr>& comps,
                       int comp, const SimplexRef& r) {
  SimplexKey nb;
  if (r.base.dim == 0)
    nb = w.key_of(0, "*");
  else
    nb = w.key_of(r.base.dim, std::to_string(comp) + "." +
                                  comps[static_cast<size_t>(comp)]->name(r.base));
  return SimplexRef{r.degs, nb};
}

namespace {

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  auto b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

}  // namespace

SSetPtr builtin_sset(const std::string& raw) {
  std::string name = strip(raw);
  if (name == "pt") return pt();
  if (name == "s1") return s1();
  if (name == "sphere2_min") return sphere2_min();
  if (name == "rp2_presentation") return rp2_presentation();
  if (name == "nerve_j") return nerve_j();
  if (name == "s1_localized") return s1_localized();
  auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    std::string head = name.substr(0, open);
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    if (head == "delta") return delta(std::stoi(inner));
    if (head == "boundary_delta") return boundary_delta(std::stoi(inner));
    if (head == "wedge") {
      std::vector<SSetPtr> comps;
      for (const auto& a : split_args(inner)) comps.push_back(builtin_sset(a));
      return wedge(std::move(comps));
    }
  }
  throw malformed_input("unknown builtin fixture '" + name + "'");
}

SSetMap builtin_map(const std::string& raw) {
  std::string name = strip(raw);
  if (name == "iota_s1") {
    auto a = s1();
    auto b = s1_localized();
    SSetMap m("iota_s1", a, b);
    m.set_image({0, 0}, SimplexRef::of(b->key_of(0, "*")));
    m.set_image({1, 0}, SimplexRef::of(b->key_of(1, "u")));
    return m;
  }
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    std::string arg = name.substr(colon + 1);
    if (head == "id") return SSetMap::identity(builtin_sset(arg));
    if (head == "collapse") return SSetMap::constant(builtin_sset(arg), pt());
  }
  throw malformed_input("unknown builtin map '" + name + "'");
}

}  // namespace ck
