#include "cobarkit/pushout.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cobarkit/builtins.hpp"

namespace ck {

namespace {

using Elem = std::pair<int, SimplexRef>;  // (side, ref), side 0 = B, 1 = C

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the smallest index as root
    parent[b] = a;
  }
};

struct ClassInfo {
  Elem rep;                      // smallest member, C side preferred
  bool degenerate = false;
  int deg_index = 0;             // this class = s_{deg_index}(deg_from)
  int deg_from = 0;              // class index one dimension down
  SimplexRef pref;               // canonical ref in the result
  bool pref_set = false;
};

struct LevelData {
  std::map<Elem, int> class_of;  // element -> class index
  std::vector<ClassInfo> classes;
};

// order used to choose representatives: C-side elements first, then by ref
bool rep_less(const Elem& a, const Elem& b) {
  if (a.first != b.first) return a.first > b.first;  // side 1 (C) wins
  return a.second < b.second;
}

}  // namespace

PushoutResult pushout(const SSetMap& i_ab, const SSetMap& f_ac, int level,
                      const std::string& label) {
  if (i_ab.src().get() != f_ac.src().get())
    throw malformed_input("pushout legs must share their source");
  const SSet& a = *i_ab.src();
  const SSet& b = *i_ab.tgt();
  const SSet& c = *f_ac.tgt();

  auto p = std::make_shared<SSet>(label);
  std::vector<LevelData> lvls(static_cast<size_t>(level) + 1);
  std::vector<std::vector<std::pair<int, SimplexRef>>> provenance(
      static_cast<size_t>(level) + 1);

  // canonical ref in the result for a class, via its degeneracy decomposition
  std::function<SimplexRef(int, int)> class_ref = [&](int dim, int ci) {
    ClassInfo& info = lvls[static_cast<size_t>(dim)].classes[static_cast<size_t>(ci)];
    if (info.pref_set) return info.pref;
    if (!info.degenerate)
      throw std::logic_error("nondegenerate class without a ref");
    info.pref = degenerate(class_ref(dim - 1, info.deg_from), info.deg_index);
    info.pref_set = true;
    return info.pref;
  };

  for (int n = 0; n <= level; ++n) {
    LevelData& L = lvls[static_cast<size_t>(n)];
    std::vector<Elem> elems;
    for (const auto& r : all_simplices(b, n)) elems.emplace_back(0, r);
    for (const auto& r : all_simplices(c, n)) elems.emplace_back(1, r);
    std::sort(elems.begin(), elems.end());
    std::map<Elem, int> id;
    for (size_t i = 0; i < elems.size(); ++i) id[elems[i]] = static_cast<int>(i);

    Dsu dsu(elems.size());
    for (const auto& r : all_simplices(a, n)) {
      Elem eb{0, i_ab.apply(r)};
      Elem ec{1, f_ac.apply(r)};
      auto itb = id.find(eb), itc = id.find(ec);
      if (itb == id.end() || itc == id.end())
        throw malformed_input("pushout legs produced a ref outside the target");
      dsu.unite(itb->second, itc->second);
    }

    // group members by root, deterministic order by root index
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < elems.size(); ++i)
      groups[dsu.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    for (auto& [root, members] : groups) {
      int ci = static_cast<int>(L.classes.size());
      ClassInfo info;
      info.rep = elems[static_cast<size_t>(members[0])];
      for (int m : members) {
        const Elem& e = elems[static_cast<size_t>(m)];
        L.class_of[e] = ci;
        if (rep_less(e, info.rep)) info.rep = e;
      }
      L.classes.push_back(std::move(info));
    }

    // mark degenerate classes via s_i on lower classes (well-defined because
    // the identification relation commutes with degeneracies)
    if (n > 0) {
      LevelData& prev = lvls[static_cast<size_t>(n) - 1];
      for (size_t pc = 0; pc < prev.classes.size(); ++pc) {
        const Elem& rep = prev.classes[pc].rep;
        for (int i = 0; i <= n - 1; ++i) {
          Elem up{rep.first, degenerate(rep.second, i)};
          int ci = L.class_of.at(up);
          ClassInfo& info = L.classes[static_cast<size_t>(ci)];
          if (!info.degenerate) {
            info.degenerate = true;
            info.deg_index = i;
            info.deg_from = static_cast<int>(pc);
          }
        }
      }
    }

    // realize nondegenerate classes as generators of the result
    std::set<std::string> used;
    for (size_t ci = 0; ci < L.classes.size(); ++ci) {
      ClassInfo& info = L.classes[ci];
      if (info.degenerate) continue;
      const SSet& side = info.rep.first == 0 ? b : c;
      if (!info.rep.second.nondegenerate())
        throw std::logic_error("nondegenerate class with degenerate representative");
      std::string nm = (info.rep.first == 0 ? "b." : "") +
                       side.name(info.rep.second.base);
      while (used.count(nm)) nm += "'";
      used.insert(nm);
      std::vector<SimplexRef> faces;
      for (int i = 0; i < n + 1 && n > 0; ++i) {
        SimplexRef fr = face(side, info.rep.second, i);
        LevelData& prev = lvls[static_cast<size_t>(n) - 1];
        int fc = prev.class_of.at({info.rep.first, fr});
        faces.push_back(class_ref(n - 1, fc));
      }
      int idx = p->add_simplex(n, nm, std::move(faces));
      info.pref = SimplexRef::of({n, idx});
      info.pref_set = true;
      provenance[static_cast<size_t>(n)].push_back(
          {info.rep.first, info.rep.second});
    }
  }

  p->set_truncation(level);

  PushoutResult out;
  out.p = p;
  out.provenance = std::move(provenance);
  out.from_b = SSetMap(label + ".from_b", i_ab.tgt(), p);
  out.from_c = SSetMap(label + ".from_c", f_ac.tgt(), p);
  for (int n = 0; n <= level; ++n) {
    LevelData& L = lvls[static_cast<size_t>(n)];
    for (int idx = 0; idx < b.count(n); ++idx) {
      int ci = L.class_of.at({0, SimplexRef::of({n, idx})});
      out.from_b.set_image({n, idx}, class_ref(n, ci));
    }
    for (int idx = 0; idx < c.count(n); ++idx) {
      int ci = L.class_of.at({1, SimplexRef::of({n, idx})});
      out.from_c.set_image({n, idx}, class_ref(n, ci));
    }
  }
  std::string why = "pushout '" + label + "' was built to level " +
                    std::to_string(level) + " only";
  out.from_b.set_rule([why](SimplexKey) -> SimplexRef {
    throw insufficient_truncation(why);
  });
  out.from_c.set_rule([why](SimplexKey) -> SimplexRef {
    throw insufficient_truncation(why);
  });
  return out;
}

MarkedSSet MarkedSSet::of(SSetPtr base, const std::vector<std::string>& edges) {
  MarkedSSet m;
  m.base = std::move(base);
  std::set<SimplexKey> seen;
  for (const auto& e : edges) {
    auto k = m.base->find(1, e);
    if (!k)
      throw bad_marking("marked edge '" + e + "' is not a nondegenerate 1-simplex of '" +
                        m.base->label() + "'");
    if (seen.insert(*k).second) m.marked.push_back(*k);
  }
  return m;
}

MarkedSSet MarkedSSet::sharp(SSetPtr base) {
  MarkedSSet m;
  m.base = std::move(base);
  for (int i = 0; i < m.base->count(1); ++i) m.marked.push_back({1, i});
  return m;
}

LocalizationResult simplicial_localization(const MarkedSSet& m, int level) {
  if (m.base->count(0) != 1)
    throw malformed_input("localization needs a reduced base; '" +
                          m.base->label() + "' is not reduced");
  LocalizationResult out;
  out.marked = m.marked;
  if (m.marked.empty()) {
    out.k = m.base;
    out.include = SSetMap::identity(m.base);
    out.wedge_circles = pt();
    out.from_wedge = SSetMap::constant(out.wedge_circles, m.base);
    return out;
  }

  std::vector<SSetPtr> loops, circles;
  for (size_t i = 0; i < m.marked.size(); ++i) {
    loops.push_back(s1());
    circles.push_back(s1_localized());
  }
  SSetPtr wa = wedge(loops);
  SSetPtr wb = wedge(circles);

  SSetMap glue("glue", wa, wb);
  glue.set_image(wa->key_of(0, "*"), SimplexRef::of(wb->key_of(0, "*")));
  SSetMap attach("attach", wa, m.base);
  attach.set_image(wa->key_of(0, "*"), SimplexRef::of({0, 0}));
  for (size_t i = 0; i < m.marked.size(); ++i) {
    SimplexKey e = wa->key_of(1, std::to_string(i) + ".sigma");
    glue.set_image(e, SimplexRef::of(wb->key_of(1, std::to_string(i) + ".u")));
    attach.set_image(e, SimplexRef::of(m.marked[i]));
  }

  PushoutResult po = pushout(glue, attach, level,
                             "K(" + m.base->label() + ")");
  out.k = po.p;
  out.include = std::move(po.from_c);
  out.from_wedge = std::move(po.from_b);
  out.wedge_circles = wb;
  out.circle_copies = circles;
  out.provenance = std::move(po.provenance);
  return out;
}

SSetMap localized_map(const SSetMap& f, const LocalizationResult& ks,
                      const LocalizationResult& kt, int level) {
  // positions of target edges in kt's marking
  std::map<SimplexKey, size_t> tpos;
  for (size_t j = 0; j < kt.marked.size(); ++j) tpos[kt.marked[j]] = j;

  SSetPtr src = ks.k;
  SSetMap out("K(" + f.label() + ")", src, kt.k);
  // capture by value for the rule
  auto ksv = ks;
  auto ktv = kt;
  auto fv = f;
  out.set_rule([ksv, ktv, fv, tpos](SimplexKey key) -> SimplexRef {
    const auto& prov = ksv.provenance;
    if (key.dim >= static_cast<int>(prov.size()) ||
        key.idx >= static_cast<int>(prov[static_cast<size_t>(key.dim)].size()))
      throw insufficient_truncation("localized map queried beyond its level");
    const auto& [side, ref] = prov[static_cast<size_t>(key.dim)]
                                  [static_cast<size_t>(key.idx)];
    if (side == 1) return ktv.include.apply(fv.apply(ref));
    // a cell of the glued wedge: find its circle copy
    if (ref.base.dim == 0)
      return ktv.include.apply(SimplexRef::of({0, 0}));
    auto [copy, local] =
        wedge_locate(*ksv.wedge_circles, ksv.circle_copies, ref.base);
    SimplexRef edge_img = fv.apply(SimplexRef::of(ksv.marked[static_cast<size_t>(copy)]));
    if (edge_img.nondegenerate()) {
      auto it = tpos.find(edge_img.base);
      if (it == tpos.end())
        throw bad_marking("image edge is not marked in the target localization");
      SimplexRef emb = wedge_embed(*ktv.wedge_circles, ktv.circle_copies,
                                   static_cast<int>(it->second),
                                   SimplexRef{ref.degs, local});
      return ktv.from_wedge.apply(emb);
    }
    // collapsed circle: everything lands on the basepoint
    SimplexRef v = ktv.include.apply(SimplexRef::of({0, 0}));
    for (int i = 0; i < key.dim; ++i) v = degenerate(v, i);
    return v;
  });
  (void)level;
  return out;
}

}  // namespace ck
