#include "cobarkit/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ck {

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == name) return static_cast<int>(i);
  throw malformed_word("unknown generator '" + name + "'");
}

Word Presentation::parse_word(const std::string& text) const {
  Word w;
  if (text == "1" || text.empty()) return w;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, '.')) {
    bool inverse = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inverse = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (inverse && !group)
      throw malformed_word("inverse letter '" + tok + "^-1' in a monoid word");
    int idx = gen_index(tok);
    w.letters.push_back(inverse ? -(idx + 1) : idx);
  }
  return w;
}

std::string Presentation::word_str(const Word& w) const {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << '.';
    int l = w.letters[i];
    if (l >= 0)
      os << gens[l];
    else
      os << gens[-l - 1] << "^-1";
  }
  return os.str();
}

std::string Presentation::str() const {
  std::ostringstream os;
  os << (group ? "group" : "monoid") << " <";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ", ";
    os << gens[i];
  }
  os << " | ";
  for (size_t i = 0; i < relations.size(); ++i) {
    if (i) os << ", ";
    os << word_str(relations[i].first) << " = " << word_str(relations[i].second);
  }
  os << '>';
  if (oracle) os << " oracle: " << oracle->str();
  return os.str();
}

namespace {

// letters of an edge ref: empty for a degenerate edge
Word edge_word(const SimplexRef& e) {
  Word w;
  if (e.nondegenerate()) w.letters.push_back(e.base.idx);
  return w;
}

Word concat(Word a, const Word& b) {
  a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
  return a;
}

Presentation presentation_of(const SSet& x, bool group) {
  if (x.count(0) != 1)
    throw malformed_input("path monoid needs a reduced simplicial set; '" +
                          x.label() + "' has " + std::to_string(x.count(0)) +
                          " vertices");
  Presentation p;
  p.group = group;
  for (int i = 0; i < x.count(1); ++i) p.gens.push_back(x.name({1, i}));
  for (int a = 0; a < x.count(2); ++a) {
    SimplexRef r = SimplexRef::of({2, a});
    Word lhs = concat(edge_word(face(x, r, 2)), edge_word(face(x, r, 0)));
    Word rhs = edge_word(face(x, r, 1));
    if (lhs != rhs) p.relations.emplace_back(lhs, rhs);
  }
  const auto& hint = x.tau_oracle;
  if (hint) {
    // only attach when every generator has a label (free model needs none)
    bool usable = hint->kind == OracleKind::free_model ||
                  std::all_of(p.gens.begin(), p.gens.end(), [&](const auto& g) {
                    return hint->labels.count(g) > 0;
                  });
    if (usable) p.oracle = *hint;
  }
  if (!p.oracle && p.relations.empty()) p.oracle = OracleSpec::free_model();
  return p;
}

Word reduce(const Presentation& p, Word w) {
  if (!p.group) return w;
  std::vector<int> out;
  for (int l : w.letters) {
    if (!out.empty() && ((l >= 0 && out.back() == -(l + 1)) ||
                         (l < 0 && out.back() == -l - 1)))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word{out};
}

long long oracle_value(const OracleSpec& o, const Presentation& p, const Word& w) {
  long long v = 0;
  for (int l : w.letters) {
    int idx = l >= 0 ? l : -l - 1;
    long long lab = o.labels.at(p.gens[idx]);
    v += l >= 0 ? lab : -lab;
  }
  if (o.kind == OracleKind::cyclic) {
    v %= o.modulus;
    if (v < 0) v += o.modulus;
  }
  return v;
}

void check_letters(const Presentation& p, const Word& w) {
  for (int l : w.letters) {
    int idx = l >= 0 ? l : -l - 1;
    if (idx < 0 || idx >= static_cast<int>(p.gens.size()))
      throw malformed_word("letter index out of range");
    if (l < 0 && !p.group) throw malformed_word("inverse letter in monoid word");
  }
}

}  // namespace

Presentation homotopy_monoid(const SSet& x) { return presentation_of(x, false); }

Presentation pi1_presentation(const SSet& x) {
  // A tau oracle transfers to the group completion for every kind we admit
  // (free -> free group, integers -> Z, cyclic -> Z/n); a dedicated pi1 hint
  // takes precedence.
  Presentation p = presentation_of(x, true);
  if (x.pi1_oracle) {
    bool usable = x.pi1_oracle->kind == OracleKind::free_model ||
                  std::all_of(p.gens.begin(), p.gens.end(), [&](const auto& g) {
                    return x.pi1_oracle->labels.count(g) > 0;
                  });
    if (usable) p.oracle = *x.pi1_oracle;
  }
  return p;
}

std::string word_status_str(WordStatus s) {
  switch (s) {
    case WordStatus::verified: return "verified";
    case WordStatus::refuted: return "refuted";
    default: return "inconclusive";
  }
}

WordResult solve_word(const Presentation& p, const Word& lhs, const Word& rhs,
                      int budget) {
  check_letters(p, lhs);
  check_letters(p, rhs);
  Word a = reduce(p, lhs), b = reduce(p, rhs);
  if (a == b) return {WordStatus::verified, "search", "identical after reduction"};

  if (p.oracle) {
    const OracleSpec& o = *p.oracle;
    if (o.kind == OracleKind::free_model) {
      // reduced words in a free model are normal forms
      return {WordStatus::refuted, "oracle", "distinct free normal forms"};
    }
    long long va = oracle_value(o, p, a), vb = oracle_value(o, p, b);
    if (va != vb)
      return {WordStatus::refuted, "oracle",
              "labels differ: " + std::to_string(va) + " vs " + std::to_string(vb)};
    return {WordStatus::verified, "oracle",
            "equal labels " + std::to_string(va) + " under " + o.str()};
  }

  // breadth-first rewriting, both relation directions, bounded by budget
  size_t max_len =
      std::max(a.letters.size(), b.letters.size()) + static_cast<size_t>(budget);
  for (const auto& [l, r] : p.relations)
    max_len = std::max(max_len, std::max(l.letters.size(), r.letters.size()) +
                                    static_cast<size_t>(budget));
  size_t max_states = 2000 * static_cast<size_t>(budget + 1);

  std::set<Word> seen{a};
  std::deque<std::pair<Word, int>> queue{{a, 0}};
  auto try_push = [&](Word w, int depth) -> bool {
    w = reduce(p, w);
    if (w == b) return true;
    if (w.letters.size() > max_len || seen.count(w)) return false;
    if (seen.size() >= max_states) return false;
    seen.insert(w);
    queue.emplace_back(std::move(w), depth);
    return false;
  };
  while (!queue.empty()) {
    auto [w, depth] = queue.front();
    queue.pop_front();
    if (depth >= budget) continue;
    for (const auto& rel : p.relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir ? rel.second : rel.first;
        const Word& to = dir ? rel.first : rel.second;
        size_t fl = from.letters.size();
        for (size_t pos = 0; pos + fl <= w.letters.size(); ++pos) {
          if (!std::equal(from.letters.begin(), from.letters.end(),
                          w.letters.begin() + static_cast<long>(pos)))
            continue;
          Word nw;
          nw.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(pos));
          nw.letters.insert(nw.letters.end(), to.letters.begin(), to.letters.end());
          nw.letters.insert(nw.letters.end(),
                            w.letters.begin() + static_cast<long>(pos + fl),
                            w.letters.end());
          if (try_push(std::move(nw), depth + 1))
            return {WordStatus::verified, "search",
                    "rewrite path of length " + std::to_string(depth + 1)};
        }
      }
    }
  }
  return {WordStatus::inconclusive, "",
          "no path within budget " + std::to_string(budget) +
              (p.relations.empty() ? "" : "; no oracle for refutation")};
}

}  // namespace ck
