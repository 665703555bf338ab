#pragma once

// Monoid / group presentations extracted from a reduced simplicial set.
//
// The path monoid has one generator per nondegenerate 1-simplex and, for each
// nondegenerate 2-simplex a, the relation [d2 a]*[d0 a] = [d1 a], where a
// degenerate edge contributes the empty word (the unit).  Multiplication is
// written left to right.  The group version adjoins formal inverses.

#include <optional>
#include <string>
#include <vector>

#include "cobarkit/oracle.hpp"
#include "cobarkit/sset.hpp"

namespace ck {

struct malformed_word : malformed_input {
  using malformed_input::malformed_input;
};

// Letters are generator indices; in group words, -(i+1) is the inverse of i.
struct Word {
  std::vector<int> letters;
  auto operator<=>(const Word&) const = default;
};

struct Presentation {
  bool group = false;
  std::vector<std::string> gens;
  std::vector<std::pair<Word, Word>> relations;
  std::optional<OracleSpec> oracle;

  int gen_index(const std::string& name) const;
  // "a.b.a^-1" or "1" (unit); inverses need `group`
  Word parse_word(const std::string& text) const;
  std::string word_str(const Word& w) const;
  std::string str() const;
};

Presentation homotopy_monoid(const SSet& x);
Presentation pi1_presentation(const SSet& x);

enum class WordStatus { verified, refuted, inconclusive };

struct WordResult {
  WordStatus status = WordStatus::inconclusive;
  std::string method;  // "search" | "oracle" | ""
  std::string detail;
};

// Bounded bidirectional rewriting; refutation only through the oracle.
WordResult solve_word(const Presentation& p, const Word& lhs, const Word& rhs,
                      int budget);

std::string word_status_str(WordStatus s);

}  // namespace ck
