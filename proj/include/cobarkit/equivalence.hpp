#pragma once

// Three-valued checkers for the three notions of weak equivalence carried by
// a map of reduced simplicial sets, decided through its chains:
//
//   R-equivalence        the induced map on chain homology is an isomorphism;
//   Omega-q.i.           the induced map of cobar constructions is a
//                        quasi-isomorphism;
//   pi1-R-equivalence    isomorphism on fundamental groups together with an
//                        R-homology equivalence of universal covers;
//                        equivalently, the chains map becomes an
//                        Omega-quasi-isomorphism after localization.
//
// Every verdict is verified / refuted / inconclusive with reproducible
// evidence.  Refutations rest on exact certificates only: differing Betti
// numbers in a degree whose window is complete, a homology class outside the
// image of the induced map, a unit transported to a non-unit (or conversely)
// between degree-zero homology presentations, or an oracle-backed word
// separation in a fundamental group.  Verifications rest on complete-window
// homology isomorphisms, presentation isomorphisms with explicit two-sided
// inverses, and certified mutual generator images.  Budgets only ever move
// inconclusive to a definite answer, never flip an answer.

#include <optional>
#include <string>
#include <vector>

#include "cobarkit/cobar.hpp"
#include "cobarkit/pushout.hpp"
#include "cobarkit/sset_map.hpp"

namespace ck {

// raised when two independent decision routes produce contradictory
// definite verdicts for the same map: the library itself is then broken
struct consistency_alarm : std::logic_error {
  using std::logic_error::logic_error;
};

struct Verdict {
  CertStatus status = CertStatus::inconclusive;
  std::string evidence;  // reproducible report; inconclusive carries budgets
  int budget = 0;

  std::string str() const;
};

// merge two independent routes deciding the same question: a definite answer
// beats inconclusive, agreement keeps the joint evidence, and a
// verified/refuted clash throws consistency_alarm
Verdict merge_route_verdicts(const Verdict& a, const Verdict& b);

// Induced isomorphism on chain homology through `level` (both sides are
// built to level+1 so every compared degree has a complete window).
Verdict check_r_equivalence(const SSetMap& f, const Field& field, int level);

// Quasi-isomorphism of the induced map on cobar constructions.  When both
// cobar algebras are generated in positive degrees the homology windows are
// complete and the induced map is compared degree by degree through
// t.max_degree; when degree-zero generators exist, the degree-zero homology
// presentations are compared instead (unit transport refutes; an explicit
// presentation isomorphism verifies).
Verdict check_omega_qi(const SSetMap& f, const Field& field,
                       const TruncationSpec& t, int budget);
Verdict check_omega_qi(const DgCoalgebraMap& nf, const DgCoalgebra& src,
                       const DgCoalgebra& tgt, const TruncationSpec& t,
                       int budget,
                       const std::optional<OracleSpec>& src_oracle = std::nullopt,
                       const std::optional<OracleSpec>& tgt_oracle = std::nullopt);

// Quasi-isomorphism after localization.  For a map of simplicial sets this
// localizes both sides at every edge (the sharp marking) and runs
// check_omega_qi on the induced map of localized objects.  The coalgebra
// overload localizes both cobar constructions at the given monoid-like
// representatives and compares the degree-zero homology presentations, with
// the inverses of the transported representatives found within the budget.
Verdict check_omegahat_qi(const SSetMap& f, const Field& field,
                          const TruncationSpec& t, int budget);
Verdict check_omegahat_qi(const DgCoalgebraMap& nf, const DgCoalgebra& src,
                          const std::vector<NcPolynomial>& src_reps,
                          const DgCoalgebra& tgt,
                          const std::vector<NcPolynomial>& tgt_reps,
                          int budget,
                          const std::optional<OracleSpec>& src_oracle = std::nullopt,
                          const std::optional<OracleSpec>& tgt_oracle = std::nullopt);

// Two independent routes, merged:
//  (a) fundamental-group presentations with solve_word-certified mutual
//      generator images, plus universal-cover homology comparison through
//      `level` when both groups are certified finite;
//  (b) check_omegahat_qi on the chains.
// Contradictory routes throw consistency_alarm.
Verdict check_pi1_r_equivalence(const SSetMap& f, const Field& field,
                                int level, int budget);

// Executable comparison of the fundamental bialgebra pi(F[S]) with the monoid
// algebra F[tau(S)]: phi sends a degree-zero cobar generator to the
// corresponding monoid generator minus one, psi sends a monoid generator to
// the cobar generator plus one.  Verifies both are bialgebra presentation
// maps and that both composites are the identity on generators, within the
// budget.  Needs a normal-form oracle on tau(S) to be conclusive.
Verdict verify_phi_psi(const SSetPtr& x, const Field& field, int budget);

}  // namespace ck
