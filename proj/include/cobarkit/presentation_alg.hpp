#pragma once

// Presentations of augmented algebras by noncommutative generators and
// relations, with bounded exact certificates on the quotient algebra.
//
// Three kinds of answers are produced, never a numeric heuristic:
//   verified     -- an explicit witness was found (a span certificate or an
//                   inverse polynomial), checked exactly;
//   refuted      -- an abelianized oracle evaluation separates the claim,
//                   sound because the oracle is only consulted after every
//                   relation is confirmed to die under it;
//   inconclusive -- the budget was exhausted with neither.
//
// Enlarging the budget can only move answers from inconclusive to one of the
// other two; verified and refuted are final.

#include <optional>
#include <string>
#include <vector>

#include "cobarkit/field.hpp"
#include "cobarkit/nc_poly.hpp"
#include "cobarkit/oracle.hpp"
#include "cobarkit/presentation.hpp"

namespace ck {

// An augmented algebra F<gen_names> / (relations).  `cop` and
// `counit_on_generators`, when nonempty, record a comultiplication and
// counit on generators (extended as algebra maps); `oracle` names a
// commutative group algebra used to refute membership and invertibility.
struct AlgebraPresentation {
  Field field = Field::q();
  std::string label;
  std::vector<std::string> gen_names;
  std::vector<NcPolynomial> relations;
  std::vector<TensorPoly> cop;               // per generator; empty = no data
  std::vector<Scalar> counit_on_generators;  // empty = all zero
  std::optional<OracleSpec> oracle;

  int gen_count() const { return static_cast<int>(gen_names.size()); }
  int gen_index(const std::string& name) const;  // throws malformed_input
  bool has_cop() const { return !cop.empty(); }
  Scalar counit_of(int g) const;
  std::string poly_str(const NcPolynomial& p) const { return nc_poly_str(p, gen_names); }
  std::string str() const;
  // shape invariants: parallel sizes, generator indices in range, and the
  // counit (when present) killing every relation; empty = pass
  std::vector<std::string> check() const;
};

// the monoid (or group) algebra of a simplicially presented homotopy monoid:
// one grouplike generator per presentation generator -- group presentations
// additionally get a '^-1' generator and two-sided unit relations -- and one
// relation lhs - rhs per presentation relation; the presentation's oracle is
// carried over with negated labels on the inverse generators
AlgebraPresentation monoid_algebra_presentation(const Presentation& p, const Field& f,
                                                const std::string& label = "monoid-algebra");

// Laurent polynomials F[t, t^-1]: grouplike generators 't' and 't^-1' with
// the two unit relations and an exact integer-exponent oracle
AlgebraPresentation laurent_algebra(const Field& f);

// An element of the commutative group algebra an oracle describes, as
// exponent vector -> coefficient.  free_model uses one axis per generator;
// integers and cyclic use a single axis, reduced mod n for cyclic.
using AbelianElem = std::map<std::vector<long long>, Scalar>;

std::string abelian_str(const AbelianElem& e);

// evaluate by sending generator g to x^{label(g)} + (counit(g) - 1) * 1, so
// grouplike generators land on group elements and augmentation-less ones on
// group elements minus one; unlabeled generators read as label zero
AbelianElem oracle_eval(const AlgebraPresentation& p, const NcPolynomial& q);

// true when every relation evaluates to zero, the precondition for using
// the oracle to refute anything about the quotient
bool oracle_respects_relations(const AlgebraPresentation& p);

enum class CertStatus { verified, refuted, inconclusive };
std::string cert_status_str(CertStatus s);

struct Certificate {
  CertStatus status = CertStatus::inconclusive;
  std::string method;  // "span", "inverse", "oracle", "none"
  std::string detail;
};

// Is q in the two-sided ideal generated by the relations?  Refuted when the
// oracle respects the relations but sends q to nonzero; verified by an exact
// span certificate over the products w * r * w' whose expanded words stay
// within max(budget, longest word of q) letters; inconclusive otherwise.
Certificate ideal_membership(const AlgebraPresentation& p, const NcPolynomial& q, int budget);

// Does q represent a two-sided unit of the quotient?  Refuted when the
// oracle respects the relations but q evaluates to a non-unit of the group
// algebra; verified by exhibiting one polynomial r supported on words of at
// most `budget` letters with q*r - 1 and r*q - 1 both in the ideal span.
Certificate invertible_in_quotient(const AlgebraPresentation& p, const NcPolynomial& q, int budget);

// the witness behind a verified invertibility certificate: one polynomial r
// supported on words of at most `budget` letters with q*r - 1 and r*q - 1
// both in the ideal span, found by iterative deepening; nullopt when none
// exists within the budget
std::optional<NcPolynomial> find_inverse(const AlgebraPresentation& p, const NcPolynomial& q,
                                         int budget);

// a map of presented algebras, one image polynomial (in target generators)
// per source generator
struct PresentationMap {
  std::string label;
  std::vector<NcPolynomial> images;
};

// multiplicative substitution of generator images
NcPolynomial apply_presentation_map(const PresentationMap& m, const Field& f,
                                    const NcPolynomial& q);

// comultiplication and counit of an arbitrary polynomial, extended from the
// generator tables as algebra maps (degree-zero convention: no signs);
// cop_of throws malformed_input when the presentation carries no cop data
TensorPoly cop_of(const AlgebraPresentation& p, const NcPolynomial& q);
Scalar counit_poly(const AlgebraPresentation& p, const NcPolynomial& q);

struct MapCheck {
  CertStatus status = CertStatus::inconclusive;
  std::vector<std::string> violations;  // exact witnesses of failure, if any
  std::string detail;
};

// Do the generator images define a map of quotients respecting the counit
// and, when both sides carry one, the comultiplication?  Relations must land
// in the target ideal (per-relation certificates); counits must agree
// exactly; cop compatibility is checked exactly first and then modulo
// ideal (x) 1 + 1 (x) ideal within the budget.  Counit or cop failures
// refute; an exhausted budget leaves the verdict inconclusive.
MapCheck presentation_map_check(const AlgebraPresentation& src,
                                const AlgebraPresentation& tgt,
                                const PresentationMap& m, int budget);

// search the source words of at most `budget` letters for a combination
// whose image equals `target` modulo the target ideal
std::optional<NcPolynomial> find_preimage(const AlgebraPresentation& src,
                                          const AlgebraPresentation& tgt,
                                          const PresentationMap& m,
                                          const NcPolynomial& target, int budget);

struct IsoCheck {
  CertStatus status = CertStatus::inconclusive;
  std::string detail;
  std::optional<PresentationMap> inverse;  // filled when verified
};

// certify that m induces an isomorphism of quotients: m passes
// presentation_map_check, every target generator acquires a preimage, the
// assembled inverse passes its own map check, and both composites agree
// with the identity modulo the respective ideals
IsoCheck presentation_iso_check(const AlgebraPresentation& src,
                                const AlgebraPresentation& tgt,
                                const PresentationMap& m, int budget);

}  // namespace ck
