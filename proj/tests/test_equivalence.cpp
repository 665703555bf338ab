#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cobarkit/builtins.hpp"
#include "cobarkit/equivalence.hpp"
#include "cobarkit/sset_map.hpp"

using namespace ck;

namespace {

bool mentions(const Verdict& v, const std::string& needle) {
  return v.evidence.find(needle) != std::string::npos;
}

// the fold of a wedge of two circles onto one circle: both loops land on
// the same loop, so homology rank drops in degree one
SSetMap fold_map() {
  SSetPtr w = wedge({s1(), s1()});
  SSetPtr c = s1();
  SSetMap m("fold", w, c);
  m.set_image(w->key_of(0, "*"), SimplexRef::of(c->key_of(0, "*")));
  m.set_image(w->key_of(1, "0.sigma"), SimplexRef::of(c->key_of(1, "sigma")));
  m.set_image(w->key_of(1, "1.sigma"), SimplexRef::of(c->key_of(1, "sigma")));
  return m;
}

}  // namespace

TEST_CASE("merging independent routes keeps definite answers and flags contradictions") {
  Verdict ver{CertStatus::verified, "route one closed", 2};
  Verdict ref{CertStatus::refuted, "route two found a witness", 3};
  Verdict open{CertStatus::inconclusive, "route three ran out", 5};

  Verdict a = merge_route_verdicts(ver, open);
  CHECK(a.status == CertStatus::verified);
  CHECK(a.budget == 5);
  CHECK(a.evidence == "route one closed | route three ran out");

  Verdict b = merge_route_verdicts(open, ref);
  CHECK(b.status == CertStatus::refuted);

  Verdict c = merge_route_verdicts(open, open);
  CHECK(c.status == CertStatus::inconclusive);
  CHECK(c.budget == 5);

  CHECK_THROWS_AS(merge_route_verdicts(ver, ref), consistency_alarm);
  CHECK_THROWS_AS(merge_route_verdicts(ref, ver), consistency_alarm);
  CHECK(ver.str().find("verified") == 0);
  CHECK(open.str().find("budget 5") != std::string::npos);
}

TEST_CASE("identity maps verify under every notion") {
  SSetMap id_s1 = builtin_map("id:s1");
  for (Field f : {Field::q(), Field::fp(2)}) {
    Verdict r = check_r_equivalence(id_s1, f, 2);
    CHECK(r.status == CertStatus::verified);
    CHECK(mentions(r, "degrees 0..2"));

    Verdict o = check_omega_qi(id_s1, f, TruncationSpec::degrees(3), 4);
    CHECK(o.status == CertStatus::verified);
    CHECK(mentions(o, "degree zero"));

    Verdict oh = check_omegahat_qi(id_s1, f, TruncationSpec::degrees(2), 6);
    CHECK(oh.status == CertStatus::verified);
    CHECK(mentions(oh, "after localization"));
  }

  // no 1-simplices anywhere: the cobar comparison runs on complete windows
  SSetMap id_s2 = builtin_map("id:sphere2_min");
  Verdict o2 = check_omega_qi(id_s2, Field::q(), TruncationSpec::degrees(4), 2);
  CHECK(o2.status == CertStatus::verified);
  CHECK(mentions(o2, "complete windows"));
  CHECK(mentions(o2, "degrees 0..4"));
}

TEST_CASE("projective-plane identity passes the group route with cover evidence") {
  SSetMap id_rp2 = builtin_map("id:rp2_presentation");
  Verdict v = check_pi1_r_equivalence(id_rp2, Field::fp(3), 2, 4);
  CHECK(v.status == CertStatus::verified);
  CHECK(mentions(v, "universal covers have identical homology"));
  CHECK(mentions(v, "group route"));
}

TEST_CASE("collapsing the minimal 2-sphere is refuted under every notion") {
  SSetMap f = builtin_map("collapse:sphere2_min");
  Field q = Field::q();

  Verdict r = check_r_equivalence(f, q, 2);
  CHECK(r.status == CertStatus::refuted);
  CHECK(mentions(r, "degree 2"));
  CHECK(mentions(r, "1 vs 0"));

  Verdict o = check_omega_qi(f, q, TruncationSpec::degrees(2), 2);
  CHECK(o.status == CertStatus::refuted);
  CHECK(mentions(o, "cobar homology ranks differ in degree 1"));

  Verdict oh = check_omegahat_qi(f, q, TruncationSpec::degrees(2), 2);
  CHECK(oh.status == CertStatus::refuted);
  CHECK(mentions(oh, "after localization"));

  Verdict p = check_pi1_r_equivalence(f, Field::fp(2), 2, 2);
  CHECK(p.status == CertStatus::refuted);
  CHECK(mentions(p, "universal covers differ"));
}

TEST_CASE("the loop inclusion into the localized circle separates the notions") {
  SSetMap iota = builtin_map("iota_s1");
  for (Field f : {Field::q(), Field::fp(2)}) {
    Verdict r = check_r_equivalence(iota, f, 2);
    CHECK(r.status == CertStatus::verified);

    Verdict o = check_omega_qi(iota, f, TruncationSpec::degrees(2), 4);
    CHECK(o.status == CertStatus::refuted);
    CHECK(mentions(o, "unit transport"));

    Verdict oh = check_omegahat_qi(iota, f, TruncationSpec::degrees(2), 6);
    CHECK(oh.status == CertStatus::verified);
    CHECK(mentions(oh, "degree-zero homology presentations are isomorphic"));

    Verdict p = check_pi1_r_equivalence(iota, f, 2, 6);
    CHECK(p.status == CertStatus::verified);
    CHECK(mentions(p, "localized-cobar route"));
  }
}

TEST_CASE("projective-plane collapse: homology equivalence without a pi1 one") {
  SSetMap f = builtin_map("collapse:rp2_presentation");

  // over the rationals the collapse is invisible to homology ...
  Verdict r_q = check_r_equivalence(f, Field::q(), 2);
  CHECK(r_q.status == CertStatus::verified);

  // ... but not over F_2 ...
  Verdict r_2 = check_r_equivalence(f, Field::fp(2), 2);
  CHECK(r_2.status == CertStatus::refuted);
  CHECK(mentions(r_2, "degree 1"));

  // ... and the group route refutes it over every field
  for (Field f2 : {Field::q(), Field::fp(2)}) {
    Verdict p = check_pi1_r_equivalence(f, f2, 2, 3);
    CHECK(p.status == CertStatus::refuted);
    CHECK(mentions(p, "kernel witness"));
  }
}

TEST_CASE("folding a wedge of circles: rank witness and honest inconclusives") {
  SSetMap f = fold_map();
  Verdict r = check_r_equivalence(f, Field::q(), 2);
  CHECK(r.status == CertStatus::refuted);
  CHECK(mentions(r, "degree 1"));
  CHECK(mentions(r, "2 vs 1"));

  // the degree-zero algebras (free on two letters vs free on one) are not
  // isomorphic, but no bounded certificate can refute it without an oracle
  // separating the folded generators; the checker must stay inconclusive
  Verdict o = check_omega_qi(f, Field::q(), TruncationSpec::degrees(2), 2);
  CHECK(o.status == CertStatus::inconclusive);

  // the group route separates the two loops through free normal forms
  Verdict p = check_pi1_r_equivalence(f, Field::q(), 1, 2);
  CHECK(p.status == CertStatus::refuted);
  CHECK(mentions(p, "distinct classes"));
}

TEST_CASE("localized cobar comparison straight from coalgebra data") {
  SSetPtr x = s1();
  Field f = Field::q();
  SimplicialCoalgebra c = chains_coalgebra(x, f, 2);
  DgCoalgebra n = normalized_chains(c, 2);
  CoalgebraMap cm = chains_map(SSetMap::identity(x), c, c);
  DgCoalgebraMap nm = normalized_map(cm, n, n);
  FreeDgAlgebra omega = cobar(n);
  std::vector<NcPolynomial> reps = monoidlike_reps(c, n, omega);
  OracleSpec loc = OracleSpec::integers({{"sigma", 1}, {"0.v", -1}});

  Verdict v = check_omegahat_qi(nm, n, reps, n, reps, 6, loc, loc);
  CHECK(v.status == CertStatus::verified);
  CHECK(mentions(v, "localized:"));

  // inverting the loop on one side only: the unit sigma + 1 transports to a
  // provable non-unit of the free algebra read backwards, so the induced
  // degree-zero map cannot be an isomorphism
  Verdict w =
      check_omegahat_qi(nm, n, {}, n, reps, 4, OracleSpec::free_model(), loc);
  CHECK(w.status == CertStatus::refuted);
  CHECK(mentions(w, "unit transport"));
}

TEST_CASE("grouplike comparison of the fundamental bialgebra") {
  for (Field f : {Field::q(), Field::fp(2)}) {
    Verdict a = verify_phi_psi(s1(), f, 4);
    CHECK(a.status == CertStatus::verified);
    CHECK(mentions(a, "mutually inverse"));

    Verdict b = verify_phi_psi(s1_localized(), f, 4);
    CHECK(b.status == CertStatus::verified);
  }
  Verdict c = verify_phi_psi(rp2_presentation(), Field::fp(3), 4);
  CHECK(c.status == CertStatus::verified);

  Verdict d = verify_phi_psi(wedge({s1(), s1()}), Field::q(), 4);
  CHECK(d.status == CertStatus::verified);
}

TEST_CASE("budgets only ever sharpen verdicts") {
  SSetMap iota = builtin_map("iota_s1");
  Field q = Field::q();

  // refutations are final: the same witness appears under any budget
  Verdict o1 = check_omega_qi(iota, q, TruncationSpec::degrees(2), 1);
  Verdict o6 = check_omega_qi(iota, q, TruncationSpec::degrees(2), 6);
  CHECK(o1.status == CertStatus::refuted);
  CHECK(o6.status == CertStatus::refuted);

  // a starved budget may only fall back to inconclusive, never flip
  Verdict h0 = check_omegahat_qi(iota, q, TruncationSpec::degrees(2), 0);
  Verdict h6 = check_omegahat_qi(iota, q, TruncationSpec::degrees(2), 6);
  CHECK(h0.status == CertStatus::inconclusive);
  CHECK(h6.status == CertStatus::verified);
}

TEST_CASE("no contradictions across the hierarchy of notions") {
  struct Row {
    std::string name;
    SSetMap map;
  };
  std::vector<Row> rows;
  rows.push_back({"id:s1", builtin_map("id:s1")});
  rows.push_back({"id:rp2", builtin_map("id:rp2_presentation")});
  rows.push_back({"iota", builtin_map("iota_s1")});
  rows.push_back({"collapse:sphere2", builtin_map("collapse:sphere2_min")});
  rows.push_back({"collapse:rp2", builtin_map("collapse:rp2_presentation")});
  rows.push_back({"fold", fold_map()});

  for (const Row& row : rows)
    for (Field f : {Field::q(), Field::fp(2)}) {
      INFO(row.name, " over ", f.name());
      Verdict r = check_r_equivalence(row.map, f, 2);
      Verdict o = check_omega_qi(row.map, f, TruncationSpec::degrees(2), 3);
      Verdict oh = check_omegahat_qi(row.map, f, TruncationSpec::degrees(2), 3);
      // merge_route_verdicts throws on a verified/refuted clash inside
      Verdict p = check_pi1_r_equivalence(row.map, f, 2, 3);

      // a cobar quasi-isomorphism localizes, and a localized one is a
      // homology equivalence: a finer verified with a coarser refuted is a
      // library bug
      CHECK_FALSE((o.status == CertStatus::verified && oh.status == CertStatus::refuted));
      CHECK_FALSE((o.status == CertStatus::verified && r.status == CertStatus::refuted));
      CHECK_FALSE((oh.status == CertStatus::verified && r.status == CertStatus::refuted));
      CHECK_FALSE((p.status == CertStatus::verified && r.status == CertStatus::refuted));
      // the group route and the localized-cobar route decide one notion
      CHECK_FALSE((p.status == CertStatus::verified && oh.status == CertStatus::refuted));
      CHECK_FALSE((p.status == CertStatus::refuted && oh.status == CertStatus::verified));
    }
}
