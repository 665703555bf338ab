#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cobarkit/builtins.hpp"
#include "cobarkit/cobar.hpp"
#include "cobarkit/sset_map.hpp"

using namespace ck;

namespace {

NcPolynomial gp(const Field& f, std::initializer_list<int> w) {
  return NcPolynomial::mono(Scalar::of(f, 1), GenWord(w));
}

Scalar sc(const Field& f, long long v) { return Scalar::of(f, v); }

bool same_algebra(const FreeDgAlgebra& a, const FreeDgAlgebra& b) {
  return a.label == b.label && a.gen_names == b.gen_names &&
         a.gen_degrees == b.gen_degrees && a.d_gen == b.d_gen &&
         a.augmentation == b.augmentation;
}

}  // namespace

TEST_CASE("cobar of the ground field coalgebra is the ground field") {
  for (Field f : {Field::q(), Field::fp(2)}) {
    CobarOfSpace c = lambda(pt(), f, 4);
    CHECK(c.omega.gens() == 0);
    BettiTable t = cobar_homology(c.omega, TruncationSpec::degrees(4), f);
    CHECK(t == betti::table({1, 0, 0, 0, 0}, {true, true, true, true, true}));
    CHECK(c.omega.check().empty());
  }
}

TEST_CASE("cobar of the minimal 2-sphere is a tensor algebra on one degree-one generator") {
  for (Field f : {Field::q(), Field::fp(2)}) {
    CAPTURE(f.name());
    CobarOfSpace c = lambda(sphere2_min(), f, 7);
    REQUIRE(c.omega.gens() == 1);
    CHECK(c.omega.gen_names[0] == "e");
    CHECK(c.omega.gen_degrees[0] == 1);
    CHECK(c.omega.d_gen[0].is_zero());
    CHECK(c.omega.check().empty());

    // one word t^k per degree k, every window complete
    TruncationSpec t = TruncationSpec::degrees(6);
    ChainComplexSlice s = cobar_complex_slice(c.omega, t);
    for (int k = 0; k <= 6; ++k) {
      CHECK(s.basis_size[static_cast<size_t>(k)] == 1);
      CHECK(s.is_complete(k));
    }
    BettiTable b = cobar_homology(c.omega, t, f);
    CHECK(b == betti::table({1, 1, 1, 1, 1, 1, 1},
                            {true, true, true, true, true, true, true}));
  }
}

TEST_CASE("cobar of the circle: one degree-zero generator, bounded slices are honest") {
  Field f = Field::q();
  CobarOfSpace c = lambda(s1(), f, 4);
  REQUIRE(c.omega.gens() == 1);
  CHECK(c.omega.gen_names[0] == "sigma");
  CHECK(c.omega.gen_degrees[0] == 0);
  CHECK(c.omega.d_gen[0].is_zero());
  CHECK(c.gen_source[0] == std::pair<int, int>{1, 0});

  TruncationSpec t = TruncationSpec::bounded(2, 3);
  auto words = word_basis(c.omega, t, 0);
  REQUIRE(words.size() == 4);  // 1, t, t^2, t^3
  CHECK(words[0].empty());
  CHECK(words[3] == GenWord{0, 0, 0});
  CHECK_FALSE(t.complete(c.omega, 0));
  BettiTable b = cobar_homology(c.omega, t, f);
  CHECK_FALSE(b.at(0)->exact);

  // an unbounded degree-zero slice of an algebra with degree-zero
  // generators cannot be enumerated
  CHECK_THROWS_AS(word_basis(c.omega, TruncationSpec::degrees(2), 0), malformed_input);
}

TEST_CASE("cobar differential squares to zero across fixtures and fields") {
  std::vector<std::string> fixtures = {"s1", "sphere2_min", "rp2_presentation",
                                       "s1_localized", "wedge(s1,s1)"};
  for (Field f : {Field::q(), Field::fp(2), Field::fp(3)})
    for (const auto& name : fixtures) {
      CAPTURE(f.name());
      CAPTURE(name);
      CobarOfSpace c = lambda(builtin_sset(name), f, 3);
      CHECK(c.omega.check().empty());
    }
}

TEST_CASE("cobar is functorial: identities and a collapse") {
  Field f = Field::q();
  CobarOfSpace c = lambda(s1(), f, 3);

  CoalgebraMap id = chains_map(SSetMap::identity(s1()), c.chains, c.chains);
  DgCoalgebraMap nid = normalized_map(id, c.normalized, c.normalized);
  DgAlgebraMap oid = cobar_map(nid, c.normalized, c.normalized);
  REQUIRE(oid.gen_images.size() == 1);
  CHECK(oid.gen_images[0] == gp(f, {0}));
  CHECK(check_dga_map(c.omega, c.omega, oid).empty());

  CobarOfSpace p = lambda(pt(), f, 3);
  CoalgebraMap col = chains_map(SSetMap::constant(s1(), pt()), c.chains, p.chains);
  DgCoalgebraMap ncol = normalized_map(col, c.normalized, p.normalized);
  DgAlgebraMap ocol = cobar_map(ncol, c.normalized, p.normalized);
  CHECK(ocol.gen_images[0].is_zero());
  CHECK(check_dga_map(c.omega, p.omega, ocol).empty());
}

TEST_CASE("fundamental bialgebra of the circle: free on one grouplike-minus-one") {
  Field f = Field::q();
  AlgebraPresentation p = fundamental_bialgebra(chains_coalgebra(s1(), f, 2));
  CHECK(p.check().empty());
  REQUIRE(p.gen_names == std::vector<std::string>{"sigma"});
  CHECK(p.relations.empty());
  REQUIRE(p.cop.size() == 1);

  NcPolynomial t = gp(f, {0});
  NcPolynomial one = NcPolynomial::unit(f);
  TensorPoly expected = TensorPoly::of(t, t) + TensorPoly::of(t, one) + TensorPoly::of(one, t);
  CHECK(p.cop[0] == expected);
  // the generator plus one is grouplike
  CHECK(cop_of(p, t + one) == TensorPoly::of(t + one, t + one));
  CHECK(counit_poly(p, t + one) == sc(f, 1));
  REQUIRE(p.oracle.has_value());
  CHECK(p.oracle->kind == OracleKind::free_model);
}

TEST_CASE("fundamental bialgebra of the projective plane presentation") {
  for (Field f : {Field::q(), Field::fp(2)}) {
    CAPTURE(f.name());
    AlgebraPresentation p = fundamental_bialgebra(chains_coalgebra(rp2_presentation(), f, 3));
    CHECK(p.check().empty());
    REQUIRE(p.gen_names == std::vector<std::string>{"a"});
    REQUIRE(p.relations.size() == 1);
    // D of the degree-one cobar generator carried by the 2-cell
    NcPolynomial t = gp(f, {0});
    CHECK(p.relations[0] == -(t * t) - t.scaled(sc(f, 2)));
    REQUIRE(p.oracle.has_value());
    CHECK(p.oracle->kind == OracleKind::cyclic);

    // the square of the grouplike a+1 is the unit in the quotient
    NcPolynomial one = NcPolynomial::unit(f);
    NcPolynomial q = (t + one) * (t + one) - one;
    CHECK(ideal_membership(p, q, 3).status == CertStatus::verified);
    CHECK(invertible_in_quotient(p, t + one, 3).status == CertStatus::verified);
  }
}

TEST_CASE("fundamental bialgebra of the looped circle and of the point") {
  Field f = Field::q();
  AlgebraPresentation p = fundamental_bialgebra(chains_coalgebra(s1_localized(), f, 2));
  REQUIRE(p.gen_names == std::vector<std::string>{"u", "v"});
  REQUIRE(p.relations.size() == 2);
  NcPolynomial u = gp(f, {0}), v = gp(f, {1});
  std::set<std::string> rels;
  for (const auto& r : p.relations) rels.insert(p.poly_str(r));
  CHECK(rels == std::set<std::string>{p.poly_str(-(u + v + u * v)),
                                      p.poly_str(-(u + v + v * u))});
  // (u+1)(v+1) = 1 = (v+1)(u+1) in the quotient
  NcPolynomial one = NcPolynomial::unit(f);
  CHECK(ideal_membership(p, (u + one) * (v + one) - one, 4).status == CertStatus::verified);
  CHECK(ideal_membership(p, (v + one) * (u + one) - one, 4).status == CertStatus::verified);
  CHECK(invertible_in_quotient(p, u + one, 4).status == CertStatus::verified);
  REQUIRE(p.oracle.has_value());
  CHECK(p.oracle->kind == OracleKind::integers);
  CHECK(oracle_respects_relations(p));

  AlgebraPresentation unit_p = fundamental_bialgebra(chains_coalgebra(pt(), f, 2));
  CHECK(unit_p.gen_names.empty());
  CHECK(unit_p.relations.empty());
}

TEST_CASE("ideal membership certificates: verified, refuted, inconclusive") {
  Field f = Field::q();
  AlgebraPresentation free_t = fundamental_bialgebra(chains_coalgebra(s1(), f, 2));
  NcPolynomial t = gp(f, {0});

  CHECK(ideal_membership(free_t, NcPolynomial::zero(), 2).status == CertStatus::verified);
  // zero ideal, free oracle: any nonzero polynomial is refuted
  Certificate c = ideal_membership(free_t, t * t, 2);
  CHECK(c.status == CertStatus::refuted);
  CHECK(c.method == "oracle");

  // a deliberately broken oracle is ignored rather than trusted
  AlgebraPresentation rp2 = fundamental_bialgebra(chains_coalgebra(rp2_presentation(), f, 3));
  AlgebraPresentation broken = rp2;
  broken.oracle = OracleSpec::cyclic(5, {{"a", 1}});
  CHECK_FALSE(oracle_respects_relations(broken));
  CHECK(ideal_membership(broken, gp(f, {0}), 2).status == CertStatus::inconclusive);
  // with the honest oracle the same query is refuted
  CHECK(oracle_respects_relations(rp2));
  CHECK(ideal_membership(rp2, gp(f, {0}), 2).status == CertStatus::refuted);
}

TEST_CASE("invertibility certificates and budget monotonicity") {
  Field f = Field::q();
  AlgebraPresentation free_t = fundamental_bialgebra(chains_coalgebra(s1(), f, 2));
  NcPolynomial t = gp(f, {0});
  NcPolynomial one = NcPolynomial::unit(f);

  // 1 + t is not invertible in a free algebra; the polynomial oracle sees it
  Certificate c = invertible_in_quotient(free_t, t + one, 3);
  CHECK(c.status == CertStatus::refuted);
  CHECK(c.method == "oracle");
  CHECK(invertible_in_quotient(free_t, one.scaled(sc(f, 7)), 2).status ==
        CertStatus::verified);

  // in pi(rp2) the certificate appears once the budget admits the inverse
  AlgebraPresentation rp2 = fundamental_bialgebra(chains_coalgebra(rp2_presentation(), f, 3));
  Certificate small = invertible_in_quotient(rp2, t + one, 0);
  Certificate big = invertible_in_quotient(rp2, t + one, 1);
  CHECK(small.status == CertStatus::inconclusive);
  CHECK(big.status == CertStatus::verified);
  // growing the budget never downgrades an answer
  CHECK(invertible_in_quotient(rp2, t + one, 4).status == CertStatus::verified);
}

TEST_CASE("presentation maps: identity verified, counit violations refuted") {
  Field f = Field::q();
  AlgebraPresentation pi = fundamental_bialgebra(chains_coalgebra(s1(), f, 2));
  NcPolynomial t = gp(f, {0});
  NcPolynomial one = NcPolynomial::unit(f);

  PresentationMap id{"id", {t}};
  CHECK(presentation_map_check(pi, pi, id, 3).status == CertStatus::verified);

  // t -> 0 is the counit: a perfectly good bialgebra map
  PresentationMap counit_map{"counit", {NcPolynomial::zero()}};
  CHECK(presentation_map_check(pi, pi, counit_map, 3).status == CertStatus::verified);

  // t -> 1 violates the counit (and over Q the comultiplication too)
  PresentationMap bad{"shift", {one}};
  MapCheck mc = presentation_map_check(pi, pi, bad, 3);
  CHECK(mc.status == CertStatus::refuted);
  CHECK_FALSE(mc.violations.empty());
}

TEST_CASE("monoid algebra of the homotopy monoid matches the fundamental bialgebra") {
  Field f = Field::q();

  // the circle: free on one grouplike
  AlgebraPresentation m = monoid_algebra_presentation(homotopy_monoid(*s1()), f, "F[tau(s1)]");
  CHECK(m.gen_names == std::vector<std::string>{"sigma"});
  CHECK(m.relations.empty());
  CHECK(m.counit_of(0) == sc(f, 1));
  CHECK(cop_of(m, gp(f, {0})) == TensorPoly::of(gp(f, {0}), gp(f, {0})));

  // the projective plane: one grouplike with square one
  AlgebraPresentation mr =
      monoid_algebra_presentation(homotopy_monoid(*rp2_presentation()), f, "F[tau(rp2)]");
  REQUIRE(mr.gen_names == std::vector<std::string>{"a"});
  REQUIRE(mr.relations.size() == 1);
  CHECK(mr.relations[0] == gp(f, {0, 0}) - NcPolynomial::unit(f));
  CHECK(oracle_respects_relations(mr));

  // grouplike-to-grouplike translation both ways
  AlgebraPresentation pi = fundamental_bialgebra(chains_coalgebra(rp2_presentation(), f, 3));
  NcPolynomial t = gp(f, {0});
  NcPolynomial one = NcPolynomial::unit(f);
  PresentationMap phi{"phi", {gp(f, {0}) - one}};   // grouplike minus one
  PresentationMap psi{"psi", {t + one}};            // plus one the other way
  CHECK(presentation_map_check(pi, mr, phi, 4).status == CertStatus::verified);
  CHECK(presentation_map_check(mr, pi, psi, 4).status == CertStatus::verified);
}

TEST_CASE("monoid-like representatives") {
  Field f = Field::q();
  CobarOfSpace c = lambda(s1(), f, 3);
  auto reps = monoidlike_reps(c.chains, c.normalized, c.omega);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == gp(f, {0}) + NcPolynomial::unit(f));

  CobarOfSpace s2 = lambda(sphere2_min(), f, 3);
  CHECK(monoidlike_reps(s2.chains, s2.normalized, s2.omega).empty());

  // a non-set-like coalgebra has no canonical representatives
  SimplicialCoalgebra scrambled = c.chains;
  scrambled.set_like = false;
  CHECK_THROWS_AS(monoidlike_reps(scrambled, c.normalized, c.omega), malformed_input);
}

TEST_CASE("localized cobar with no representatives is the plain cobar") {
  Field f = Field::q();
  for (const char* name : {"pt", "sphere2_min"}) {
    CAPTURE(name);
    CobarOfSpace c = lambda(builtin_sset(name), f, 4);
    auto reps = monoidlike_reps(c.chains, c.normalized, c.omega);
    CHECK(reps.empty());
    CHECK(same_algebra(localized_cobar(c.normalized, reps), c.omega));
  }
}

TEST_CASE("localized cobar of the circle inverts the loop") {
  Field f = Field::q();
  CobarOfSpace c = lambda(s1(), f, 2);
  auto reps = monoidlike_reps(c.chains, c.normalized, c.omega);
  FreeDgAlgebra local = localized_cobar(c.normalized, reps);
  CHECK(local.check().empty());

  // generators: sigma from the base, then the circle cells except 0.u
  REQUIRE(local.gens() == 4);
  CHECK(local.gen_names[0] == "sigma");
  CHECK(local.gen_names[1] == "0.v");
  CHECK(local.gen_degrees[1] == 0);
  std::set<std::string> degree1(local.gen_names.begin() + 2, local.gen_names.end());
  CHECK(degree1 == std::set<std::string>{"0.uv", "0.vu"});

  // the glued differentials: u was eliminated by sigma
  NcPolynomial t = gp(f, {0}), v = gp(f, {1});
  int uv = local.gen_index("0.uv"), vu = local.gen_index("0.vu");
  CHECK(local.d_gen[static_cast<size_t>(uv)] == -(t + v + t * v));
  CHECK(local.d_gen[static_cast<size_t>(vu)] == -(t + v + v * t));

  // degree-zero homology is the Laurent algebra
  AlgebraPresentation h0 = h0_presentation(local);
  h0.oracle = OracleSpec::integers({{"sigma", 1}, {"0.v", -1}});
  REQUIRE(oracle_respects_relations(h0));
  NcPolynomial one = NcPolynomial::unit(f);
  AlgebraPresentation laurent = laurent_algebra(f);
  PresentationMap m{"to-laurent", {gp(f, {0}) - one, gp(f, {1}) - one}};
  IsoCheck iso = presentation_iso_check(h0, laurent, m, 6);
  CHECK(iso.status == CertStatus::verified);
  REQUIRE(iso.inverse.has_value());

  // distinct powers of the invertible class stay distinct
  NcPolynomial fwd = gp(f, {0}) + one, bwd = gp(f, {1}) + one;
  std::vector<NcPolynomial> powers;
  for (int k = -2; k <= 2; ++k) {
    NcPolynomial p = one;
    for (int i = 0; i < std::abs(k); ++i) p = p * (k > 0 ? fwd : bwd);
    powers.push_back(p);
  }
  for (size_t i = 0; i < powers.size(); ++i)
    for (size_t j = i + 1; j < powers.size(); ++j)
      CHECK(ideal_membership(h0, powers[i] - powers[j], 4).status == CertStatus::refuted);
}

TEST_CASE("localized cobar rejects dishonest representatives") {
  Field f = Field::q();
  CobarOfSpace c = lambda(sphere2_min(), f, 3);
  // degree-one generator: neither degree zero nor closed under gluing rules
  CHECK_THROWS_AS(localized_cobar(c.normalized, {gp(f, {0})}), malformed_input);
}

TEST_CASE("bar of the unit algebra and of the exterior algebra") {
  for (Field f : {Field::q(), Field::fp(2)}) {
    CAPTURE(f.name());
    DgCoalgebra bu = bar(unit_algebra(f, 3), 4);
    CHECK(bu.check().empty());
    CHECK(bu.dim(0) == 1);
    for (int k = 1; k <= 4; ++k) CHECK(bu.dim(k) == 0);

    DgCoalgebra be = bar(exterior_on_one_generator(f, 7), 8);
    CHECK(be.check().empty());
    // words in the suspended generator living in even degrees
    for (int k = 0; k <= 8; ++k) CHECK(be.dim(k) == (k % 2 == 0 ? 1 : 0));
    for (int k = 1; k <= 8; ++k) CHECK(be.diff[static_cast<size_t>(k)].is_zero());
    CHECK(be.names[2] == std::vector<std::string>{"[x]"});
    CHECK(be.names[4] == std::vector<std::string>{"[x|x]"});
  }
}

TEST_CASE("bar validates its tables") {
  Field f = Field::q();
  DgAlgebraInput broken = exterior_on_one_generator(f, 3);
  broken.basis[0].push_back("extra-unit");
  CHECK_FALSE(broken.check().empty());
  CHECK_THROWS_AS(bar(broken, 3), malformed_input);

  DgAlgebraInput nonchain = exterior_on_one_generator(f, 3);
  nonchain.diff[1] = SparseMatrix::from_triplets(1, 1, {{0, 0, sc(f, 1)}});
  CHECK_FALSE(nonchain.check().empty());

  CHECK_THROWS_AS(bar(exterior_on_one_generator(f, 2), 8), insufficient_truncation);
}

TEST_CASE("bar of a tabulated free dg algebra satisfies every coalgebra law") {
  Field f = Field::q();
  // nonzero differential and nonzero products: x in degree 1, y in degree 3
  // with dy = x*x
  FreeDgAlgebra a;
  a.field = f;
  a.label = "T(x,y)";
  a.gen_names = {"x", "y"};
  a.gen_degrees = {1, 3};
  a.d_gen = {NcPolynomial::zero(), gp(f, {0, 0})};
  a.augmentation = {sc(f, 0), sc(f, 0)};
  REQUIRE(a.check().empty());

  DgAlgebraInput in = dga_input_from_free(a, 5);
  CHECK(in.check().empty());
  DgCoalgebra b = bar(in, 5);
  CHECK(b.check().empty());  // dd, coassociativity, counit, coderivation
  CHECK(b.dim(0) == 1);
  CHECK(b.dim(2) == 1);  // [x]
  CHECK(b.dim(3) == 1);  // [x*x]
  CHECK(b.dim(4) == 3);  // [x*x*x], [y], [x|x]

  // tabulating an algebra with degree-zero generators is refused
  Field q = Field::q();
  CobarOfSpace s = lambda(s1(), q, 2);
  CHECK_THROWS_AS(dga_input_from_free(s.omega, 3), malformed_input);
}

TEST_CASE("bar then cobar recovers the exterior homology line") {
  Field f = Field::q();
  DgCoalgebra be = bar(exterior_on_one_generator(f, 5), 6);
  FreeDgAlgebra omega = cobar(be);
  CHECK(omega.check().empty());
  // generators one per even bar degree 2k >= 2, in cobar degree 2k - 1
  REQUIRE(omega.gens() == 3);
  CHECK(omega.gen_degrees == std::vector<int>{1, 3, 5});
  CHECK(omega.d_gen[0].is_zero());
  CHECK(omega.d_gen[1] == gp(f, {0, 0}));
  CHECK(omega.d_gen[2] == gp(f, {0, 1}) + gp(f, {1, 0}));

  BettiTable t = cobar_homology(omega, TruncationSpec::degrees(4), f);
  CHECK(t == betti::table({1, 1, 0, 0, 0}, {true, true, true, true, true}));
}

TEST_CASE("induced cobar map matrices act on word bases") {
  Field f = Field::q();
  CobarOfSpace c = lambda(s1(), f, 3);
  DgAlgebraMap doubled{"twice", {gp(f, {0}).scaled(sc(f, 2))}};
  TruncationSpec t = TruncationSpec::bounded(1, 2);
  SparseMatrix m = dga_map_matrix(c.omega, t, c.omega, t, doubled, 0);
  REQUIRE(m.rows == 3);  // 1, t, t^2
  REQUIRE(m.cols == 3);
  CHECK(m.at(1, 1, f) == sc(f, 2));
  CHECK(m.at(2, 2, f) == sc(f, 4));
}
