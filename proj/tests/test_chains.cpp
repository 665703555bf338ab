#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>

#include "cobarkit/builtins.hpp"
#include "cobarkit/dg_coalgebra.hpp"
#include "support/sset_chain_oracle.hpp"

using namespace ck;
using ck_test::sset_betti;

namespace {

std::vector<Scalar> unit(const Field& f, int dim, int idx) {
  std::vector<Scalar> v(static_cast<size_t>(dim), Scalar::of(f, 0));
  v[static_cast<size_t>(idx)] = Scalar::of(f, 1);
  return v;
}

std::vector<std::tuple<int, int, int>> term_keys(const std::vector<AwTerm>& ts) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& t : ts) out.push_back({t.left_level, t.left, t.right});
  return out;
}

// every reduced basis element dies under an iterated reduced coproduct
// within degree + 1 steps
void check_conilpotence(const DgCoalgebra& n) {
  for (int k = 0; k <= n.top; ++k)
    for (int b : n.reduced_basis(k)) {
      auto w = n.conilpotence_degree(k, b, k + 1);
      REQUIRE(w.has_value());
      CHECK(*w <= k + 1);
    }
}

std::vector<std::int64_t> betti_dims(const BettiTable& t) {
  std::vector<std::int64_t> out;
  for (const auto& r : t.rows) out.push_back(r.dim);
  return out;
}

}  // namespace

TEST_CASE("normalized chains of the one-edge circle") {
  for (const Field& f : {Field::q(), Field::fp(2), Field::fp(3)}) {
    CAPTURE(f.name());
    SimplicialCoalgebra c = chains_coalgebra(s1(), f, 4);
    DgCoalgebra n = normalized_chains(c, 4);
    CHECK(n.check().empty());
    CHECK(n.connected());
    CHECK(n.dim(0) == 1);
    CHECK(n.dim(1) == 1);
    CHECK(n.dim(2) == 0);
    CHECK(n.dim(3) == 0);
    CHECK(n.names[1][0] == "sigma");

    // the differential vanishes: both faces of sigma are the vertex
    for (int k = 1; k <= 4; ++k) CHECK(n.diff[static_cast<size_t>(k)].is_zero());

    // cop(sigma) = * (x) sigma + sigma (x) *
    const auto& ts = n.cop[1][0];
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].coef.is_one());
    CHECK(ts[0].left_deg == 0);
    CHECK(ts[0].left == 0);
    CHECK(ts[0].right == 0);
    CHECK(ts[1].coef.is_one());
    CHECK(ts[1].left_deg == 1);
    CHECK(ts[1].left == 0);
    CHECK(ts[1].right == 0);

    // the reduced coproduct of the edge class is therefore zero
    CHECK(n.conilpotence_degree(1, 0, 2) == 1);
    check_conilpotence(n);
  }
}

TEST_CASE("normalized chains of the minimal two-sphere") {
  SimplicialCoalgebra c = chains_coalgebra(sphere2_min(), Field::q(), 4);
  DgCoalgebra n = normalized_chains(c, 4);
  CHECK(n.check().empty());
  CHECK(n.dim(0) == 1);
  CHECK(n.dim(1) == 0);
  CHECK(n.dim(2) == 1);
  CHECK(n.dim(3) == 0);
  CHECK(n.dim(4) == 0);
  for (int k = 1; k <= 4; ++k) CHECK(n.diff[static_cast<size_t>(k)].is_zero());

  // cop(e) = * (x) e + e (x) *: the middle front/back splittings are all
  // degenerate and vanish in the quotient
  const auto& ts = n.cop[2][0];
  REQUIRE(ts.size() == 2);
  CHECK((ts[0].left_deg == 0 && ts[0].left == 0 && ts[0].right == 0));
  CHECK((ts[1].left_deg == 2 && ts[1].left == 0 && ts[1].right == 0));
  CHECK(n.conilpotence_degree(2, 0, 3) == 1);
  check_conilpotence(n);
}

TEST_CASE("normalized chains of the one-vertex circle model") {
  for (const Field& f : {Field::q(), Field::fp(2)}) {
    CAPTURE(f.name());
    SimplicialCoalgebra c = chains_coalgebra(s1_localized(), f, 4);
    DgCoalgebra n = normalized_chains(c, 4);
    CHECK(n.check().empty());
    CHECK(n.dim(0) == 1);
    CHECK(n.dim(1) == 2);
    CHECK(n.dim(2) == 2);
    CHECK(n.dim(3) == 2);
    check_conilpotence(n);
  }
}

TEST_CASE("front/back splitting on interval words") {
  // F[pt] (x) F[interval] is the chains of the interval itself
  SimplicialCoalgebra t = tensor_interval(chains_coalgebra(pt(), Field::q(), 3));

  // the word 001 at level 2 (index = zero count) splits as
  // [0] (x) [001] + [00] (x) [01] + [001] (x) [1]
  auto ts = aw_on_element(t, 2, unit(Field::q(), t.dim(2), 2));
  for (const auto& a : ts) CHECK(a.coef.is_one());
  CHECK(term_keys(ts) ==
        std::vector<std::tuple<int, int, int>>{{0, 1, 2}, {1, 2, 1}, {2, 2, 0}});

  // counit on either leg recovers the element
  for (int n = 0; n <= 3; ++n) {
    for (int b = 0; b < t.dim(n); ++b) {
      auto terms = aw_on_element(t, n, unit(Field::q(), t.dim(n), b));
      std::map<int, Scalar> left0, right0;
      for (const auto& a : terms) {
        if (a.left_level == 0) {
          Scalar s = a.coef * t.level(0).counit[static_cast<size_t>(a.left)];
          auto [it, fresh] = left0.emplace(a.right, s);
          if (!fresh) it->second = it->second + s;
        }
        if (a.left_level == n) {
          Scalar s = a.coef * t.level(0).counit[static_cast<size_t>(a.right)];
          auto [it, fresh] = right0.emplace(a.left, s);
          if (!fresh) it->second = it->second + s;
        }
      }
      std::map<int, Scalar> expect{{b, Scalar::of(Field::q(), 1)}};
      CHECK(left0 == expect);
      CHECK(right0 == expect);
    }
  }

  // linearity: the splitting of 2x + 3y is the merged splitting
  SimplicialCoalgebra c = chains_coalgebra(s1_localized(), Field::q(), 3);
  std::vector<Scalar> v(static_cast<size_t>(c.dim(2)), Scalar::of(Field::q(), 0));
  v[0] = Scalar::of(Field::q(), 2);
  v[1] = Scalar::of(Field::q(), 3);
  std::map<std::tuple<int, int, int>, Scalar> merged;
  for (int b : {0, 1}) {
    for (const auto& a : aw_on_element(c, 2, unit(Field::q(), c.dim(2), b))) {
      auto key = std::tuple<int, int, int>{a.left_level, a.left, a.right};
      Scalar s = a.coef * v[static_cast<size_t>(b)];
      auto [it, fresh] = merged.emplace(key, s);
      if (!fresh) {
        it->second = it->second + s;
        if (it->second.is_zero()) merged.erase(it);
      }
    }
  }
  std::map<std::tuple<int, int, int>, Scalar> direct;
  for (const auto& a : aw_on_element(c, 2, v))
    direct[{a.left_level, a.left, a.right}] = a.coef;
  CHECK(direct == merged);

  CHECK_THROWS_AS(aw_on_element(c, 9, {}), insufficient_truncation);
  CHECK_THROWS_AS(aw_on_element(c, 1, {}), malformed_input);
}

TEST_CASE("chain homology agrees with the direct nondegenerate complex") {
  struct Fix {
    SSetPtr x;
    std::vector<std::int64_t> q, f2, f3;
  };
  std::vector<Fix> fixtures = {
      {s1(), {1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}},
      {sphere2_min(), {1, 0, 1, 0}, {1, 0, 1, 0}, {1, 0, 1, 0}},
      {s1_localized(), {1, 1, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}},
      {rp2_presentation(), {1, 0, 0, 0}, {1, 1, 1, 0}, {1, 0, 0, 0}},
      {wedge({s1(), s1()}), {1, 2, 0, 0}, {1, 2, 0, 0}, {1, 2, 0, 0}},
  };
  for (const auto& fx : fixtures) {
    CAPTURE(fx.x->label());
    for (const Field& f : {Field::q(), Field::fp(2), Field::fp(3)}) {
      CAPTURE(f.name());
      BettiTable got = chain_homology(fx.x, f, 3);
      REQUIRE(got.rows.size() == 4);
      for (const auto& r : got.rows) CHECK(r.exact);

      // frozen values
      const auto& want =
          f == Field::q() ? fx.q : (f == Field::fp(2) ? fx.f2 : fx.f3);
      CHECK(betti_dims(got) == want);

      // independent oracle: alternating-sum complex on nondegenerate cells
      BettiTable oracle = sset_betti(*fx.x, 4, f);
      for (int k = 0; k <= 3; ++k)
        CHECK(got.rows[static_cast<size_t>(k)].dim ==
              oracle.rows[static_cast<size_t>(k)].dim);
    }
  }
}

TEST_CASE("induced chain maps: functoriality, naturality, violations") {
  auto a = s1();
  auto b = s1_localized();
  SSetMap iota = builtin_map("iota_s1");
  for (const Field& f : {Field::q(), Field::fp(2)}) {
    CAPTURE(f.name());
    SimplicialCoalgebra ca = chains_coalgebra(a, f, 3);
    SimplicialCoalgebra cb = chains_coalgebra(b, f, 3);
    DgCoalgebra na = normalized_chains(ca, 3);
    DgCoalgebra nb = normalized_chains(cb, 3);

    DgCoalgebraMap nf = normalized_map(chains_map(iota, ca, cb), na, nb);
    CHECK(check_dg_map(na, nb, nf).empty());

    DgCoalgebraMap nid =
        normalized_map(chains_map(SSetMap::identity(a), ca, ca), na, na);
    for (int k = 0; k <= 3; ++k)
      CHECK(nid.at(k) == SparseMatrix::identity(na.dim(k), f));

    // collapsing everything to the point is also a dg coalgebra map
    auto p = pt();
    SimplicialCoalgebra cp = chains_coalgebra(p, f, 3);
    DgCoalgebra np = normalized_chains(cp, 3);
    DgCoalgebraMap ncol = normalized_map(
        chains_map(builtin_map("collapse:s1_localized"), cb, cp), nb, np);
    CHECK(check_dg_map(nb, np, ncol).empty());

    // the identity with one degree zeroed no longer commutes with the
    // differential (degree 2 of the one-vertex circle has d(uv) = u + v)
    DgCoalgebraMap nid2 =
        normalized_map(chains_map(SSetMap::identity(b), cb, cb), nb, nb);
    DgCoalgebraMap broken = nid2;
    broken.mats[2] = SparseMatrix::zero(nb.dim(2), nb.dim(2));
    auto v = check_dg_map(nb, nb, broken);
    REQUIRE(!v.empty());
    CHECK(v[0].find("differential") != std::string::npos);

    // swapping the degree-1 basis preserves the differential but breaks
    // coproduct naturality (u (x) v vs v (x) u in cop(uv))
    DgCoalgebraMap swapped = nid2;
    std::vector<SparseMatrix::Entry> sw{{0, 1, Scalar::of(f, 1)},
                                        {1, 0, Scalar::of(f, 1)}};
    swapped.mats[1] = SparseMatrix::from_triplets(2, 2, sw);
    v = check_dg_map(nb, nb, swapped);
    REQUIRE(!v.empty());
    bool nat = false;
    for (const auto& s : v) nat = nat || s.find("naturality") != std::string::npos;
    CHECK(nat);
    bool ddkept = true;
    for (const auto& s : v)
      ddkept = ddkept && s.find("differential") == std::string::npos;
    CHECK(ddkept);
  }
}

TEST_CASE("degenerate inputs are rejected") {
  SimplicialCoalgebra c = chains_coalgebra(s1(), Field::q(), 3);
  CHECK_THROWS_AS(normalized_chains(c, 4), insufficient_truncation);
  SimplicialCoalgebra t = tensor_interval(c);
  CHECK_THROWS_AS(normalized_chains(t, 2), malformed_input);
}

TEST_CASE("axiom checker reports corruption") {
  DgCoalgebra n =
      normalized_chains(chains_coalgebra(s1_localized(), Field::q(), 3), 3);
  REQUIRE(n.check().empty());

  // dropping a coproduct term breaks the counit law
  DgCoalgebra broken = n;
  broken.cop[1][0].erase(broken.cop[1][0].begin());
  auto v = broken.check();
  REQUIRE(!v.empty());
  bool counit_seen = false;
  for (const auto& s : v)
    counit_seen = counit_seen || s.find("counit law") != std::string::npos;
  CHECK(counit_seen);

  // perturbing the differential breaks dd = 0
  DgCoalgebra skewed = n;
  std::vector<SparseMatrix::Entry> tri{{0, 0, Scalar::of(Field::q(), 1)}};
  skewed.diff[2] = skewed.diff[2] +
                   SparseMatrix::from_triplets(skewed.diff[2].rows,
                                               skewed.diff[2].cols, tri);
  CHECK(!skewed.check().empty());
}

TEST_CASE("cylinder and mapping cylinder chains are dg coalgebras") {
  for (const Field& f : {Field::q(), Field::fp(2)}) {
    CAPTURE(f.name());
    SimplicialCoalgebra c = chains_coalgebra(s1(), f, 3);
    Cylinder cy = cylinder(c);
    DgCoalgebra nc = normalized_chains(c, 3);
    DgCoalgebra ncyl = normalized_chains(cy.cyl, 3);
    CHECK(ncyl.check().empty());
    check_conilpotence(ncyl);

    DgCoalgebraMap ni0 = normalized_map(cy.i0, nc, ncyl);
    DgCoalgebraMap ni1 = normalized_map(cy.i1, nc, ncyl);
    DgCoalgebraMap nq = normalized_map(cy.q, ncyl, nc);
    CHECK(check_dg_map(nc, ncyl, ni0).empty());
    CHECK(check_dg_map(nc, ncyl, ni1).empty());
    CHECK(check_dg_map(ncyl, nc, nq).empty());
    for (int k = 0; k <= 3; ++k) {
      CHECK(nq.at(k) * ni0.at(k) == SparseMatrix::identity(nc.dim(k), f));
      CHECK(nq.at(k) * ni1.at(k) == SparseMatrix::identity(nc.dim(k), f));
    }

    // the cylinder has the homology of its base
    BettiTable ht = chain_homology(ncyl, 2);
    REQUIRE(ht.rows.size() == 3);
    CHECK(ht.rows[0].dim == 1);
    CHECK(ht.rows[1].dim == 1);
    CHECK(ht.rows[2].dim == 0);

    // mapping cylinder of the circle inclusion
    auto b = s1_localized();
    SimplicialCoalgebra cb = chains_coalgebra(b, f, 3);
    CoalgebraMap fm = chains_map(builtin_map("iota_s1"), c, cb);
    MappingCylinder mc = mapping_cylinder(fm, c, cb);
    DgCoalgebra nb = normalized_chains(cb, 3);
    DgCoalgebra nm = normalized_chains(mc.m, 3);
    CHECK(nm.check().empty());
    DgCoalgebraMap ni = normalized_map(mc.i, nc, nm);
    DgCoalgebraMap np = normalized_map(mc.p, nm, nb);
    DgCoalgebraMap ns = normalized_map(mc.s_prime, nb, nm);
    CHECK(check_dg_map(nc, nm, ni).empty());
    CHECK(check_dg_map(nm, nb, np).empty());
    CHECK(check_dg_map(nb, nm, ns).empty());
    DgCoalgebraMap nf = normalized_map(fm, nc, nb);
    for (int k = 0; k <= 3; ++k) {
      CHECK(np.at(k) * ni.at(k) == nf.at(k));
      CHECK(np.at(k) * ns.at(k) == SparseMatrix::identity(nb.dim(k), f));
    }
  }
}
