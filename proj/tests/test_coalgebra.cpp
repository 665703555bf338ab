#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cobarkit/builtins.hpp"
#include "cobarkit/coalgebra.hpp"

using namespace ck;

namespace {

std::vector<Field> all_fields() { return {Field::q(), Field::fp(2), Field::fp(3)}; }

}  // namespace

TEST_CASE("chains coalgebra: dimensions, invariants, unit index") {
  for (const Field& f : all_fields()) {
    CAPTURE(f.name());
    SimplicialCoalgebra c = chains_coalgebra(s1(), f, 4);
    CHECK(c.top == 4);
    CHECK(c.set_like);
    CHECK(c.connected());
    // level n of F[circle]: the base vertex word plus n degeneracy words on
    // the edge, n + 1 in total
    for (int n = 0; n <= 4; ++n) CHECK(c.dim(n) == n + 1);
    CHECK(c.check().empty());

    // the fully degenerate vertex is a basis element with the expected name
    for (int n = 0; n <= 4; ++n) {
      int u = c.unit_index(n);
      CHECK(c.level(n).counit[static_cast<size_t>(u)].is_one());
    }
    CHECK(c.level(3).names[static_cast<size_t>(c.unit_index(3))] == "s2 s1 s0 *");

    CHECK_THROWS_AS(c.level(5), insufficient_truncation);
    CHECK_THROWS_AS(c.level(-1), insufficient_truncation);
  }

  // two-sphere with one vertex and one nondegenerate 2-cell: a k-cell has
  // binomial(n, k) degeneracy words at level n, so levels 0..3 have
  // 1, 1, 2, 4 simplices
  SimplicialCoalgebra s = chains_coalgebra(sphere2_min(), Field::q(), 3);
  CHECK(s.dim(0) == 1);
  CHECK(s.dim(1) == 1);
  CHECK(s.dim(2) == 2);
  CHECK(s.dim(3) == 4);
  CHECK(s.check().empty());

  // chains need a reduced simplicial set
  CHECK_THROWS_AS(chains_coalgebra(boundary_delta(2), Field::q(), 2),
                  malformed_input);
}

TEST_CASE("coalgebra laws: violations are reported") {
  Field f = Field::q();
  Scalar one = Scalar::of(f, 1);

  Coalgebra good;
  good.field = f;
  good.names = {"a", "b"};
  good.cop = {{CoTerm{one, 0, 0}}, {CoTerm{one, 1, 1}}};
  good.counit = {one, one};
  CHECK(good.check_laws().empty());

  // break the counit on b
  Coalgebra bad = good;
  bad.counit[1] = Scalar::of(f, 0);
  auto v = bad.check_laws();
  REQUIRE(!v.empty());
  CHECK(v[0].find("counit") != std::string::npos);

  // break cocommutativity: Delta a = a (x) b
  Coalgebra nc = good;
  nc.cop[0] = {CoTerm{one, 0, 1}};
  v = nc.check_laws();
  bool seen = false;
  for (const auto& s : v) seen = seen || s.find("cocommutativity") != std::string::npos;
  CHECK(seen);
}

TEST_CASE("interval words: face and degeneracy index arithmetic") {
  // words at level n are monotone 0/1 strings keyed by their zero count
  CHECK(interval_word_str(2, 0) == "111");
  CHECK(interval_word_str(2, 1) == "011");
  CHECK(interval_word_str(2, 3) == "000");
  // deleting a letter inside the zero block lowers the count
  CHECK(interval_face(2, 2, 0) == 1);
  CHECK(interval_face(2, 2, 1) == 1);
  CHECK(interval_face(2, 2, 2) == 2);
  // doubling a letter inside the zero block raises it
  CHECK(interval_deg(2, 2, 0) == 3);
  CHECK(interval_deg(2, 2, 1) == 3);
  CHECK(interval_deg(2, 2, 2) == 2);

  // exhaustive simplicial identities on the interval encoding, levels 0..5:
  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= 5; ++n)
    for (int r = 0; r <= n + 1; ++r)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          CHECK(interval_face(n - 1, interval_face(n, r, j), i) ==
                interval_face(n - 1, interval_face(n, r, i), j - 1));
  // d_i s_j identities
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= n + 1; ++r)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          int via = interval_face(n + 1, interval_deg(n, r, j), i);
          if (i == j || i == j + 1)
            CHECK(via == r);
          else if (i < j)
            CHECK(via == interval_deg(n - 1, interval_face(n, r, i), j - 1));
          else
            CHECK(via == interval_deg(n - 1, interval_face(n, r, i - 1), j));
        }
}

TEST_CASE("tensor with the interval: dimensions and invariants") {
  for (const Field& f : all_fields()) {
    CAPTURE(f.name());
    SimplicialCoalgebra c = chains_coalgebra(s1(), f, 4);
    SimplicialCoalgebra t = tensor_interval(c);
    CHECK(t.top == 4);
    for (int n = 0; n <= 4; ++n) CHECK(t.dim(n) == c.dim(n) * (n + 2));
    CHECK(t.dim(1) == 6);
    // the tensor has two endpoints at level 0, so skip the connectivity part
    CHECK(t.check(false).empty());
    CHECK(!t.check().empty());
    // counit of a pair is the counit of its first leg
    for (int j = 0; j < t.dim(1); ++j)
      CHECK(t.level(1).counit[static_cast<size_t>(j)].is_one());
  }
}

TEST_CASE("cylinder: quotient basis, invariants, section identities") {
  for (const Field& f : all_fields()) {
    CAPTURE(f.name());
    SimplicialCoalgebra c = chains_coalgebra(s1(), f, 4);
    Cylinder cy = cylinder(c);

    for (int n = 0; n <= 4; ++n)
      CHECK(cy.cyl.dim(n) == 1 + (c.dim(n) - 1) * (n + 2));
    CHECK(cy.cyl.dim(0) == 1);
    CHECK(cy.cyl.dim(1) == 4);
    CHECK(cy.cyl.check().empty());

    // pair bookkeeping round-trips
    for (int n = 0; n <= 4; ++n)
      for (int x = 0; x < c.dim(n); ++x) {
        if (x == cy.unit_src[static_cast<size_t>(n)]) continue;
        for (int r = 0; r <= n + 1; ++r) {
          int idx = cy.pair_index(n, x, r);
          CHECK(cy.pair_of(n, idx) == std::pair<int, int>{x, r});
        }
      }

    // both ends followed by the projection are the identity, exactly
    for (int n = 0; n <= 4; ++n) {
      SparseMatrix id = SparseMatrix::identity(c.dim(n), f);
      CHECK(cy.q.at(n) * cy.i0.at(n) == id);
      CHECK(cy.q.at(n) * cy.i1.at(n) == id);
    }

    // ends and projection are maps of simplicial coalgebras
    CHECK(check_coalgebra_map(c, cy.cyl, cy.i0).empty());
    CHECK(check_coalgebra_map(c, cy.cyl, cy.i1).empty());
    CHECK(check_coalgebra_map(cy.cyl, c, cy.q).empty());
  }

  // the cylinder of the constant coalgebra is the constant coalgebra, with
  // both ends and the projection equal to the identity
  SimplicialCoalgebra k = chains_coalgebra(pt(), Field::q(), 3);
  Cylinder ck_ = cylinder(k);
  for (int n = 0; n <= 3; ++n) {
    CHECK(ck_.cyl.dim(n) == 1);
    SparseMatrix id = SparseMatrix::identity(1, Field::q());
    CHECK(ck_.i0.at(n) == id);
    CHECK(ck_.i1.at(n) == id);
    CHECK(ck_.q.at(n) == id);
  }

  // rejects inputs without a simplex basis
  SimplicialCoalgebra plain = chains_coalgebra(s1(), Field::q(), 2);
  plain.set_like = false;
  CHECK_THROWS_AS(cylinder(plain), malformed_input);
}

TEST_CASE("group-like elements: set-like fast path vs exhaustive search") {
  // the exhaustive search over F_2 must rediscover exactly the simplex basis
  SimplicialCoalgebra c = chains_coalgebra(s1(), Field::fp(2), 3);
  PointsResult fast = points(c, 1);
  CHECK(fast.exact);
  CHECK(fast.status == "exact");
  REQUIRE(fast.elements.size() == 4);
  CHECK(fast.elements[1] == c.level(1).names);

  // the set-like answer is the simplex family of the underlying set itself
  auto x = s1();
  for (int n = 0; n <= 3; ++n) {
    std::vector<std::string> want;
    for (const auto& r : all_simplices(*x, n)) want.push_back(x->ref_str(r));
    CHECK(fast.elements[static_cast<size_t>(n)] == want);
  }

  SimplicialCoalgebra blind = c;
  blind.set_like = false;
  for (auto& lv : blind.levels) lv.set_like = false;
  PointsResult slow = points(blind, 1 << 20);
  REQUIRE(slow.exact);
  for (int n = 0; n <= 3; ++n) {
    auto a = fast.elements[static_cast<size_t>(n)];
    auto b = slow.elements[static_cast<size_t>(n)];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }

  // same cross-check on the minimal two-sphere over F_3, plus the explicit
  // levelwise identification of the points with the sphere's own simplices
  auto sph = sphere2_min();
  SimplicialCoalgebra s = chains_coalgebra(sph, Field::fp(3), 3);
  SimplicialCoalgebra sblind = s;
  sblind.set_like = false;
  for (auto& lv : sblind.levels) lv.set_like = false;
  PointsResult sp = points(sblind, 1 << 20);
  REQUIRE(sp.exact);
  for (int n = 0; n <= 3; ++n) {
    auto a = points(s, 1).elements[static_cast<size_t>(n)];
    std::vector<std::string> want;
    for (const auto& r : all_simplices(*sph, n)) want.push_back(sph->ref_str(r));
    CHECK(a == want);
    auto b = sp.elements[static_cast<size_t>(n)];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }

  // rationals cannot be enumerated
  SimplicialCoalgebra q = chains_coalgebra(s1(), Field::q(), 2);
  q.set_like = false;
  PointsResult none = points(q, 1 << 20);
  CHECK(!none.exact);
  CHECK(none.status.find("inconclusive") == 0);

  // budget exhaustion is reported, not silently truncated
  SimplicialCoalgebra big = chains_coalgebra(s1(), Field::fp(3), 4);
  big.set_like = false;
  for (auto& lv : big.levels) lv.set_like = false;
  PointsResult over = points(big, 100);
  CHECK(!over.exact);
  CHECK(over.status.find("exceeds budget") != std::string::npos);
}

TEST_CASE("chains functor on maps") {
  auto a = s1();
  auto b = s1_localized();
  SSetMap iota = builtin_map("iota_s1");
  for (const Field& f : {Field::q(), Field::fp(2)}) {
    CAPTURE(f.name());
    SimplicialCoalgebra ca = chains_coalgebra(a, f, 3);
    SimplicialCoalgebra cb = chains_coalgebra(b, f, 3);
    CoalgebraMap fm = chains_map(iota, ca, cb);
    CHECK(check_coalgebra_map(ca, cb, fm).empty());

    // identity map induces identity matrices
    CoalgebraMap idm = chains_map(SSetMap::identity(a), ca, ca);
    for (int n = 0; n <= 3; ++n)
      CHECK(idm.at(n) == SparseMatrix::identity(ca.dim(n), f));

    // a deliberately wrong matrix is caught
    CoalgebraMap broken = fm;
    broken.mats[1] = SparseMatrix::zero(cb.dim(1), ca.dim(1));
    CHECK(!check_coalgebra_map(ca, cb, broken).empty());
  }
}

TEST_CASE("mapping cylinder: identity on the constant coalgebra") {
  auto p = pt();
  SimplicialCoalgebra k = chains_coalgebra(p, Field::q(), 3);
  CoalgebraMap idm = chains_map(SSetMap::identity(p), k, k);
  MappingCylinder mc = mapping_cylinder(idm, k, k);
  for (int n = 0; n <= 3; ++n) {
    CHECK(mc.m.dim(n) == 1);
    SparseMatrix id = SparseMatrix::identity(1, Field::q());
    CHECK(mc.i.at(n) == id);
    CHECK(mc.p.at(n) == id);
    CHECK(mc.s_prime.at(n) == id);
  }
  CHECK(mc.m.check().empty());
}

TEST_CASE("mapping cylinder: factorization through an injective end") {
  auto a = s1();
  auto b = s1_localized();
  SSetMap iota = builtin_map("iota_s1");
  for (const Field& f : all_fields()) {
    CAPTURE(f.name());
    SimplicialCoalgebra c = chains_coalgebra(a, f, 3);
    SimplicialCoalgebra cp = chains_coalgebra(b, f, 3);
    CoalgebraMap fm = chains_map(iota, c, cp);
    MappingCylinder mc = mapping_cylinder(fm, c, cp);

    CHECK(mc.m.top == 3);
    for (int n = 0; n <= 3; ++n)
      CHECK(mc.m.dim(n) == cp.dim(n) + (c.dim(n) - 1) * (n + 1));
    CHECK(mc.m.check().empty());

    CHECK(check_coalgebra_map(c, mc.m, mc.i).empty());
    CHECK(check_coalgebra_map(mc.m, cp, mc.p).empty());
    CHECK(check_coalgebra_map(cp, mc.m, mc.s_prime).empty());

    for (int n = 0; n <= 3; ++n) {
      // p i = f and p s' = id
      CHECK(mc.p.at(n) * mc.i.at(n) == fm.at(n));
      CHECK(mc.p.at(n) * mc.s_prime.at(n) ==
            SparseMatrix::identity(cp.dim(n), f));
      // i is injective: one unit entry per column, all rows distinct
      const SparseMatrix& in = mc.i.at(n);
      CHECK(in.nnz() == in.cols);
      std::set<std::int64_t> rows;
      for (const auto& e : in.entries) {
        CHECK(e.value.is_one());
        rows.insert(e.row);
      }
      CHECK(static_cast<std::int64_t>(rows.size()) == in.cols);
    }
  }
}
