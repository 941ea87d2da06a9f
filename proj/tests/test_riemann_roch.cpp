#include <doctest.h>

#include "orbisurf/error.hpp"
#include "orbisurf/parabolic.hpp"
#include "orbisurf/riemann_roch.hpp"
#include "orbisurf/stability.hpp"
#include "support.hpp"

using namespace orbisurf;
using testing::cls;

TEST_CASE("chi on the projective plane") {
  const RootStackPtr rs = build_root_stack(testing::p2(), 1, {});
  for (long m = -5; m <= 5; ++m) {
    const OrbSheaf l = line_bundle(rs, rs->pullback(cls({m})));
    CHECK(euler_char(l) == Rat((m + 1) * (m + 2), 2));
  }
}

TEST_CASE("chi of root line bundles equals chi of their pushforward") {
  testing::Gen g(51);
  for (int i = 0; i < 200; ++i) {
    const RootStackPtr rs = g.root_stack();
    const DivClass base = g.divisor(rs->base().rho(), 2);
    std::vector<long> k(rs->branch_count());
    StackyClass c = rs->pullback(base);
    for (std::size_t b = 0; b < k.size(); ++b) {
      k[b] = g.integer(-2 * rs->r(), 2 * rs->r());
      c.stacky[b] = Rat(k[b]);
    }
    CHECK(euler_char(line_bundle(rs, c)) == testing::chi_pushforward(*rs, base, k));
  }
}

TEST_CASE("Hirzebruch-Riemann-Roch on random lattices") {
  testing::Gen g(52);
  for (int i = 0; i < 50; ++i) {
    const SurfaceModel s = g.hodge_lattice(static_cast<int>(g.integer(1, 3)));
    const RootStackPtr rs = build_root_stack(s, 1, {});
    const DivClass l = g.divisor(s.rho(), 3);
    CHECK(euler_char(line_bundle(rs, rs->pullback(l))) == testing::chi_surface(s, l));
  }
}

TEST_CASE("chi is additive and satisfies Serre duality") {
  testing::Gen g(53);
  for (int i = 0; i < 100; ++i) {
    const RootStackPtr rs = g.root_stack();
    const OrbSheaf e = g.sheaf(rs, 3);
    const OrbSheaf f = g.sheaf(rs, 2);
    CHECK(euler_char(direct_sum(e, f)) == euler_char(e) + euler_char(f));
    CHECK(euler_char(e) == euler_char(twist(dual(e), rs->canonical_class())));
  }
}

TEST_CASE("chi needs the Euler number") {
  const SurfaceModel s = SurfaceModel::build(1, {{Rat(1)}}, cls({1}), cls({-3}), std::nullopt, {});
  const RootStackPtr rs = build_root_stack(s, 1, {});
  CHECK_THROWS_AS(euler_char(structure_sheaf(rs)), Error);
  CHECK(euler_char_without_todd2(structure_sheaf(rs)) == Rat(0));
}

TEST_CASE("modified Hilbert polynomial") {
  testing::Gen g(54);
  for (int i = 0; i < 50; ++i) {
    const RootStackPtr rs = g.root_stack();
    const GeneratingSheafData xi = default_generating_sheaf(rs);
    const OrbSheaf e = g.sheaf(rs, 3);
    const RatPoly h = modified_hilbert(e, xi);
    const SurfaceModel& s = rs->base();
    CHECK(hilbert_alpha(h, 2) == Rat(e.rank() * xi.rank()) * s.intersect(s.H(), s.H()));
    CHECK(h.eval(Rat(0)) == euler_char(tensor(e, dual(xi.sheaf()))));
    CHECK(h.eval(Rat(3)) == euler_char(twist(tensor(e, dual(xi.sheaf())), rs->pullback(Rat(3) * s.H()))));
  }
}

TEST_CASE("slopes need condition star") {
  const RootStackPtr rs = build_root_stack(testing::p2(), 2, {"L1"});
  StackyClass c = rs->zero_class();
  c.stacky[0] = Rat(1);
  const OrbSheaf o = structure_sheaf(rs);
  const OrbSheaf lopsided = direct_sum(direct_sum(o, o), line_bundle(rs, c));
  try {
    slopes(o, GeneratingSheafData(lopsided));
    FAIL("expected ConditionStarViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConditionStarViolated);
  }
}

TEST_CASE("doubling the generating sheaf keeps the slope ordering") {
  testing::Gen g(55);
  for (int i = 0; i < 30; ++i) {
    const RootStackPtr rs = g.root_stack();
    const GeneratingSheafData xi = default_generating_sheaf(rs);
    const GeneratingSheafData xi2(direct_sum(xi.sheaf(), xi.sheaf()));
    const OrbSheaf a = g.sheaf(rs, 3);
    const OrbSheaf b = g.sheaf(rs, 3);
    const Rat d1 = slopes(a, xi).mu_xi - slopes(b, xi).mu_xi;
    const Rat d2 = slopes(a, xi2).mu_xi - slopes(b, xi2).mu_xi;
    CHECK(d1.sign() == d2.sign());
    CHECK(slopes(a, xi).mu_orb == Rat(stacky_intersect(*rs, a.c1(), rs->pullback(rs->base().H()))) / Rat(a.rank()));
  }
}

TEST_CASE("sheaves built from parabolic data have integral chi") {
  testing::Gen g(56);
  for (int i = 0; i < 200; ++i) {
    const RootStackPtr rs = g.root_stack();
    const ParabolicSheaf p = g.parabolic(*rs);
    CHECK(euler_char(parabolic_to_orb(rs, p)).is_integer());
  }
}
