#include <doctest.h>

#include "orbisurf/bounds.hpp"
#include "orbisurf/error.hpp"
#include "orbisurf/riemann_roch.hpp"
#include "orbisurf/stability.hpp"
#include "support.hpp"

using namespace orbisurf;
using testing::cls;

TEST_CASE("hn_sum agrees with the pairwise sum") {
  long count = 0;
  testing::for_each_polygon(6, testing::half_grid(), [&](const std::vector<long>& r, const std::vector<Rat>& mu) {
    CHECK(hn_sum(HNPolygon(r, mu)) == testing::hn_brute(r, mu));
    ++count;
  });
  CHECK(count > 1000);
  CHECK_THROWS_AS(HNPolygon({1, 1}, {Rat(0), Rat(1)}), Error);
  CHECK_THROWS_AS(HNPolygon({}, {}), Error);
}

TEST_CASE("Bogomolov on equal-slope sums of line bundles") {
  testing::Gen g(61);
  for (int i = 0; i < 100; ++i) {
    const SurfaceModel s = g.hodge_lattice(static_cast<int>(g.integer(1, 3)));
    const RootStackPtr rs = build_root_stack(s, 1, {});
    const DivClass l0 = g.divisor(s.rho(), 2);
    OrbSheaf e = line_bundle(rs, rs->pullback(l0));
    for (long k = g.integer(1, 3); k > 0; --k) e = direct_sum(e, line_bundle(rs, rs->pullback(l0 + g.orthogonal(s, 2))));
    CHECK(bogomolov_check(e).holds);
  }
  const RootStackPtr p2 = build_root_stack(testing::p2(), 1, {});
  const OrbSheaf unequal = direct_sum(line_bundle(p2, p2->pullback(cls({1}))), line_bundle(p2, p2->pullback(cls({-1}))));
  CHECK(delta(unequal) == Rat(-4));
  CHECK_FALSE(bogomolov_check(unequal).holds);
}

TEST_CASE("discriminant is twist invariant") {
  testing::Gen g(62);
  for (int i = 0; i < 100; ++i) {
    const RootStackPtr rs = g.root_stack();
    const OrbSheaf e = g.sheaf(rs, 3);
    CHECK(delta(twist(e, g.line_class(*rs, 3))) == delta(e));
  }
}

TEST_CASE("parabolic Bogomolov display matches the root stack discriminant") {
  testing::Gen g(63);
  for (int i = 0; i < 100; ++i) {
    const RootStackPtr rs = g.root_stack();
    const ParabolicSheaf p = g.parabolic(*rs);
    const ParabolicBogomolov b = thm39_check(rs, p);
    const Rat expanded = testing::parabolic_delta_expansion(*rs, p);
    CHECK(Rat(2 * p.rank) * b.verdict.residual == expanded);
    CHECK(b.delta_w == expanded);
  }
  const RootStackPtr rs = build_root_stack(testing::p2(), 2, {"L1"});
  ParabolicSheaf one = trivial_parabolic(*rs, 1, cls({1}), Rat(0));
  one.weights = {Rat(1, 2)};
  one.pieces[0] = {GradedPiece{1, Rat(1)}};
  CHECK(thm39_check(rs, one).verdict.residual == Rat(0));
}

TEST_CASE("parabolic slope and Euler characteristic") {
  const RootStackPtr rs = build_root_stack(testing::p2(), 2, {"L1"});
  const SurfaceModel& s = rs->base();
  ParabolicSheaf p = trivial_parabolic(*rs, 2, cls({0}), Rat(0));
  CHECK(parabolic_slope(p, s).padeg == Rat(0));
  // no weights: chi(E(-D)(m)) = 2 chi(O(m - 1))
  CHECK(parabolic_euler(p, s).eval(Rat(0)) == Rat(0));
  CHECK(parabolic_euler(p, s).eval(Rat(2)) == Rat(6));
  p.weights = {Rat(1, 2)};
  p.pieces[0] = {GradedPiece{1, Rat(0)}};
  CHECK(parabolic_slope(p, s).padeg == Rat(1, 2));
  CHECK(parabolic_slope(p, s).pamu == Rat(1, 4));
}

TEST_CASE("formula spot values") {
  BoundsInput b;
  b.rk = 3;
  b.p = 2;
  b.slope_terms = {Rat(1)};
  CHECK(beta(b) == Rat(36));
  CHECK(alpha_bound(b) == Rat(2));
  b.rk = 2;
  b.slope_terms = {Rat(0)};
  b.delta_hd2 = Rat(4);
  CHECK(restriction_threshold(b) == 3);
  b.rk = 1;
  CHECK_THROWS_AS(restriction_threshold(b), Error);
  b.slope_terms.clear();
  CHECK_THROWS_AS(beta(b), Error);
  CHECK(miyaoka_yau_check(testing::p2()).residual == Rat(0));
  CHECK(miyaoka_yau_check(testing::p1xp1()).residual == Rat(4));
}

TEST_CASE("beta and the restriction threshold are monotone") {
  testing::Gen g(64);
  for (int i = 0; i < 200; ++i) {
    BoundsInput b;
    b.p = g.pick(std::vector<long>{2, 3, 5, 7});
    b.rk = g.integer(2, 5);
    b.hd = Rat(g.integer(1, 4));
    b.delta_hd2 = g.rat(-3, 5, 3);
    b.slope_terms = {g.rat(0, 3, 4), g.rat(0, 3, 4)};
    BoundsInput more = b;
    switch (g.integer(0, 2)) {
      case 0: more.delta_hd2 += g.rat(0, 2, 3); break;
      case 1: more.slope_terms.push_back(g.rat(0, 5, 2)); break;
      default: more.rk += 1; break;
    }
    CHECK(beta(more) >= beta(b));
    CHECK(restriction_threshold(more) >= restriction_threshold(b));
  }
}

TEST_CASE("least characteristic for the Higgs bound matches a search") {
  testing::Gen g(65);
  for (int i = 0; i < 200; ++i) {
    const long rk = g.integer(1, 4);
    const Rat rk_xi(g.integer(1, 3)), hd(g.integer(1, 3)), had1 = g.rat(-3, 3, 2), m(g.integer(0, 2));
    const Rat dl = -g.rat(0, 3, 4) - Rat(1, 8);
    const HiggsBound h = higgs_min_char(rk, rk_xi, hd, had1, m, dl);
    const Rat shift = had1 / hd + m;
    const Rat c = Rat(rk * rk * (rk - 1) * (rk - 1)) * rk_xi * rk_xi * shift * shift / hd;
    long q = std::max(rk, 2L);
    while (Rat((q - 1) * (q - 1)) * abs(dl) <= c) ++q;
    CHECK(h.q_min == q);
    long prime = q;
    auto prime_p = [](long n) {
      for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
      }
      return n >= 2;
    };
    while (!prime_p(prime)) ++prime;
    CHECK(h.q_prime == prime);
  }
  CHECK(higgs_min_char(3, Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)).already_nonnegative);
}

TEST_CASE("positive cone membership") {
  const SurfaceModel s = testing::p1xp1();
  CHECK(kplus_membership(s, cls({1, 1})));
  CHECK_FALSE(kplus_membership(s, cls({1, 0})));
  CHECK(kplus_membership(s, cls({2, 1})));
  CHECK_FALSE(kplus_membership(s, cls({-1, -1})));
  CHECK_FALSE(kplus_membership(s, cls({1, -1})));
}

TEST_CASE("xi class") {
  const RootStackPtr rs = build_root_stack(testing::p2(), 2, {"L1"});
  StackyClass a = rs->zero_class(), b = rs->zero_class();
  a.base = cls({2});
  b.stacky[0] = Rat(1);
  const StackyClass x = xi_class(2, a, 1, b, Rat(2));
  CHECK(x.base == DivClass({Rat(1, 2)}));
  CHECK(x.stacky[0] == Rat(-1, 2));
}

TEST_CASE("HN correction and Frobenius-limit inequalities report residuals") {
  const HNPolygon poly({1, 1}, {Rat(1), Rat(-1)});
  const Verdict v = thmA1_check(poly, Rat(1), Rat(1), 2, Rat(1), Rat(1), Rat(0), Rat(-1));
  // rhs = Hd Delta + 2 rk^2 rkXi^2 (Lmax - mu)(mu - Lmin) = 9, lhs = hn_sum = 4
  CHECK(v.residual == Rat(5));
  BoundsInput b;
  b.rk = 2;
  b.delta_hd2 = Rat(1);
  CHECK_THROWS_AS(thmA5_checks(b), Error);
}
