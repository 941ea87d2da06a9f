#include <doctest.h>

#include "orbisurf/cyc.hpp"
#include "orbisurf/error.hpp"
#include "orbisurf/rat.hpp"
#include "orbisurf/rat_poly.hpp"
#include "support.hpp"

using namespace orbisurf;

TEST_CASE("rationals parse, print and round") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK(Rat(4).str() == "4/1");
  CHECK(Rat(4).pretty() == "4");
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK_THROWS_AS(Rat(1, 0), Error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
  CHECK_THROWS_AS(Rat::parse("1.5"), Error);
  CHECK(pow(Rat(2, 3), 3) == Rat(8, 27));
}

TEST_CASE("rational field laws on random samples") {
  testing::Gen g(11);
  for (int i = 0; i < 300; ++i) {
    const Rat a = g.rat(-5, 5, 7), b = g.rat(-5, 5, 7), c = g.rat(-5, 5, 7);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rat::parse(a.str()) == a);
  }
}

TEST_CASE("roots of unity satisfy their relations") {
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    Cyc sum(n);
    for (unsigned k = 0; k < n; ++k) sum += cyc_root(n, static_cast<long>(k));
    CHECK(cyc_to_rat(sum) == (n == 1 ? Rat(1) : Rat(0)));
    CHECK(cyc_root(n, static_cast<long>(n)) == Cyc(n, Rat(1)));
    CHECK(cyc_root(n, -1) * cyc_root(n, 1) == Cyc(n, Rat(1)));
  }
  CHECK(euler_phi(12) == 4);
  CHECK_THROWS_AS(cyc_to_rat(cyc_root(3, 1)), Error);
  try {
    cyc_to_rat(cyc_root(3, 1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRational);
  }
}

TEST_CASE("cyclotomic inverses and promotion") {
  testing::Gen g(5);
  for (int i = 0; i < 100; ++i) {
    const unsigned n = static_cast<unsigned>(g.integer(2, 12));
    Cyc z(n);
    for (unsigned k = 0; k < n; ++k) z += g.rat(-3, 3, 3) * cyc_root(n, static_cast<long>(k));
    if (z.is_zero()) continue;
    CHECK(z * z.inverse() == Cyc(n, Rat(1)));
    CHECK(z.lift(2 * n) * cyc_root(2 * n, 2) == z.lift(2 * n) * cyc_root(n, 1).lift(2 * n));
  }
  // 1/(1 - zeta) summed over a Galois orbit is rational: sum_k 1/(1-zeta^k) = (n-1)/2.
  for (unsigned n : {2u, 3u, 5u, 7u}) {
    Cyc total(n);
    for (unsigned k = 1; k < n; ++k) total += (Cyc(n, Rat(1)) - cyc_root(n, static_cast<long>(k))).inverse();
    CHECK(cyc_to_rat(total) == Rat(static_cast<long>(n) - 1, 2));
  }
}

TEST_CASE("polynomial interpolation recovers random polynomials") {
  testing::Gen g(7);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> c;
    const long deg = g.integer(0, 4);
    for (long k = 0; k <= deg; ++k) c.push_back(g.rat(-4, 4, 5));
    const RatPoly p(c);
    std::vector<std::pair<Rat, Rat>> pts;
    for (long x = 0; x <= deg; ++x) pts.emplace_back(Rat(x), p.eval(Rat(x)));
    CHECK(interpolate(pts) == p);
    const RatPoly q({Rat(1), Rat(2)});
    const auto [quot, rem] = RatPoly::divmod(p * q + RatPoly::constant(Rat(3)), q);
    CHECK(quot == p);
    CHECK(rem == RatPoly::constant(Rat(3)));
  }
  CHECK(RatPoly({Rat(3), Rat(5), Rat(2)}).str("m") == "2*m^2 + 5*m + 3");
}
