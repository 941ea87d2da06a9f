#include <doctest.h>

#include <set>

#include "orbisurf/error.hpp"
#include "orbisurf/orb_sheaf.hpp"
#include "orbisurf/parabolic.hpp"
#include "orbisurf/stability.hpp"
#include "support.hpp"

using namespace orbisurf;
using testing::cls;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ValidationError;
}

}  // namespace

TEST_CASE("line bundles and their sector data") {
  const RootStackPtr rs = build_root_stack(testing::p2(), 3, {"L1"});
  StackyClass c = rs->zero_class();
  c.stacky[0] = Rat(2);
  const OrbSheaf l = line_bundle(rs, c);
  CHECK(l.rank() == 1);
  CHECK(l.curves()[0].ranks == std::vector<long>{0, 0, 1});
  c.stacky[0] = Rat(1, 2);
  CHECK(code_of([&] { line_bundle(rs, c); }) == ErrorCode::NonIntegralTwist);
}

TEST_CASE("operations satisfy their algebraic identities") {
  testing::Gen g(21);
  for (int i = 0; i < 100; ++i) {
    const RootStackPtr rs = g.root_stack();
    const OrbSheaf e = g.sheaf(rs, 3);
    const OrbSheaf f = g.sheaf(rs, 2);
    CHECK(dual(dual(e)) == e);
    CHECK(tensor(e, structure_sheaf(rs)) == e);
    CHECK(direct_sum(e, f).rank() == e.rank() + f.rank());
    CHECK(direct_sum(e, f).ch2() == e.ch2() + f.ch2());
    CHECK(tensor(e, f).ch2() == Rat(f.rank()) * e.ch2() + Rat(e.rank()) * f.ch2() +
                                    stacky_intersect(*rs, e.c1(), f.c1()));
    const StackyClass l = g.line_class(*rs, 2);
    CHECK(twist(twist(e, l), Rat(-1) * l) == e);
  }
}

TEST_CASE("direct sums of line bundles have the expected discriminant") {
  testing::Gen g(9);
  for (int i = 0; i < 100; ++i) {
    const RootStackPtr rs = g.root_stack();
    std::vector<DivClass> numeric;
    OrbSheaf e = structure_sheaf(rs);
    const long n = g.integer(1, 4);
    for (long k = 0; k < n; ++k) {
      const StackyClass c = g.line_class(*rs, 2);
      numeric.push_back(rs->numeric(c));
      const OrbSheaf l = line_bundle(rs, c);
      e = k == 0 ? l : direct_sum(e, l);
    }
    CHECK(delta(e) == testing::delta_of_line_sum(rs->base(), numeric));
  }
}

TEST_CASE("sheaf validation rejects inconsistent data") {
  const RootStackPtr rs = build_root_stack(testing::p2(), 2, {"L1"});
  const OrbSheaf o = structure_sheaf(rs);
  CHECK(code_of([&] { OrbSheaf(rs, 0, rs->zero_class(), Rat(0), o.curves(), {}); }) == ErrorCode::InvalidArgument);
  std::vector<CurveBands> bad = o.curves();
  bad[0].ranks = {1, 1};
  CHECK(code_of([&] { OrbSheaf(rs, 1, rs->zero_class(), Rat(0), bad, {}); }) == ErrorCode::InconsistentSectorData);
  const RootStackPtr other = build_root_stack(testing::p2(), 3, {"L1"});
  CHECK(code_of([&] { direct_sum(o, structure_sheaf(other)); }) == ErrorCode::ModelMismatch);
  CHECK(code_of([&] { frobenius_pullback(o, 2, 1); }) == ErrorCode::WildCharacteristic);
  CHECK(code_of([&] { frobenius_pullback(o, 4, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("generating sheaves and condition star") {
  const RootStackPtr rs = build_root_stack(testing::p2(), 3, {"L1"});
  const GeneratingSheafData xi = default_generating_sheaf(rs);
  CHECK(xi.rank() == 3);
  CHECK(is_generating(xi.sheaf()));
  CHECK(condition_star_check(xi.sheaf()));
  StackyClass c = rs->zero_class();
  c.stacky[0] = Rat(1);
  const OrbSheaf lopsided = direct_sum(structure_sheaf(rs), line_bundle(rs, c));
  CHECK_FALSE(is_generating(lopsided));
  CHECK_FALSE(condition_star_check(lopsided));
  CHECK(code_of([&] { GeneratingSheafData{lopsided}; }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Frobenius pullback scales classes and permutes characters") {
  testing::Gen g(31);
  for (int i = 0; i < 100; ++i) {
    const RootStackPtr rs = g.root_stack();
    const OrbSheaf e = g.sheaf(rs, 3);
    for (long p : {2L, 3L, 5L, 7L}) {
      if (rs->r() % p == 0) continue;
      const unsigned n = static_cast<unsigned>(g.integer(1, 2));
      const OrbSheaf f = frobenius_pullback(e, p, n);
      CHECK(f.c1() == pow(Rat(p), n) * e.c1());
      CHECK(delta(f) == pow(Rat(p), 2 * n) * delta(e));
      for (std::size_t l = 0; l < rs->branch_count(); ++l) {
        long total = 0;
        for (long x : f.curves()[l].ranks) total += x;
        CHECK(total == e.rank());
      }
    }
  }
}

TEST_CASE("parabolic dictionary round trip") {
  testing::Gen g(41);
  for (int i = 0; i < 100; ++i) {
    const RootStackPtr rs = g.root_stack();
    const ParabolicSheaf p = g.parabolic(*rs);
    const OrbSheaf w = parabolic_to_orb(rs, p);
    CHECK(w.rank() == p.rank);
    CHECK(orb_to_parabolic(w) == p);
  }
}

TEST_CASE("split parabolic data matches a sum of root line bundles") {
  testing::Gen g(43);
  for (int i = 0; i < 60; ++i) {
    const RootStackPtr rs = g.root_stack();
    const SurfaceModel& s = rs->base();
    const long rank = g.integer(1, 3);
    OrbSheaf direct = structure_sheaf(rs);
    ParabolicSheaf sum;
    for (long k = 0; k < rank; ++k) {
      const DivClass l = g.divisor(s.rho(), 2);
      StackyClass c = rs->pullback(l);
      ParabolicSheaf piece = trivial_parabolic(*rs, 1, l, Rat(0));
      // one character per summand on every branch, so the true crossing tables are the monotone ones
      std::vector<long> m(rs->branch_count(), g.integer(0, rs->r() - 1));
      std::set<long> used(m.begin(), m.end());
      used.erase(0);
      for (long j : used) piece.weights.emplace_back(j, rs->r());
      for (std::size_t b = 0; b < m.size(); ++b) {
        piece.pieces[b].assign(piece.weights.size(), GradedPiece{});
        c.stacky[b] = Rat(m[b]);
        if (m[b] == 0) continue;
        const auto at = std::find(piece.weights.begin(), piece.weights.end(), Rat(m[b], rs->r()));
        piece.pieces[b][at - piece.weights.begin()] = GradedPiece{1, s.intersect(l, s.divisor(rs->branch_names()[b]))};
      }
      const OrbSheaf line = line_bundle(rs, c);
      direct = k == 0 ? line : direct_sum(direct, line);
      sum = k == 0 ? piece : parabolic_direct_sum(s, sum, piece);
    }
    const OrbSheaf w = parabolic_to_orb(rs, sum);
    CHECK(w.rank() == direct.rank());
    CHECK(w.c1() == direct.c1());
    CHECK(w.c2int() == direct.c2int());
    CHECK(w.curves() == direct.curves());
  }
}

TEST_CASE("parabolic validation") {
  const RootStackPtr rs = build_root_stack(testing::p2(), 2, {"L1"});
  ParabolicSheaf p = trivial_parabolic(*rs, 2, cls({0}), Rat(0));
  p.weights = {Rat(1, 3)};
  p.pieces[0] = {GradedPiece{1, Rat(0)}};
  CHECK(code_of([&] { validate(p); }) == ErrorCode::WeightDenominatorMismatch);
  p.weights = {Rat(1, 2)};
  p.pieces[0] = {GradedPiece{3, Rat(0)}};
  CHECK(code_of([&] { validate(p); }) == ErrorCode::InvalidArgument);
}
