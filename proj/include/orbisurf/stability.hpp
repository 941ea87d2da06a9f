#pragma once

#include <utility>
#include <vector>

#include "orbisurf/parabolic.hpp"
#include "orbisurf/riemann_roch.hpp"

namespace orbisurf {

/// Outcome of an inequality check: `residual` is (larger side) - (smaller
/// side) of the inequality as stated, and `holds` is residual >= 0.
struct Verdict {
  bool holds = false;
  Rat residual;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

inline Verdict verdict_from(const Rat& residual) { return {residual.sign() >= 0, residual}; }

struct SlopeReport {
  Rat mu_xi;   // alpha_1 / alpha_2
  Rat deg;     // c1(E).pi^*H
  Rat mu_orb;  // deg / rk
  Rat deg_xi;  // (alpha_1(E) - rk alpha_1(O)) / rk(Xi)
};

/// Throws ConditionStarViolated unless Xi has equal eigenranks on every gerbe.
SlopeReport slopes(const OrbSheaf& e, const GeneratingSheafData& xi, const DivClass& h);
SlopeReport slopes(const OrbSheaf& e, const GeneratingSheafData& xi);

/// 2 rk c2 - (rk - 1) c1^2.
Rat delta(const OrbSheaf& e);

/// Hypotheses the caller asserts; they are echoed, never verified.
struct BogomolovContext {
  bool semistable_claimed = false;
  bool strongly = false;
  long characteristic = 0;
};

/// residual = Delta(E).
Verdict bogomolov_check(const OrbSheaf& e, const BogomolovContext& context = {});

/// Ranks and slopes of a Harder-Narasimhan profile, slopes strictly decreasing.
class HNPolygon {
public:
  /// Throws InvalidArgument on empty input, nonpositive ranks or slopes that
  /// are not strictly decreasing.
  HNPolygon(std::vector<long> ranks, std::vector<Rat> slopes);

  const std::vector<long>& ranks() const { return ranks_; }
  const std::vector<Rat>& slopes() const { return slopes_; }
  long total_rank() const;

private:
  std::vector<long> ranks_;
  std::vector<Rat> slopes_;
};

/// sum_{i<j} r_i r_j (mu_i - mu_j)^2, via rk * sum r_i mu_i^2 - (sum r_i mu_i)^2.
Rat hn_sum(const HNPolygon& poly);

/// hn_sum <= Hd * DeltaHd2 + 2 rk^2 rkXi^2 (Lmax - mu)(mu - Lmin).
Verdict thmA1_check(const HNPolygon& poly, const Rat& delta_hd2, const Rat& hd, long rk, const Rat& rk_xi,
                    const Rat& l_max, const Rat& mu, const Rat& l_min);

/// xi = c1(G')/(rkXi rk G') - c1(G)/(rkXi rk G).
StackyClass xi_class(long rank1, const StackyClass& c1_1, long rank2, const StackyClass& c1_2, const Rat& rk_xi);

/// D.D > 0 and D.H >= 0.
bool kplus_membership(const SurfaceModel& s, const DivClass& d, const DivClass& h);
bool kplus_membership(const SurfaceModel& s, const DivClass& d);

/// residual = 3 e(X) - K^2; K nef is the caller's claim. Throws MissingEulerNumber.
Verdict miyaoka_yau_check(const SurfaceModel& s);

struct ParabolicSlope {
  Rat padeg;
  Rat pamu;
};

/// padeg = c1(E).H + sum alpha_i r_{i,lambda} D_lambda.H. Component classes
/// are looked up by name on `s` (MissingGeometry when absent).
ParabolicSlope parabolic_slope(const ParabolicSheaf& p, const SurfaceModel& s, const DivClass& h);
ParabolicSlope parabolic_slope(const ParabolicSheaf& p, const SurfaceModel& s);

/// chi(E(-D)(m)) + sum alpha_i chi(G_i(m)) as a polynomial in m, from surface
/// and curve Riemann-Roch. Throws MissingGeometry without an Euler number or
/// a component class.
RatPoly parabolic_euler(const ParabolicSheaf& p, const SurfaceModel& s, const DivClass& h);
RatPoly parabolic_euler(const ParabolicSheaf& p, const SurfaceModel& s);

struct ParabolicBogomolov {
  Verdict verdict;  // residual = lhs - rhs
  Rat lhs;
  Rat rhs;
  Rat delta_w;      // Delta of the corresponding sheaf on the root stack
};

/// Evaluates the parabolic Bogomolov display and checks that
/// 2 rk (lhs - rhs) equals Delta(parabolic_to_orb(P)); a mismatch throws
/// std::logic_error.
ParabolicBogomolov thm39_check(const RootStackPtr& rs, const ParabolicSheaf& p);

}  // namespace orbisurf
