#include "orbisurf/stability.hpp"

#include <stdexcept>

#include "orbisurf/error.hpp"

namespace orbisurf {

namespace {

const DivClass& component_class(const SurfaceModel& s, const std::string& name) {
  try {
    return s.divisor(name);
  } catch (const Error&) {
    fail(ErrorCode::MissingGeometry, "no divisor class for parabolic component '" + name + "'");
  }
}

// A = sum alpha_i r_{i,lambda} D_lambda
DivClass weighted_divisor(const ParabolicSheaf& p, const SurfaceModel& s) {
  DivClass a = DivClass::zero(s.rho());
  for (std::size_t l = 0; l < p.components.size(); ++l) {
    const DivClass& d = component_class(s, p.components[l]);
    for (std::size_t i = 0; i < p.weights.size(); ++i) a += (p.weights[i] * Rat(p.pieces[l][i].rank)) * d;
  }
  return a;
}

}  // namespace

SlopeReport slopes(const OrbSheaf& e, const GeneratingSheafData& xi, const DivClass& h) {
  if (!condition_star_check(xi)) {
    fail(ErrorCode::ConditionStarViolated, "generating sheaf has unequal eigenranks on some gerbe");
  }
  const auto& rs = *e.model();
  const RatPoly he = modified_hilbert_nonconstant(e, xi, h);
  const RatPoly ho = modified_hilbert_nonconstant(structure_sheaf(e.model()), xi, h);
  const Rat rk(e.rank());
  const Rat rk_xi(xi.rank());
  SlopeReport out;
  out.mu_xi = hilbert_alpha(he, 1) / hilbert_alpha(he, 2);
  out.deg = stacky_intersect(rs, e.c1(), rs.pullback(h));
  out.mu_orb = out.deg / rk;
  out.deg_xi = hilbert_alpha(he, 1) / rk_xi - rk / rk_xi * hilbert_alpha(ho, 1);
  return out;
}

SlopeReport slopes(const OrbSheaf& e, const GeneratingSheafData& xi) {
  return slopes(e, xi, e.model()->base().H());
}

Rat delta(const OrbSheaf& e) {
  const Rat rk(e.rank());
  return Rat(2) * rk * e.c2int() - (rk - Rat(1)) * stacky_intersect(*e.model(), e.c1(), e.c1());
}

Verdict bogomolov_check(const OrbSheaf& e, const BogomolovContext&) { return verdict_from(delta(e)); }

HNPolygon::HNPolygon(std::vector<long> ranks, std::vector<Rat> slopes)
    : ranks_(std::move(ranks)), slopes_(std::move(slopes)) {
  if (ranks_.empty()) fail(ErrorCode::InvalidArgument, "polygon needs at least one block");
  if (ranks_.size() != slopes_.size()) fail(ErrorCode::DimensionMismatch, "polygon needs one slope per rank");
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (ranks_[i] <= 0) fail(ErrorCode::InvalidArgument, "polygon ranks must be positive");
    if (i > 0 && !(slopes_[i] < slopes_[i - 1])) fail(ErrorCode::InvalidArgument, "polygon slopes must strictly decrease");
  }
}

long HNPolygon::total_rank() const {
  long total = 0;
  for (long r : ranks_) total += r;
  return total;
}

Rat hn_sum(const HNPolygon& poly) {
  Rat first, second;
  for (std::size_t i = 0; i < poly.ranks().size(); ++i) {
    const Rat r(poly.ranks()[i]);
    first += r * poly.slopes()[i];
    second += r * poly.slopes()[i] * poly.slopes()[i];
  }
  return Rat(poly.total_rank()) * second - first * first;
}

Verdict thmA1_check(const HNPolygon& poly, const Rat& delta_hd2, const Rat& hd, long rk, const Rat& rk_xi,
                    const Rat& l_max, const Rat& mu, const Rat& l_min) {
  if (poly.total_rank() != rk) fail(ErrorCode::InvalidArgument, "polygon rank differs from rk");
  const Rat rk2 = Rat(rk) * Rat(rk);
  const Rat rhs = hd * delta_hd2 + Rat(2) * rk2 * rk_xi * rk_xi * (l_max - mu) * (mu - l_min);
  return verdict_from(rhs - hn_sum(poly));
}

StackyClass xi_class(long rank1, const StackyClass& c1_1, long rank2, const StackyClass& c1_2, const Rat& rk_xi) {
  if (rank1 <= 0 || rank2 <= 0) fail(ErrorCode::InvalidArgument, "xi needs positive ranks");
  if (rk_xi.sign() <= 0) fail(ErrorCode::InvalidArgument, "xi needs a positive generating rank");
  return (Rat(1) / (rk_xi * Rat(rank1))) * c1_1 - (Rat(1) / (rk_xi * Rat(rank2))) * c1_2;
}

bool kplus_membership(const SurfaceModel& s, const DivClass& d, const DivClass& h) {
  return s.intersect(d, d).sign() > 0 && s.intersect(d, h).sign() >= 0;
}

bool kplus_membership(const SurfaceModel& s, const DivClass& d) { return kplus_membership(s, d, s.H()); }

Verdict miyaoka_yau_check(const SurfaceModel& s) {
  if (!s.euler_number()) fail(ErrorCode::MissingEulerNumber, "Miyaoka-Yau check needs the Euler number");
  return verdict_from(Rat(3) * *s.euler_number() - s.intersect(s.K(), s.K()));
}

ParabolicSlope parabolic_slope(const ParabolicSheaf& p, const SurfaceModel& s, const DivClass& h) {
  validate(p);
  ParabolicSlope out;
  out.padeg = s.intersect(p.c1E + weighted_divisor(p, s), h);
  out.pamu = out.padeg / Rat(p.rank);
  return out;
}

ParabolicSlope parabolic_slope(const ParabolicSheaf& p, const SurfaceModel& s) { return parabolic_slope(p, s, s.H()); }

RatPoly parabolic_euler(const ParabolicSheaf& p, const SurfaceModel& s, const DivClass& h) {
  validate(p);
  if (!s.euler_number()) fail(ErrorCode::MissingGeometry, "parabolic chi needs the Euler number of the surface");
  const Rat chi_o = s.chi_structure_sheaf();
  const Rat rk(p.rank);
  DivClass d_total = DivClass::zero(s.rho());
  for (const auto& name : p.components) d_total += component_class(s, name);

  std::vector<std::pair<Rat, Rat>> points;
  for (long m = 0; m <= 2; ++m) {
    // E(-D)(m): twist by L = mH - D
    const DivClass l = Rat(m) * h - d_total;
    const DivClass c1 = p.c1E + rk * l;
    const Rat c2 = p.c2E + (rk - Rat(1)) * s.intersect(p.c1E, l) + rk * (rk - Rat(1)) / Rat(2) * s.intersect(l, l);
    Rat value = rk * chi_o + s.intersect(c1, c1 - s.K()) / Rat(2) - c2;
    for (std::size_t lam = 0; lam < p.components.size(); ++lam) {
      const DivClass& d = component_class(s, p.components[lam]);
      const Rat one_minus_g = (-s.intersect(s.K(), d) - s.intersect(d, d)) / Rat(2);
      for (std::size_t i = 0; i < p.weights.size(); ++i) {
        const auto& g = p.pieces[lam][i];
        const Rat rg(g.rank);
        value += p.weights[i] * (g.degree + Rat(m) * rg * s.intersect(d, h) + rg * one_minus_g);
      }
    }
    points.emplace_back(Rat(m), value);
  }
  return interpolate(points);
}

RatPoly parabolic_euler(const ParabolicSheaf& p, const SurfaceModel& s) { return parabolic_euler(p, s, s.H()); }

ParabolicBogomolov thm39_check(const RootStackPtr& rs, const ParabolicSheaf& p) {
  validate(p);
  const auto& s = rs->base();
  const Rat rk(p.rank);
  const DivClass a = weighted_divisor(p, s);
  Rat lhs = p.c2E + s.intersect(p.c1E, a) + s.intersect(a, a) / Rat(2);
  for (std::size_t l = 0; l < p.components.size(); ++l) {
    const DivClass& d = component_class(s, p.components[l]);
    const Rat self = s.intersect(d, d);
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
      const Rat& alpha = p.weights[i];
      const auto& g = p.pieces[l][i];
      lhs -= alpha * alpha * Rat(g.rank) * self / Rat(2) + alpha * g.degree;
    }
  }
  lhs -= parabolic_crossing_term(*rs, p);
  const DivClass total = p.c1E + a;
  const Rat rhs = (rk - Rat(1)) / (Rat(2) * rk) * s.intersect(total, total);

  ParabolicBogomolov out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.verdict = verdict_from(lhs - rhs);
  out.delta_w = delta(parabolic_to_orb(rs, p));
  if (Rat(2) * rk * out.verdict.residual != out.delta_w) {
    throw std::logic_error("parabolic display and Delta(W) disagree: 2rk*residual = " +
                           (Rat(2) * rk * out.verdict.residual).str() + ", Delta(W) = " + out.delta_w.str());
  }
  return out;
}

}  // namespace orbisurf
