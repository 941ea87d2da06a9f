#include "orbisurf/riemann_roch.hpp"

#include "orbisurf/error.hpp"

namespace orbisurf {

namespace {

Cyc character_sum(unsigned r, const std::vector<long>& ranks) {
  Cyc out(r);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] != 0) out += Rat(ranks[i]) * cyc_root(r, static_cast<long>(i));
  }
  return out;
}

Cyc character_sum(unsigned r, const std::vector<Rat>& values) {
  Cyc out(r);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) out += values[i] * cyc_root(r, static_cast<long>(i));
  }
  return out;
}

// Everything except deg0(ch) * deg2(td) on the untwisted sector.
Rat pair_without_todd2(const SectorClassVector& ch, const SectorClassVector& td, const RootStackModel& rs) {
  Rat total = rs.base().intersect(ch.untwisted.deg1, td.untwisted.deg1) + *ch.untwisted.deg2;
  if (ch.twisted.size() != td.twisted.size()) fail(ErrorCode::MissingSectorData, "sector lists differ");
  Cyc twisted(static_cast<unsigned>(rs.r()));
  for (std::size_t s = 0; s < ch.twisted.size(); ++s) {
    const auto& a = ch.twisted[s];
    const auto& b = td.twisted[s];
    if (!(a.sector == b.sector)) fail(ErrorCode::MissingSectorData, "sector lists differ");
    if (a.sector.kind == SectorKind::Curve) {
      twisted += a.sector.weight * (a.deg0 * b.deg1 + a.deg1 * b.deg0);
    } else {
      twisted += (a.sector.weight * Rat(a.sector.multiplicity)) * (a.deg0 * b.deg0);
    }
  }
  return total + cyc_to_rat(twisted);
}

template <class Chi>
RatPoly hilbert_from(const OrbSheaf& e, const GeneratingSheafData& xi, const DivClass& h, Chi chi) {
  const auto& rs = e.model();
  const OrbSheaf f = tensor(e, dual(xi.sheaf()));
  std::vector<std::pair<Rat, Rat>> points;
  for (long m = 0; m <= 2; ++m) points.emplace_back(Rat(m), chi(twist(f, rs->pullback(Rat(m) * h))));
  return interpolate(points);
}

}  // namespace

SectorClassVector orb_ch(const OrbSheaf& e) {
  const auto& rs = *e.model();
  const auto r = static_cast<unsigned>(rs.r());
  SectorClassVector out;
  out.untwisted = {Rat(e.rank()), rs.numeric(e.c1()), e.ch2()};
  for (const auto& sector : rs.sectors()) {
    if (sector.kind == SectorKind::Untwisted) continue;
    const SectorRestriction res = e.restriction(sector);
    TwistedTerm t{sector, character_sum(r, res.eigenranks), Cyc(r)};
    if (sector.kind == SectorKind::Curve) t.deg1 = character_sum(r, res.eigendegrees);
    out.twisted.push_back(std::move(t));
  }
  return out;
}

SectorClassVector orb_todd(const RootStackModel& rs) {
  const auto r = static_cast<unsigned>(rs.r());
  SectorClassVector out;
  const DivClass c1 = -rs.numeric(rs.canonical_class());
  out.untwisted.deg0 = Rat(1);
  out.untwisted.deg1 = Rat(1, 2) * c1;
  if (const auto c2 = rs.tangent_c2()) out.untwisted.deg2 = (rs.base().intersect(c1, c1) + *c2) / Rat(12);
  const Cyc one(r, Rat(1));
  for (const auto& sector : rs.sectors()) {
    if (sector.kind == SectorKind::Untwisted) continue;
    TwistedTerm t{sector, Cyc(r), Cyc(r)};
    if (sector.kind == SectorKind::Curve) {
      // 1/(1 - w e^{-N}) * T/(1 - e^{-T}) to first order, w = zeta^{-k}
      const Cyc w = cyc_root(r, -sector.k1);
      const Cyc t0 = (one - w).inverse();
      const auto lambda = static_cast<std::size_t>(sector.lambda);
      t.deg0 = t0;
      t.deg1 = (rs.gerbe_tangent_degree(lambda) / Rat(2)) * t0 - rs.gerbe_normal_degree(lambda) * (w * t0 * t0);
    } else {
      t.deg0 = (one - cyc_root(r, -sector.k1)).inverse() * (one - cyc_root(r, -sector.k2)).inverse();
    }
    out.twisted.push_back(std::move(t));
  }
  return out;
}

Rat euler_char_without_todd2(const OrbSheaf& e) {
  const auto& rs = *e.model();
  return pair_without_todd2(orb_ch(e), orb_todd(rs), rs);
}

Rat euler_char(const OrbSheaf& e) {
  const auto& rs = *e.model();
  const SectorClassVector td = orb_todd(rs);
  if (!td.untwisted.deg2) fail(ErrorCode::MissingEulerNumber, "chi needs the Euler number of the base surface");
  return Rat(e.rank()) * *td.untwisted.deg2 + pair_without_todd2(orb_ch(e), td, rs);
}

RatPoly modified_hilbert(const OrbSheaf& e, const GeneratingSheafData& xi, const DivClass& h) {
  if (e.model() != xi.sheaf().model()) fail(ErrorCode::ModelMismatch, "sheaf and generating sheaf on different root stacks");
  return hilbert_from(e, xi, h, [](const OrbSheaf& f) { return euler_char(f); });
}

RatPoly modified_hilbert(const OrbSheaf& e, const GeneratingSheafData& xi) {
  return modified_hilbert(e, xi, e.model()->base().H());
}

Rat hilbert_alpha(const RatPoly& h, unsigned i) {
  Rat factorial(1);
  for (unsigned k = 2; k <= i; ++k) factorial *= Rat(static_cast<long>(k));
  return h.coeff(i) * factorial;
}

// Used by slope computations, which only read alpha_1 and alpha_2.
RatPoly modified_hilbert_nonconstant(const OrbSheaf& e, const GeneratingSheafData& xi, const DivClass& h) {
  if (e.model() != xi.sheaf().model()) fail(ErrorCode::ModelMismatch, "sheaf and generating sheaf on different root stacks");
  return hilbert_from(e, xi, h, [](const OrbSheaf& f) { return euler_char_without_todd2(f); });
}

}  // namespace orbisurf
