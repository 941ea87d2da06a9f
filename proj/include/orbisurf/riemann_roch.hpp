#pragma once

#include <optional>
#include <vector>

#include "orbisurf/cyc.hpp"
#include "orbisurf/orb_sheaf.hpp"
#include "orbisurf/rat_poly.hpp"

namespace orbisurf {

/// Untwisted component: degree 0, degree 1 (as a class in Num(X)_Q) and the
/// integral of the degree 2 part. `deg2` is empty for a Todd class whose
/// c2 term is unknown.
struct UntwistedTerm {
  Rat deg0;
  DivClass deg1;
  std::optional<Rat> deg2;
};

/// Twisted sector component. On curve sectors `deg1` is a degree measured on
/// the coarse curve; point sectors only use `deg0`.
struct TwistedTerm {
  Sector sector;
  Cyc deg0;
  Cyc deg1;
};

/// A class on the inertia stack truncated at each sector's dimension.
struct SectorClassVector {
  UntwistedTerm untwisted;
  std::vector<TwistedTerm> twisted;
};

SectorClassVector orb_ch(const OrbSheaf& e);
SectorClassVector orb_todd(const RootStackModel& rs);

/// Sum over sectors of weight * integral(ch * td); every irrational part
/// must cancel (NotRational otherwise). Throws MissingEulerNumber when the
/// base surface has no Euler number.
Rat euler_char(const OrbSheaf& e);

/// chi(E) - rk(E) * td2: the part of chi that does not need c2(T).
Rat euler_char_without_todd2(const OrbSheaf& e);

/// H_Xi(E, m) = chi(E (x) Xi^dual (x) pi^*O(mH)).
RatPoly modified_hilbert(const OrbSheaf& e, const GeneratingSheafData& xi, const DivClass& h);
RatPoly modified_hilbert(const OrbSheaf& e, const GeneratingSheafData& xi);
/// Same coefficients of m and m^2 as modified_hilbert, but works without an
/// Euler number (the constant term drops rk * td2).
RatPoly modified_hilbert_nonconstant(const OrbSheaf& e, const GeneratingSheafData& xi, const DivClass& h);

/// alpha_i with H = sum alpha_i m^i / i!.
Rat hilbert_alpha(const RatPoly& h, unsigned i);

}  // namespace orbisurf
