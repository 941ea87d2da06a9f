#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orbisurf/root_stack.hpp"

namespace orbisurf {

/// Restriction of a sheaf to the gerbe over one branch curve, split by the
/// character j (0 <= j < r) through which the generic mu_r stabilizer acts.
/// `degrees[j]` is the degree of the j-th eigenbundle measured on the coarse
/// curve; the 1/r gerbe weight is applied only when integrating.
struct CurveBands {
  std::vector<long> ranks;
  std::vector<Rat> degrees;
  friend bool operator==(const CurveBands&, const CurveBands&) = default;
};

/// Eigenranks at the crossing points of two branch curves, indexed by the
/// character pair (j1, j2) of mu_r x mu_r.
struct PointBands {
  std::vector<std::vector<long>> ranks;
  friend bool operator==(const PointBands&, const PointBands&) = default;
};

using CrossingKey = std::pair<std::size_t, std::size_t>;

/// What a single inertia sector sees: eigenranks (and, on curve sectors,
/// eigendegrees) indexed by the character i/r of the sector's group element.
/// Point sectors also expose the raw character-pair table.
struct SectorRestriction {
  SectorKind kind = SectorKind::Untwisted;
  std::vector<long> eigenranks;
  std::vector<Rat> eigendegrees;
  std::vector<std::vector<long>> pair_ranks;
};

/// Numerical invariants of a torsion-free sheaf on a root stack. Sector data
/// is stored once per branch curve and per crossing; the data of each twisted
/// sector is derived from it, which keeps the Galois conjugate sectors
/// consistent.
class OrbSheaf {
public:
  /// Validates: rank > 0, band ranks nonnegative summing to rank on every
  /// curve and crossing, band degrees summing to the restriction degree of
  /// c1, and crossing tables whose marginals match the curve bands.
  /// Throws InconsistentSectorData / DimensionMismatch / InvalidArgument.
  OrbSheaf(RootStackPtr model, long rank, StackyClass c1, Rat c2int, std::vector<CurveBands> curves,
           std::map<CrossingKey, PointBands> points);

  /// Builds a sheaf whose crossing tables are filled in from the curve bands
  /// by the monotone (north-west corner) coupling.
  static OrbSheaf with_coupled_points(RootStackPtr model, long rank, StackyClass c1, Rat c2int,
                                      std::vector<CurveBands> curves);

  const RootStackPtr& model() const { return model_; }
  long rank() const { return rank_; }
  const StackyClass& c1() const { return c1_; }
  const Rat& c2int() const { return c2_; }
  const std::vector<CurveBands>& curves() const { return curves_; }
  const std::map<CrossingKey, PointBands>& points() const { return points_; }

  /// The derived restriction to one inertia sector.
  SectorRestriction restriction(const Sector& sector) const;

  /// (c1^2)/2 - c2, integrated.
  Rat ch2() const;

  friend bool operator==(const OrbSheaf& a, const OrbSheaf& b);

private:
  RootStackPtr model_;
  long rank_;
  StackyClass c1_;
  Rat c2_;
  std::vector<CurveBands> curves_;
  std::map<CrossingKey, PointBands> points_;
};

/// Joint table with the given marginals built by the north-west corner rule.
std::vector<std::vector<long>> monotone_coupling(const std::vector<long>& rows, const std::vector<long>& cols);

/// Line bundle O(c1); the stacky coefficients must be integers (NonIntegralTwist).
OrbSheaf line_bundle(const RootStackPtr& rs, const StackyClass& c1);
OrbSheaf structure_sheaf(const RootStackPtr& rs);

OrbSheaf direct_sum(const OrbSheaf& a, const OrbSheaf& b);
OrbSheaf tensor(const OrbSheaf& e, const OrbSheaf& f);
/// E tensor O(L); L must have integral stacky part.
OrbSheaf twist(const OrbSheaf& e, const StackyClass& l);
OrbSheaf dual(const OrbSheaf& e);

/// n-th Frobenius pullback in characteristic p. Characters transform as
/// j -> p^n j mod r unless `fixed_characters` is set, which keeps them as
/// written in the proof of the surface Bogomolov inequality. Throws
/// WildCharacteristic when p divides r.
OrbSheaf frobenius_pullback(const OrbSheaf& e, long p, unsigned n, bool fixed_characters = false);

/// A locally free sheaf containing every character on every branch gerbe.
class GeneratingSheafData {
public:
  /// Throws InvalidArgument unless every curve band has eigenrank >= 1.
  explicit GeneratingSheafData(OrbSheaf sheaf);
  const OrbSheaf& sheaf() const { return sheaf_; }
  long rank() const { return sheaf_.rank(); }

private:
  OrbSheaf sheaf_;
};

bool is_generating(const OrbSheaf& sheaf);

/// Xi = sum_{i=0}^{r-1} O(i * sum_lambda D~_lambda).
GeneratingSheafData default_generating_sheaf(const RootStackPtr& rs);

/// True iff on every branch gerbe all r eigenranks are equal.
bool condition_star_check(const OrbSheaf& xi);
inline bool condition_star_check(const GeneratingSheafData& xi) { return condition_star_check(xi.sheaf()); }

bool is_prime(long n);

}  // namespace orbisurf
