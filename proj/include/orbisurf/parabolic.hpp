#pragma once

#include <string>
#include <vector>

#include "orbisurf/orb_sheaf.hpp"

namespace orbisurf {

/// Graded piece G_{i,lambda} of the filtration on E|_{D_lambda}.
struct GradedPiece {
  long rank = 0;
  Rat degree;
  friend bool operator==(const GradedPiece&, const GradedPiece&) = default;
};

/// Numerical data of a parabolic sheaf on (X, D) with weights in (1/r)Z.
/// `pieces[lambda][i]` belongs to component `components[lambda]` and weight
/// `weights[i]`.
struct ParabolicSheaf {
  long rank = 1;
  DivClass c1E;
  Rat c2E;
  int r = 1;
  std::vector<Rat> weights;
  std::vector<std::string> components;
  std::vector<std::vector<GradedPiece>> pieces;

  friend bool operator==(const ParabolicSheaf&, const ParabolicSheaf&) = default;
};

/// Checks the invariants: weights strictly increasing in [0, 1) with
/// denominator dividing r, ranks nonnegative with sum at most rank on every
/// component, zero-rank pieces of degree zero. Throws InvalidArgument or
/// WeightDenominatorMismatch.
void validate(const ParabolicSheaf& p);

/// Parabolic data with no weights on every branch component of `rs`.
ParabolicSheaf trivial_parabolic(const RootStackModel& rs, long rank, DivClass c1E, Rat c2E);

/// The sheaf W on the root stack. Chern data comes from the K-theory
/// decomposition W = pi^*E + sum iota_*(G (x) N^j). The band of character m_i
/// on D~_lambda gets rank r_{i,lambda} and degree d_{i,lambda} + alpha_i
/// r_{i,lambda} D_lambda^2; character 0 takes the rest. Crossing tables use
/// the monotone coupling, which parabolic data alone does not determine; the
/// characters meeting at crossings add sum n T[j][k] k / r to band degrees and
/// parabolic_crossing_term to ch2.
OrbSheaf parabolic_to_orb(const RootStackPtr& rs, const ParabolicSheaf& p);

/// sum over crossings n * sum_{j,k} T[j][k] j k / r^2 for the coupled tables;
/// zero when no two weighted components meet.
Rat parabolic_crossing_term(const RootStackModel& rs, const ParabolicSheaf& p);

/// Inverse of parabolic_to_orb on its image; weights are the nonzero
/// characters that occur. Throws InconsistentSectorData when the bands do
/// not match c1.
ParabolicSheaf orb_to_parabolic(const OrbSheaf& w);

/// Direct sum over the same (X, D); c2 needs the base intersection form.
ParabolicSheaf parabolic_direct_sum(const SurfaceModel& s, const ParabolicSheaf& a, const ParabolicSheaf& b);

}  // namespace orbisurf
