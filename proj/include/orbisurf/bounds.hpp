#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orbisurf/stability.hpp"

namespace orbisurf {

/// Scalar inputs of the positive characteristic bounds. In dimension d the
/// intersection numbers are passed in already evaluated: Hd = H^d and
/// DeltaHd2 = Delta(E).H^{d-2}.
struct BoundsInput {
  long p = 2;
  long rk = 1;
  Rat rk_xi{1};
  Rat hd{1};
  std::vector<Rat> slope_terms;  // mu_Xi(A (x) L^k), k = 1..m-1
  std::optional<Rat> l_max;
  std::optional<Rat> l_min;
  std::optional<Rat> mu;
  std::optional<Rat> mu_max;
  std::optional<Rat> mu_min;
  Rat delta_hd2;
};

/// Throws InvalidArgument when p < 2, rk < 1 or Hd <= 0.
void validate(const BoundsInput& b);

/// (rk (rk-1) max_k t_k / (p-1))^2. Throws EmptySlopeTerms.
Rat beta(const BoundsInput& b);

/// (rk-1)/(p-1) * max_k t_k. Throws EmptySlopeTerms.
Rat alpha_bound(const BoundsInput& b);

/// residual = Hd * DeltaHd2 + rkXi^2 * beta.
Verdict thmA3_check(const BoundsInput& b);

/// First: Hd DeltaHd2 + rk^2 rkXi^2 (Lmax - mu)(mu - Lmin);
/// second: the same with mu_max, mu_min. Throws MissingField.
std::pair<Verdict, Verdict> thmA5_checks(const BoundsInput& b);

/// Least integer m with m > (rk-1)/rk DeltaHd2 + 1/(Hd rk (rk-1)) + (rk-1) beta/(Hd rk).
/// Throws RankOne for rk = 1.
mpz_class restriction_threshold(const BoundsInput& b);

struct HiggsBound {
  bool already_nonnegative = false;
  long q_min = 0;    // least integer q >= max(rk, 2) that forces a contradiction
  long q_prime = 0;  // least prime >= q_min
};

/// For DeltaHd2 < 0: the least q >= max(rk, 2) with
/// (rk rkXi)^2 / Hd * ((rk-1)/(q-1))^2 * (HAd1/Hd + M)^2 < |DeltaHd2|.
/// For DeltaHd2 >= 0 returns q_min = rk. Throws InvalidArgument for M < 0,
/// rk < 1 or Hd <= 0.
HiggsBound higgs_min_char(long rk, const Rat& rk_xi, const Rat& hd, const Rat& ha_d1, const Rat& m, const Rat& delta_hd2);

}  // namespace orbisurf
