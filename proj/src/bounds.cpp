#include "orbisurf/bounds.hpp"

#include <algorithm>

#include "orbisurf/error.hpp"

namespace orbisurf {

namespace {

Rat max_slope_term(const BoundsInput& b) {
  if (b.slope_terms.empty()) fail(ErrorCode::EmptySlopeTerms, "no slope terms mu_Xi(A (x) L^k) given");
  return *std::max_element(b.slope_terms.begin(), b.slope_terms.end());
}

const Rat& need(const std::optional<Rat>& field, const char* name) {
  if (!field) fail(ErrorCode::MissingField, std::string("missing field ") + name);
  return *field;
}

mpz_class isqrt_floor(const Rat& x) {
  mpz_class out;
  mpz_sqrt(out.get_mpz_t(), mpz_class(x.floor()).get_mpz_t());
  return out;
}

}  // namespace

void validate(const BoundsInput& b) {
  if (b.p < 2) fail(ErrorCode::InvalidArgument, "characteristic must be at least 2");
  if (b.rk < 1) fail(ErrorCode::InvalidArgument, "rank must be at least 1");
  if (b.hd.sign() <= 0) fail(ErrorCode::InvalidArgument, "H^d must be positive");
}

Rat beta(const BoundsInput& b) {
  validate(b);
  const Rat t = max_slope_term(b);
  const Rat rk(b.rk);
  const Rat base = rk * (rk - Rat(1)) * t / Rat(b.p - 1);
  return base * base;
}

Rat alpha_bound(const BoundsInput& b) {
  validate(b);
  const Rat t = max_slope_term(b);
  return Rat(b.rk - 1) / Rat(b.p - 1) * t;
}

Verdict thmA3_check(const BoundsInput& b) {
  return verdict_from(b.hd * b.delta_hd2 + b.rk_xi * b.rk_xi * beta(b));
}

std::pair<Verdict, Verdict> thmA5_checks(const BoundsInput& b) {
  validate(b);
  const Rat& mu = need(b.mu, "mu");
  const Rat& l_max = need(b.l_max, "Lmax");
  const Rat& l_min = need(b.l_min, "Lmin");
  const Rat& mu_max = need(b.mu_max, "mumax");
  const Rat& mu_min = need(b.mu_min, "mumin");
  const Rat scale = Rat(b.rk) * Rat(b.rk) * b.rk_xi * b.rk_xi;
  const Rat base = b.hd * b.delta_hd2;
  return {verdict_from(base + scale * (l_max - mu) * (mu - l_min)),
          verdict_from(base + scale * (mu_max - mu) * (mu - mu_min))};
}

mpz_class restriction_threshold(const BoundsInput& b) {
  validate(b);
  if (b.rk < 2) fail(ErrorCode::RankOne, "restriction threshold needs rank at least 2");
  const Rat rk(b.rk);
  const Rat bound = (rk - Rat(1)) / rk * b.delta_hd2 + Rat(1) / (b.hd * rk * (rk - Rat(1))) +
                    (rk - Rat(1)) * beta(b) / (b.hd * rk);
  return bound.floor() + 1;
}

HiggsBound higgs_min_char(long rk, const Rat& rk_xi, const Rat& hd, const Rat& ha_d1, const Rat& m, const Rat& delta_hd2) {
  if (rk < 1) fail(ErrorCode::InvalidArgument, "rank must be at least 1");
  if (hd.sign() <= 0) fail(ErrorCode::InvalidArgument, "H^d must be positive");
  if (m.sign() < 0) fail(ErrorCode::InvalidArgument, "M must be nonnegative");
  HiggsBound out;
  const long start = std::max(rk, 2L);
  if (delta_hd2.sign() >= 0) {
    out.already_nonnegative = true;
    out.q_min = rk;
  } else {
    // need (q-1)^2 > C / |Delta|
    const Rat shift = ha_d1 / hd + m;
    const Rat c = Rat(rk) * Rat(rk) * rk_xi * rk_xi * Rat(rk - 1) * Rat(rk - 1) * shift * shift / hd;
    const mpz_class s = isqrt_floor(c / abs(delta_hd2)) + 1;
    const mpz_class q = s + 1;
    if (!q.fits_slong_p()) fail(ErrorCode::InvalidArgument, "characteristic bound does not fit in a machine integer");
    out.q_min = q < start ? start : static_cast<long>(q.get_si());
  }
  out.q_prime = std::max(out.q_min, 2L);
  while (!is_prime(out.q_prime)) ++out.q_prime;
  return out;
}

}  // namespace orbisurf
