#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "orbisurf/rat.hpp"

namespace orbisurf {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly constant(const Rat& c) { return RatPoly({c}); }
  static RatPoly monomial(const Rat& c, std::size_t degree);

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^i (zero beyond the degree).
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly operator-() const;
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& s, const RatPoly& p);

  /// Euclidean division: returns (q, r) with a = q*b + r, deg r < deg b.
  static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

  /// Substitutes x -> x^k.
  RatPoly inflate(unsigned k) const;

  /// Human form in the variable `var`, highest degree first, e.g. "1/2*m^2 + 3/2*m + 1".
  std::string str(const std::string& var = "m") const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
  void trim();
  std::vector<Rat> c_;
};

/// Asymptotic comparison: a < b iff a(m) < b(m) for all m >> 0. Compares
/// coefficients from the highest degree down.
std::strong_ordering poly_compare_lex(const RatPoly& a, const RatPoly& b);

/// Unique polynomial of degree < points.size() through the given (x, y) points.
RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace orbisurf
