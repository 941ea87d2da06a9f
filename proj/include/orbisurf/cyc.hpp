#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "orbisurf/rat.hpp"
#include "orbisurf/rat_poly.hpp"

namespace orbisurf {

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// The n-th cyclotomic polynomial, cached per order.
const RatPoly& cyclotomic_polynomial(unsigned n);

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// 1, zeta_n, ..., zeta_n^(phi(n)-1) reduced modulo Phi_n. The representation
/// is unique, so equality is exact. Binary operations on elements of
/// different orders promote both sides to the lcm order.
class Cyc {
public:
  /// Zero of Q(zeta_1) = Q.
  Cyc() : Cyc(1) {}
  explicit Cyc(unsigned order);
  Cyc(unsigned order, const Rat& value);
  /// Reduces an arbitrary polynomial in zeta_n.
  static Cyc from_poly(unsigned order, const RatPoly& poly);

  unsigned order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Cyc inverse() const;
  /// Re-expresses this element in Q(zeta_m); requires order() | m.
  Cyc lift(unsigned m) const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o) { return *this *= o.inverse(); }
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend Cyc operator*(const Rat& s, Cyc a);

  friend bool operator==(const Cyc& a, const Cyc& b);

  std::string str() const;

private:
  Cyc(unsigned order, std::vector<Rat> coeffs) : n_(order), c_(std::move(coeffs)) {}
  RatPoly as_poly() const { return RatPoly(c_); }

  unsigned n_;
  std::vector<Rat> c_;
};

/// zeta_n^(k mod n).
Cyc cyc_root(unsigned n, long k);

/// The rational value of z; throws Error(NotRational) when z is not in Q.
Rat cyc_to_rat(const Cyc& z);

std::ostream& operator<<(std::ostream& os, const Cyc& z);

}  // namespace orbisurf
