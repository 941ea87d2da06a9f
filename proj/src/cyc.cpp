#include "orbisurf/cyc.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

#include "orbisurf/error.hpp"

namespace orbisurf {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const RatPoly& cyclotomic_polynomial(unsigned n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<unsigned, RatPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 = prod_{d | n} Phi_d(x)
  RatPoly poly = RatPoly::monomial(1, n) - RatPoly::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = RatPoly::divmod(poly, cyclotomic_polynomial(d)).first;
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyc::Cyc(unsigned order) : n_(order) {
  if (order == 0) fail(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  c_.resize(euler_phi(order));
}

Cyc::Cyc(unsigned order, const Rat& value) : Cyc(order) { c_[0] = value; }

Cyc Cyc::from_poly(unsigned order, const RatPoly& poly) {
  Cyc out(order);
  const RatPoly rem = RatPoly::divmod(poly, cyclotomic_polynomial(order)).second;
  for (std::size_t i = 0; i < rem.coeffs().size(); ++i) out.c_[i] = rem.coeffs()[i];
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Cyc Cyc::lift(unsigned m) const {
  if (m % n_ != 0) fail(ErrorCode::InvalidArgument, "cannot lift Q(zeta_" + std::to_string(n_) +
                                                        ") into Q(zeta_" + std::to_string(m) + ")");
  if (m == n_) return *this;
  return from_poly(m, as_poly().inflate(m / n_));
}

Cyc Cyc::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero in cyclotomic field");
  // Extended Euclid: s*a + t*Phi = g with g a nonzero constant since Phi is irreducible.
  RatPoly r0 = cyclotomic_polynomial(n_), r1 = as_poly();
  RatPoly s0, s1 = RatPoly::constant(1);
  while (r1.degree() > 0) {
    auto [q, rem] = RatPoly::divmod(r0, r1);
    RatPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return from_poly(n_, (Rat(1) / r1.leading()) * s1);
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

namespace {

unsigned common_order(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

Cyc& Cyc::operator+=(const Cyc& o) {
  const unsigned m = common_order(n_, o.n_);
  if (m != n_) *this = lift(m);
  const Cyc rhs = o.lift(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  const unsigned m = common_order(n_, o.n_);
  *this = from_poly(m, lift(m).as_poly() * o.lift(m).as_poly());
  return *this;
}

Cyc operator*(const Rat& s, Cyc a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

bool operator==(const Cyc& a, const Cyc& b) {
  const unsigned m = common_order(a.n_, b.n_);
  return a.lift(m).c_ == b.lift(m).c_;
}

std::string Cyc::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].pretty();
    if (i > 0) out += "*z" + std::to_string(n_) + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out.empty() ? "0" : out;
}

Cyc cyc_root(unsigned n, long k) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  const long e = ((k % static_cast<long>(n)) + n) % n;
  return Cyc::from_poly(n, RatPoly::monomial(1, static_cast<std::size_t>(e)));
}

Rat cyc_to_rat(const Cyc& z) {
  if (!z.is_rational()) fail(ErrorCode::NotRational, "cyclotomic value " + z.str() + " is not rational");
  return z.coeffs()[0];
}

std::ostream& operator<<(std::ostream& os, const Cyc& z) { return os << z.str(); }

}  // namespace orbisurf
