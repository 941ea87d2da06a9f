#include "orbisurf/rat_poly.hpp"

#include <algorithm>

#include "orbisurf/error.hpp"

namespace orbisurf {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rat& s, const RatPoly& p) {
  std::vector<Rat> out = p.c_;
  for (auto& x : out) x *= s;
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Rat> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rat> quot(a.c_.size() - b.c_.size() + 1);
  const Rat lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    const Rat factor = rem[i] / lead;
    quot[i - db] = factor;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.c_[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::inflate(unsigned k) const {
  if (c_.empty() || k == 1) return *this;
  std::vector<Rat> out((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
  return RatPoly(std::move(out));
}

std::string RatPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (!first) out += c.sign() < 0 ? " - " : " + ";
    const Rat mag = first ? c : abs(c);
    if (i == 0) {
      out += mag.pretty();
      continue;
    }
    if (mag == Rat(-1)) {
      out += "-";
    } else if (mag != Rat(1)) {
      out += mag.pretty() + "*";
    }
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::strong_ordering poly_compare_lex(const RatPoly& a, const RatPoly& b) {
  const int top = std::max(a.degree(), b.degree());
  for (int i = top; i >= 0; --i) {
    const auto c = a.coeff(i) <=> b.coeff(i);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  RatPoly out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatPoly basis = RatPoly::constant(1);
    Rat denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis = basis * RatPoly({-points[j].first, Rat(1)});
      denom *= points[i].first - points[j].first;
    }
    out += (points[i].second / denom) * basis;
  }
  return out;
}

}  // namespace orbisurf
