#include "orbisurf/rat.hpp"

#include <cctype>
#include <ostream>

#include "orbisurf/error.hpp"

namespace orbisurf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long long value) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
  v_ = static_cast<long>(value);
}

Rat::Rat(long num, long den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rat(mpq_class(n, d));
}

mpz_class Rat::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rat::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::int64_t Rat::to_int64() const {
  if (!is_integer()) fail(ErrorCode::InvalidArgument, "expected an integer, got " + str());
  const mpz_class n = v_.get_num();
  if (!n.fits_slong_p()) fail(ErrorCode::InvalidArgument, "integer out of range: " + str());
  return n.get_si();
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::pretty() const {
  return is_integer() ? v_.get_num().get_str() : str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

Rat pow(const Rat& base, unsigned exponent) {
  Rat out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.pretty(); }

}  // namespace orbisurf
