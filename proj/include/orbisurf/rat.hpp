#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbisurf {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
class Rat {
public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Rat(long long value);           // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpq_class& value) : v_(value) { v_.canonicalize(); }
  explicit Rat(const mpz_class& value) : v_(value) {}

  /// Parses "a", "-a" or "a/b". Throws Error(SyntaxError) on malformed text
  /// and Error(DivisionByZero) on a zero denominator.
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  mpz_class floor() const;
  mpz_class ceil() const;
  /// Converts to int64; throws if not an integer or out of range.
  std::int64_t to_int64() const;

  /// Canonical "a/b" form (denominator always printed).
  std::string str() const;
  /// Short form: "a" for integers, "a/b" otherwise.
  std::string pretty() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

Rat abs(const Rat& x);
Rat pow(const Rat& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace orbisurf
