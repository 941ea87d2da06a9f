#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbisurf/rat.hpp"

namespace orbisurf {

/// Class in Num(X) tensor Q, in the coordinates of a SurfaceModel basis.
struct DivClass {
  std::vector<Rat> coords;

  DivClass() = default;
  explicit DivClass(std::vector<Rat> c) : coords(std::move(c)) {}
  static DivClass zero(std::size_t rho) { return DivClass(std::vector<Rat>(rho)); }

  std::size_t size() const { return coords.size(); }
  bool is_zero() const;

  DivClass& operator+=(const DivClass& o);
  DivClass& operator-=(const DivClass& o);
  DivClass operator-() const;
  friend DivClass operator+(DivClass a, const DivClass& b) { return a += b; }
  friend DivClass operator-(DivClass a, const DivClass& b) { return a -= b; }
  friend DivClass operator*(const Rat& s, DivClass a);
  friend bool operator==(const DivClass&, const DivClass&) = default;

  /// "(a, b, ...)" with short rationals.
  std::string str() const;
};

using Matrix = std::vector<std::vector<Rat>>;

/// Signature (positive, negative, zero) of a symmetric rational matrix,
/// computed by exact congruence diagonalization.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signature(Matrix m);

/// Numerical model of a smooth projective surface: the intersection form on
/// Num(X), an ample polarization H, the canonical class K, optionally the
/// topological Euler number c2(T_X), and named divisor classes.
class SurfaceModel {
public:
  /// Validates and builds. Throws DimensionMismatch, BadSignature (form not of
  /// signature (1, rho-1)) or NotAmpleSquare (H.H <= 0).
  static SurfaceModel build(int rho, Matrix gram, DivClass H, DivClass K,
                            std::optional<Rat> euler_number,
                            std::map<std::string, DivClass> named_divisors);

  int rho() const { return rho_; }
  const Matrix& gram() const { return gram_; }
  const DivClass& H() const { return H_; }
  const DivClass& K() const { return K_; }
  const std::optional<Rat>& euler_number() const { return euler_; }
  const std::map<std::string, DivClass>& named_divisors() const { return named_; }
  /// Throws UnknownDivisor.
  const DivClass& divisor(const std::string& name) const;

  /// a^T * gram * b. Throws DimensionMismatch.
  Rat intersect(const DivClass& a, const DivClass& b) const;

  /// chi(O_X) by Noether's formula (K^2 + e)/12; throws MissingEulerNumber.
  Rat chi_structure_sheaf() const;

private:
  SurfaceModel() = default;

  int rho_ = 0;
  Matrix gram_;
  DivClass H_;
  DivClass K_;
  std::optional<Rat> euler_;
  std::map<std::string, DivClass> named_;
};

inline Rat intersect(const SurfaceModel& s, const DivClass& a, const DivClass& b) {
  return s.intersect(a, b);
}

}  // namespace orbisurf
