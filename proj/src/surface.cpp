#include "orbisurf/surface.hpp"

#include <utility>

#include "orbisurf/error.hpp"

namespace orbisurf {

bool DivClass::is_zero() const {
  for (const auto& x : coords) {
    if (!x.is_zero()) return false;
  }
  return true;
}

DivClass& DivClass::operator+=(const DivClass& o) {
  if (o.size() != size()) fail(ErrorCode::DimensionMismatch, "adding divisor classes of different length");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

DivClass& DivClass::operator-=(const DivClass& o) {
  if (o.size() != size()) fail(ErrorCode::DimensionMismatch, "subtracting divisor classes of different length");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

DivClass DivClass::operator-() const {
  DivClass out = *this;
  for (auto& x : out.coords) x = -x;
  return out;
}

DivClass operator*(const Rat& s, DivClass a) {
  for (auto& x : a.coords) x *= s;
  return a;
}

std::string DivClass::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].pretty();
  }
  return out + ")";
}

Signature signature(Matrix m) {
  const std::size_t n = m.size();
  Signature sig;
  // Symmetric elimination; each step is a congruence so inertia is preserved.
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_with = n;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!m[j][j].is_zero()) { swap_with = j; break; }
      }
      if (swap_with != n) {
        std::swap(m[k], m[swap_with]);
        for (auto& row : m) std::swap(row[k], row[swap_with]);
      } else {
        std::size_t partner = n;
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!m[k][j].is_zero()) { partner = j; break; }
        }
        if (partner == n) {
          ++sig.zero;
          continue;
        }
        // row_k += row_j, col_k += col_j gives m[k][k] = 2 m[k][j].
        for (std::size_t c = 0; c < n; ++c) m[k][c] += m[partner][c];
        for (std::size_t r = 0; r < n; ++r) m[r][k] += m[r][partner];
      }
    }
    const Rat pivot = m[k][k];
    (pivot.sign() > 0 ? sig.positive : sig.negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const Rat f = m[i][k] / pivot;
      for (std::size_t c = k; c < n; ++c) m[i][c] -= f * m[k][c];
      for (std::size_t r = k; r < n; ++r) m[r][i] -= f * m[r][k];
    }
  }
  return sig;
}

SurfaceModel SurfaceModel::build(int rho, Matrix gram, DivClass H, DivClass K,
                                 std::optional<Rat> euler_number,
                                 std::map<std::string, DivClass> named_divisors) {
  if (rho < 1) fail(ErrorCode::DimensionMismatch, "Picard number must be positive");
  const auto n = static_cast<std::size_t>(rho);
  if (gram.size() != n) fail(ErrorCode::DimensionMismatch, "gram matrix must have rho rows");
  for (const auto& row : gram) {
    if (row.size() != n) fail(ErrorCode::DimensionMismatch, "gram matrix must be rho x rho");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) fail(ErrorCode::BadSignature, "gram matrix is not symmetric");
    }
  }
  if (H.size() != n) fail(ErrorCode::DimensionMismatch, "H has wrong length");
  if (K.size() != n) fail(ErrorCode::DimensionMismatch, "K has wrong length");
  for (const auto& [name, cls] : named_divisors) {
    if (cls.size() != n) fail(ErrorCode::DimensionMismatch, "divisor '" + name + "' has wrong length");
  }
  const Signature sig = signature(gram);
  if (sig != Signature{1, rho - 1, 0}) {
    fail(ErrorCode::BadSignature, "intersection form has signature (" + std::to_string(sig.positive) + ", " +
                                      std::to_string(sig.negative) + ", " + std::to_string(sig.zero) +
                                      "), expected (1, " + std::to_string(rho - 1) + ")");
  }

  SurfaceModel s;
  s.rho_ = rho;
  s.gram_ = std::move(gram);
  s.H_ = std::move(H);
  s.K_ = std::move(K);
  s.euler_ = std::move(euler_number);
  s.named_ = std::move(named_divisors);
  if (s.intersect(s.H_, s.H_).sign() <= 0) fail(ErrorCode::NotAmpleSquare, "polarization has H.H <= 0");
  return s;
}

const DivClass& SurfaceModel::divisor(const std::string& name) const {
  auto it = named_.find(name);
  if (it == named_.end()) fail(ErrorCode::UnknownDivisor, "unknown divisor '" + name + "'");
  return it->second;
}

Rat SurfaceModel::intersect(const DivClass& a, const DivClass& b) const {
  const auto n = static_cast<std::size_t>(rho_);
  if (a.size() != n || b.size() != n) {
    fail(ErrorCode::DimensionMismatch, "class length does not match Picard number " + std::to_string(rho_));
  }
  Rat acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords[i].is_zero()) continue;
    Rat row;
    for (std::size_t j = 0; j < n; ++j) row += gram_[i][j] * b.coords[j];
    acc += a.coords[i] * row;
  }
  return acc;
}

Rat SurfaceModel::chi_structure_sheaf() const {
  if (!euler_) fail(ErrorCode::MissingEulerNumber, "surface has no euler_number");
  return (intersect(K_, K_) + *euler_) / Rat(12);
}

}  // namespace orbisurf
