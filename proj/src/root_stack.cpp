#include "orbisurf/root_stack.hpp"

#include <set>

#include "orbisurf/error.hpp"

namespace orbisurf {

bool StackyClass::stacky_integral() const {
  for (const auto& a : stacky) {
    if (!a.is_integer()) return false;
  }
  return true;
}

StackyClass& StackyClass::operator+=(const StackyClass& o) {
  base += o.base;
  if (stacky.size() != o.stacky.size()) fail(ErrorCode::DimensionMismatch, "stacky classes over different branch sets");
  for (std::size_t i = 0; i < stacky.size(); ++i) stacky[i] += o.stacky[i];
  return *this;
}

StackyClass StackyClass::operator-() const {
  StackyClass out{-base, stacky};
  for (auto& a : out.stacky) a = -a;
  return out;
}

StackyClass operator*(const Rat& s, StackyClass a) {
  a.base = s * a.base;
  for (auto& x : a.stacky) x *= s;
  return a;
}

std::string Sector::label(const std::vector<std::string>& names) const {
  switch (kind) {
    case SectorKind::Untwisted: return "untwisted";
    case SectorKind::Curve: return "curve(" + names.at(lambda) + "," + std::to_string(k1) + ")";
    case SectorKind::Point:
      return "point(" + names.at(lambda) + "," + names.at(mu) + "," + std::to_string(k1) + "," +
             std::to_string(k2) + ")x" + std::to_string(multiplicity);
  }
  return "?";
}

RootStackPtr RootStackModel::build(SurfaceModel base, int r, const std::vector<std::string>& branch,
                                   const Crossings& crossings) {
  if (r < 1) fail(ErrorCode::InvalidArgument, "root order must be at least 1");
  std::shared_ptr<RootStackModel> rs(new RootStackModel(std::move(base)));
  rs->r_ = r;
  std::set<std::string> seen;
  for (const auto& name : branch) {
    if (!seen.insert(name).second) fail(ErrorCode::InvalidArgument, "branch component '" + name + "' listed twice");
    rs->branch_.push_back({name, rs->base_.divisor(name)});
  }
  const std::size_t h = rs->branch_.size();
  rs->crossings_.assign(h, std::vector<long>(h, 0));
  for (const auto& [pair, n] : crossings) {
    if (!seen.count(pair.first)) fail(ErrorCode::UnknownDivisor, "crossing names unknown component '" + pair.first + "'");
    if (!seen.count(pair.second)) fail(ErrorCode::UnknownDivisor, "crossing names unknown component '" + pair.second + "'");
    if (pair.first == pair.second) fail(ErrorCode::InvalidArgument, "crossing of a component with itself");
  }
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i + 1; j < h; ++j) {
      const Rat product = rs->base_.intersect(rs->branch_[i].cls, rs->branch_[j].cls);
      Rat n = product;
      const auto& a = rs->branch_[i].name;
      const auto& b = rs->branch_[j].name;
      if (auto it = crossings.find({a, b}); it != crossings.end()) {
        n = it->second;
      } else if (auto it2 = crossings.find({b, a}); it2 != crossings.end()) {
        n = it2->second;
      }
      if (n.sign() < 0) fail(ErrorCode::NegativeCrossing, "negative crossing count for " + a + ", " + b);
      if (!n.is_integer()) fail(ErrorCode::InvalidArgument, "crossing count for " + a + ", " + b + " is not an integer");
      if (n != product) {
        fail(ErrorCode::InvalidArgument, "crossing count " + n.pretty() + " for " + a + ", " + b +
                                             " differs from the intersection number " + product.pretty() +
                                             " (non-transverse)");
      }
      rs->crossings_[i][j] = rs->crossings_[j][i] = static_cast<long>(n.to_int64());
    }
  }

  rs->sectors_.push_back(Sector{});
  for (std::size_t l = 0; l < h; ++l) {
    for (int k = 1; k < r; ++k) {
      Sector s;
      s.kind = SectorKind::Curve;
      s.lambda = static_cast<int>(l);
      s.k1 = k;
      s.weight = Rat(1, r);
      rs->sectors_.push_back(s);
    }
  }
  for (std::size_t l = 0; l < h; ++l) {
    for (std::size_t m = l + 1; m < h; ++m) {
      if (rs->crossings_[l][m] == 0) continue;
      for (int k1 = 1; k1 < r; ++k1) {
        for (int k2 = 1; k2 < r; ++k2) {
          Sector s;
          s.kind = SectorKind::Point;
          s.lambda = static_cast<int>(l);
          s.mu = static_cast<int>(m);
          s.k1 = k1;
          s.k2 = k2;
          s.multiplicity = rs->crossings_[l][m];
          s.weight = Rat(1, static_cast<long>(r) * r);
          rs->sectors_.push_back(s);
        }
      }
    }
  }
  return rs;
}

std::vector<std::string> RootStackModel::branch_names() const {
  std::vector<std::string> out;
  for (const auto& b : branch_) out.push_back(b.name);
  return out;
}

std::size_t RootStackModel::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < branch_.size(); ++i) {
    if (branch_[i].name == name) return i;
  }
  fail(ErrorCode::UnknownDivisor, "'" + name + "' is not a branch component");
}

long RootStackModel::crossing(std::size_t i, std::size_t j) const { return crossings_.at(i).at(j); }

long RootStackModel::crossings_on(std::size_t i) const {
  long total = 0;
  for (long n : crossings_.at(i)) total += n;
  return total;
}

DivClass RootStackModel::numeric(const StackyClass& c) const {
  if (c.stacky.size() != branch_.size()) fail(ErrorCode::DimensionMismatch, "stacky class has wrong number of branch coefficients");
  DivClass out = c.base;
  for (std::size_t i = 0; i < branch_.size(); ++i) {
    if (c.stacky[i].is_zero()) continue;
    out += (c.stacky[i] / Rat(r_)) * branch_[i].cls;
  }
  return out;
}

StackyClass RootStackModel::root_class(std::size_t lambda) const {
  StackyClass c = zero_class();
  c.stacky.at(lambda) = Rat(1);
  return c;
}

StackyClass RootStackModel::canonical_class() const {
  StackyClass k = pullback(base_.K());
  for (auto& a : k.stacky) a = Rat(r_ - 1);
  return k;
}

std::optional<Rat> RootStackModel::tangent_c2() const {
  if (!base_.euler_number()) return std::nullopt;
  // c(T) = c(T_X) * prod_lambda (1 + D~_lambda) / (1 + D_lambda)
  const Rat defect = Rat(1) - Rat(1, r_);
  Rat c2 = *base_.euler_number();
  for (std::size_t i = 0; i < branch_.size(); ++i) {
    const auto& d = branch_[i].cls;
    c2 += defect * (base_.intersect(base_.K(), d) + base_.intersect(d, d));
    for (std::size_t j = i + 1; j < branch_.size(); ++j) c2 += defect * defect * Rat(crossings_[i][j]);
  }
  return c2;
}

Rat RootStackModel::gerbe_tangent_degree(std::size_t lambda) const {
  const auto& d = branch_.at(lambda).cls;
  const Rat coarse = -base_.intersect(base_.K(), d) - base_.intersect(d, d);
  return coarse - (Rat(1) - Rat(1, r_)) * Rat(crossings_on(lambda));
}

Rat RootStackModel::gerbe_normal_degree(std::size_t lambda) const {
  const auto& d = branch_.at(lambda).cls;
  return base_.intersect(d, d) / Rat(r_);
}

Rat stacky_intersect(const RootStackModel& rs, const StackyClass& a, const StackyClass& b) {
  return rs.base().intersect(rs.numeric(a), rs.numeric(b));
}

}  // namespace orbisurf
