#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbisurf/surface.hpp"

namespace orbisurf {

/// Divisor class on the root stack: a pulled-back part plus coefficients of
/// the stacky classes D~_lambda (one per branch component, in branch order),
/// where pi^* D_lambda = r * D~_lambda.
struct StackyClass {
  DivClass base;
  std::vector<Rat> stacky;

  static StackyClass zero(std::size_t rho, std::size_t branches) {
    return {DivClass::zero(rho), std::vector<Rat>(branches)};
  }
  static StackyClass pullback(DivClass c, std::size_t branches) {
    return {std::move(c), std::vector<Rat>(branches)};
  }

  bool stacky_integral() const;

  StackyClass& operator+=(const StackyClass& o);
  StackyClass operator-() const;
  friend StackyClass operator+(StackyClass a, const StackyClass& b) { return a += b; }
  friend StackyClass operator-(StackyClass a, const StackyClass& b) { return a += -b; }
  friend StackyClass operator*(const Rat& s, StackyClass a);
  friend bool operator==(const StackyClass&, const StackyClass&) = default;
};

enum class SectorKind { Untwisted, Curve, Point };

/// One component of the inertia stack. Curve sectors are the mu_r-gerbes over
/// a branch curve twisted by zeta^k; point sectors sit over the crossing points
/// of two branch curves with stabilizer element (zeta^k1, zeta^k2).
struct Sector {
  SectorKind kind = SectorKind::Untwisted;
  int lambda = -1;
  int mu = -1;
  int k1 = 0;
  int k2 = 0;
  long multiplicity = 1;  // number of crossing points for point sectors
  Rat weight{1};          // integration weight per point / per coarse degree

  std::string label(const std::vector<std::string>& names) const;
  friend bool operator==(const Sector&, const Sector&) = default;
};

struct BranchComponent {
  std::string name;
  DivClass cls;
};

/// The r-th root stack of a surface along a simple normal crossing divisor,
/// modeled numerically.
class RootStackModel {
public:
  using Crossings = std::map<std::pair<std::string, std::string>, Rat>;

  /// Throws UnknownDivisor, NegativeCrossing, InvalidArgument.
  static std::shared_ptr<const RootStackModel> build(SurfaceModel base, int r,
                                                     const std::vector<std::string>& branch,
                                                     const Crossings& crossings = {});

  const SurfaceModel& base() const { return base_; }
  int r() const { return r_; }
  std::size_t branch_count() const { return branch_.size(); }
  const std::vector<BranchComponent>& branch() const { return branch_; }
  std::vector<std::string> branch_names() const;
  /// Index of the named branch component; throws UnknownDivisor.
  std::size_t index_of(const std::string& name) const;
  /// Number of transverse crossing points of components i and j.
  long crossing(std::size_t i, std::size_t j) const;
  /// Total crossing points on component i.
  long crossings_on(std::size_t i) const;
  const std::vector<Sector>& sectors() const { return sectors_; }

  /// The class as an element of Num(X) tensor Q (D~ = D / r).
  DivClass numeric(const StackyClass& c) const;
  StackyClass zero_class() const { return StackyClass::zero(base_.rho(), branch_.size()); }
  StackyClass pullback(const DivClass& c) const { return StackyClass::pullback(c, branch_.size()); }
  /// The class D~_lambda.
  StackyClass root_class(std::size_t lambda) const;

  /// K of the stack: pi^*K + (r-1) sum D~_lambda.
  StackyClass canonical_class() const;
  /// Integral of c2 of the tangent bundle of the stack, or nullopt without an
  /// Euler number on the base.
  std::optional<Rat> tangent_c2() const;
  /// Degree of the tangent bundle of the gerbe over D_lambda, measured on the
  /// coarse curve: 2 - 2g minus the orbifold-point correction at crossings.
  Rat gerbe_tangent_degree(std::size_t lambda) const;
  /// Degree of the normal bundle O(D~_lambda) restricted to the gerbe, on the coarse curve.
  Rat gerbe_normal_degree(std::size_t lambda) const;

private:
  explicit RootStackModel(SurfaceModel base) : base_(std::move(base)) {}

  SurfaceModel base_;
  int r_ = 1;
  std::vector<BranchComponent> branch_;
  std::vector<std::vector<long>> crossings_;
  std::vector<Sector> sectors_;
};

using RootStackPtr = std::shared_ptr<const RootStackModel>;

inline RootStackPtr build_root_stack(SurfaceModel base, int r, const std::vector<std::string>& branch,
                                     const RootStackModel::Crossings& crossings = {}) {
  return RootStackModel::build(std::move(base), r, branch, crossings);
}

/// Intersection on the root stack, bilinear with D~.D~ = D.D / r^2 and
/// D~.pi^*c = D.c / r.
Rat stacky_intersect(const RootStackModel& rs, const StackyClass& a, const StackyClass& b);

}  // namespace orbisurf
