#include "orbisurf/orb_sheaf.hpp"

#include <algorithm>
#include <numeric>

#include "orbisurf/error.hpp"

namespace orbisurf {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

long mod_from_rat(const Rat& a, long m) {
  const mpz_class n = a.num() % m;
  return mod(n.get_si(), m);
}

void require_same_model(const OrbSheaf& a, const OrbSheaf& b) {
  if (a.model() != b.model()) fail(ErrorCode::ModelMismatch, "sheaves live on different root stacks");
}

Rat restriction_degree(const RootStackModel& rs, const StackyClass& c1, std::size_t lambda) {
  return Rat(rs.r()) * stacky_intersect(rs, c1, rs.root_class(lambda));
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::vector<long>> monotone_coupling(const std::vector<long>& rows, const std::vector<long>& cols) {
  std::vector<std::vector<long>> table(rows.size(), std::vector<long>(cols.size(), 0));
  std::vector<long> row_left = rows, col_left = cols;
  std::size_t i = 0, j = 0;
  while (i < rows.size() && j < cols.size()) {
    const long take = std::min(row_left[i], col_left[j]);
    table[i][j] += take;
    row_left[i] -= take;
    col_left[j] -= take;
    if (row_left[i] == 0) ++i;
    if (j < cols.size() && col_left[j] == 0) ++j;
  }
  return table;
}

OrbSheaf::OrbSheaf(RootStackPtr model, long rank, StackyClass c1, Rat c2int, std::vector<CurveBands> curves,
                   std::map<CrossingKey, PointBands> points)
    : model_(std::move(model)), rank_(rank), c1_(std::move(c1)), c2_(std::move(c2int)),
      curves_(std::move(curves)), points_(std::move(points)) {
  if (!model_) fail(ErrorCode::InvalidArgument, "sheaf without a root stack model");
  const auto& rs = *model_;
  const auto r = static_cast<std::size_t>(rs.r());
  if (rank_ <= 0) fail(ErrorCode::InvalidArgument, "torsion-free model needs positive rank");
  if (c1_.base.size() != static_cast<std::size_t>(rs.base().rho()) || c1_.stacky.size() != rs.branch_count()) {
    fail(ErrorCode::DimensionMismatch, "c1 does not match the root stack lattice");
  }
  if (curves_.size() != rs.branch_count()) fail(ErrorCode::MissingSectorData, "sector data missing for some branch curve");
  for (std::size_t l = 0; l < curves_.size(); ++l) {
    const auto& bands = curves_[l];
    const auto& name = rs.branch()[l].name;
    if (bands.ranks.size() != r || bands.degrees.size() != r) {
      fail(ErrorCode::InconsistentSectorData, "curve " + name + " needs " + std::to_string(r) + " character bands");
    }
    long total = 0;
    Rat degree;
    for (std::size_t j = 0; j < r; ++j) {
      if (bands.ranks[j] < 0) fail(ErrorCode::InconsistentSectorData, "negative eigenrank on curve " + name);
      if (bands.ranks[j] == 0 && !bands.degrees[j].is_zero()) {
        fail(ErrorCode::InconsistentSectorData, "empty character band with nonzero degree on curve " + name);
      }
      total += bands.ranks[j];
      degree += bands.degrees[j];
    }
    if (total != rank_) fail(ErrorCode::InconsistentSectorData, "eigenranks on curve " + name + " do not sum to the rank");
    if (degree != restriction_degree(rs, c1_, l)) {
      fail(ErrorCode::InconsistentSectorData, "eigendegrees on curve " + name + " sum to " + degree.pretty() +
                                                  ", but c1 restricts with degree " +
                                                  restriction_degree(rs, c1_, l).pretty());
    }
  }
  for (std::size_t l = 0; l < rs.branch_count(); ++l) {
    for (std::size_t m = l + 1; m < rs.branch_count(); ++m) {
      if (rs.crossing(l, m) == 0) continue;
      auto it = points_.find({l, m});
      if (it == points_.end()) fail(ErrorCode::MissingSectorData, "no crossing data for " + rs.branch()[l].name + ", " + rs.branch()[m].name);
      const auto& table = it->second.ranks;
      if (table.size() != r) fail(ErrorCode::InconsistentSectorData, "crossing table has wrong size");
      std::vector<long> col(r, 0);
      for (std::size_t a = 0; a < r; ++a) {
        if (table[a].size() != r) fail(ErrorCode::InconsistentSectorData, "crossing table has wrong size");
        long row = 0;
        for (std::size_t b = 0; b < r; ++b) {
          if (table[a][b] < 0) fail(ErrorCode::InconsistentSectorData, "negative eigenrank at a crossing");
          row += table[a][b];
          col[b] += table[a][b];
        }
        if (row != curves_[l].ranks[a]) fail(ErrorCode::InconsistentSectorData, "crossing table disagrees with curve bands");
      }
      if (col != curves_[m].ranks) fail(ErrorCode::InconsistentSectorData, "crossing table disagrees with curve bands");
    }
  }
  for (const auto& [key, table] : points_) {
    if (key.first >= key.second || key.second >= rs.branch_count() || rs.crossing(key.first, key.second) == 0) {
      fail(ErrorCode::InconsistentSectorData, "crossing data for a pair of curves that do not meet");
    }
  }
}

OrbSheaf OrbSheaf::with_coupled_points(RootStackPtr model, long rank, StackyClass c1, Rat c2int,
                                       std::vector<CurveBands> curves) {
  std::map<CrossingKey, PointBands> points;
  const auto& rs = *model;
  if (curves.size() == rs.branch_count()) {
    for (std::size_t l = 0; l < rs.branch_count(); ++l) {
      for (std::size_t m = l + 1; m < rs.branch_count(); ++m) {
        if (rs.crossing(l, m) == 0) continue;
        points[{l, m}] = PointBands{monotone_coupling(curves[l].ranks, curves[m].ranks)};
      }
    }
  }
  return OrbSheaf(std::move(model), rank, std::move(c1), std::move(c2int), std::move(curves), std::move(points));
}

SectorRestriction OrbSheaf::restriction(const Sector& sector) const {
  const long r = model_->r();
  SectorRestriction out;
  out.kind = sector.kind;
  switch (sector.kind) {
    case SectorKind::Untwisted:
      out.eigenranks = {rank_};
      break;
    case SectorKind::Curve: {
      out.eigenranks.assign(r, 0);
      out.eigendegrees.assign(r, Rat(0));
      const auto& bands = curves_.at(sector.lambda);
      for (long j = 0; j < r; ++j) {
        const long f = mod(j * sector.k1, r);
        out.eigenranks[f] += bands.ranks[j];
        out.eigendegrees[f] += bands.degrees[j];
      }
      break;
    }
    case SectorKind::Point: {
      out.eigenranks.assign(r, 0);
      const auto& table = points_.at({static_cast<std::size_t>(sector.lambda), static_cast<std::size_t>(sector.mu)}).ranks;
      out.pair_ranks = table;
      for (long a = 0; a < r; ++a) {
        for (long b = 0; b < r; ++b) out.eigenranks[mod(a * sector.k1 + b * sector.k2, r)] += table[a][b];
      }
      break;
    }
  }
  return out;
}

Rat OrbSheaf::ch2() const {
  return stacky_intersect(*model_, c1_, c1_) / Rat(2) - c2_;
}

bool operator==(const OrbSheaf& a, const OrbSheaf& b) {
  return a.model_ == b.model_ && a.rank_ == b.rank_ && a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.curves_ == b.curves_ &&
         a.points_ == b.points_;
}

OrbSheaf line_bundle(const RootStackPtr& rs, const StackyClass& c1) {
  if (!c1.stacky_integral()) fail(ErrorCode::NonIntegralTwist, "line bundle needs integral coefficients of D~");
  const long r = rs->r();
  std::vector<CurveBands> curves;
  std::vector<long> chars;
  for (std::size_t l = 0; l < rs->branch_count(); ++l) {
    CurveBands bands{std::vector<long>(r, 0), std::vector<Rat>(r)};
    const long j = mod_from_rat(c1.stacky[l], r);
    chars.push_back(j);
    bands.ranks[j] = 1;
    bands.degrees[j] = restriction_degree(*rs, c1, l);
    curves.push_back(std::move(bands));
  }
  std::map<CrossingKey, PointBands> points;
  for (std::size_t l = 0; l < rs->branch_count(); ++l) {
    for (std::size_t m = l + 1; m < rs->branch_count(); ++m) {
      if (rs->crossing(l, m) == 0) continue;
      PointBands table{std::vector<std::vector<long>>(r, std::vector<long>(r, 0))};
      table.ranks[chars[l]][chars[m]] = 1;
      points[{l, m}] = std::move(table);
    }
  }
  return OrbSheaf(rs, 1, c1, Rat(0), std::move(curves), std::move(points));
}

OrbSheaf structure_sheaf(const RootStackPtr& rs) { return line_bundle(rs, rs->zero_class()); }

OrbSheaf direct_sum(const OrbSheaf& a, const OrbSheaf& b) {
  require_same_model(a, b);
  const auto& rs = *a.model();
  std::vector<CurveBands> curves = a.curves();
  for (std::size_t l = 0; l < curves.size(); ++l) {
    for (std::size_t j = 0; j < curves[l].ranks.size(); ++j) {
      curves[l].ranks[j] += b.curves()[l].ranks[j];
      curves[l].degrees[j] += b.curves()[l].degrees[j];
    }
  }
  auto points = a.points();
  for (auto& [key, table] : points) {
    const auto& other = b.points().at(key).ranks;
    for (std::size_t i = 0; i < table.ranks.size(); ++i) {
      for (std::size_t j = 0; j < table.ranks[i].size(); ++j) table.ranks[i][j] += other[i][j];
    }
  }
  const Rat c2 = a.c2int() + b.c2int() + stacky_intersect(rs, a.c1(), b.c1());
  return OrbSheaf(a.model(), a.rank() + b.rank(), a.c1() + b.c1(), c2, std::move(curves), std::move(points));
}

OrbSheaf tensor(const OrbSheaf& e, const OrbSheaf& f) {
  require_same_model(e, f);
  const auto& rs = *e.model();
  const long r = rs.r();
  const Rat re(e.rank()), rf(f.rank());
  const StackyClass c1 = rf * e.c1() + re * f.c1();
  const Rat ch2 = rf * e.ch2() + stacky_intersect(rs, e.c1(), f.c1()) + re * f.ch2();
  const Rat c2 = stacky_intersect(rs, c1, c1) / Rat(2) - ch2;

  std::vector<CurveBands> curves;
  for (std::size_t l = 0; l < rs.branch_count(); ++l) {
    const auto& be = e.curves()[l];
    const auto& bf = f.curves()[l];
    CurveBands out{std::vector<long>(r, 0), std::vector<Rat>(r)};
    for (long a = 0; a < r; ++a) {
      for (long b = 0; b < r; ++b) {
        const long j = mod(a + b, r);
        out.ranks[j] += be.ranks[a] * bf.ranks[b];
        out.degrees[j] += Rat(bf.ranks[b]) * be.degrees[a] + Rat(be.ranks[a]) * bf.degrees[b];
      }
    }
    curves.push_back(std::move(out));
  }
  std::map<CrossingKey, PointBands> points;
  for (const auto& [key, te] : e.points()) {
    const auto& tf = f.points().at(key).ranks;
    PointBands out{std::vector<std::vector<long>>(r, std::vector<long>(r, 0))};
    for (long a = 0; a < r; ++a)
      for (long b = 0; b < r; ++b) {
        if (te.ranks[a][b] == 0) continue;
        for (long c = 0; c < r; ++c)
          for (long d = 0; d < r; ++d) out.ranks[mod(a + c, r)][mod(b + d, r)] += te.ranks[a][b] * tf[c][d];
      }
    points[key] = std::move(out);
  }
  return OrbSheaf(e.model(), e.rank() * f.rank(), c1, c2, std::move(curves), std::move(points));
}

OrbSheaf twist(const OrbSheaf& e, const StackyClass& l) {
  return tensor(e, line_bundle(e.model(), l));
}

OrbSheaf dual(const OrbSheaf& e) {
  const long r = e.model()->r();
  std::vector<CurveBands> curves;
  for (const auto& bands : e.curves()) {
    CurveBands out{std::vector<long>(r, 0), std::vector<Rat>(r)};
    for (long j = 0; j < r; ++j) {
      out.ranks[mod(-j, r)] = bands.ranks[j];
      out.degrees[mod(-j, r)] = -bands.degrees[j];
    }
    curves.push_back(std::move(out));
  }
  std::map<CrossingKey, PointBands> points;
  for (const auto& [key, table] : e.points()) {
    PointBands out{std::vector<std::vector<long>>(r, std::vector<long>(r, 0))};
    for (long a = 0; a < r; ++a)
      for (long b = 0; b < r; ++b) out.ranks[mod(-a, r)][mod(-b, r)] = table.ranks[a][b];
    points[key] = std::move(out);
  }
  return OrbSheaf(e.model(), e.rank(), -e.c1(), e.c2int(), std::move(curves), std::move(points));
}

OrbSheaf frobenius_pullback(const OrbSheaf& e, long p, unsigned n, bool fixed_characters) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "Frobenius characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) fail(ErrorCode::InvalidArgument, "Frobenius power must be positive");
  const long r = e.model()->r();
  if (r % p == 0) {
    fail(ErrorCode::WildCharacteristic, "characteristic " + std::to_string(p) + " divides the root order " + std::to_string(r));
  }
  const Rat q = pow(Rat(p), n);
  long q_mod = 1;
  for (unsigned i = 0; i < n; ++i) q_mod = mod(q_mod * p, r);
  const long step = fixed_characters ? 1 : q_mod;

  std::vector<CurveBands> curves;
  for (const auto& bands : e.curves()) {
    CurveBands out{std::vector<long>(r, 0), std::vector<Rat>(r)};
    for (long j = 0; j < r; ++j) {
      out.ranks[mod(j * step, r)] += bands.ranks[j];
      out.degrees[mod(j * step, r)] += q * bands.degrees[j];
    }
    curves.push_back(std::move(out));
  }
  std::map<CrossingKey, PointBands> points;
  for (const auto& [key, table] : e.points()) {
    PointBands out{std::vector<std::vector<long>>(r, std::vector<long>(r, 0))};
    for (long a = 0; a < r; ++a)
      for (long b = 0; b < r; ++b) out.ranks[mod(a * step, r)][mod(b * step, r)] += table.ranks[a][b];
    points[key] = std::move(out);
  }
  return OrbSheaf(e.model(), e.rank(), q * e.c1(), q * q * e.c2int(), std::move(curves), std::move(points));
}

bool is_generating(const OrbSheaf& sheaf) {
  for (const auto& bands : sheaf.curves()) {
    if (std::any_of(bands.ranks.begin(), bands.ranks.end(), [](long l) { return l < 1; })) return false;
  }
  return true;
}

GeneratingSheafData::GeneratingSheafData(OrbSheaf sheaf) : sheaf_(std::move(sheaf)) {
  if (!is_generating(sheaf_)) {
    fail(ErrorCode::InvalidArgument, "sheaf misses a character on some branch gerbe, so it is not generating");
  }
}

GeneratingSheafData default_generating_sheaf(const RootStackPtr& rs) {
  StackyClass all = rs->zero_class();
  for (auto& a : all.stacky) a = Rat(1);
  OrbSheaf xi = structure_sheaf(rs);
  for (int i = 1; i < rs->r(); ++i) xi = direct_sum(xi, line_bundle(rs, Rat(i) * all));
  return GeneratingSheafData(std::move(xi));
}

bool condition_star_check(const OrbSheaf& xi) {
  for (const auto& bands : xi.curves()) {
    if (std::adjacent_find(bands.ranks.begin(), bands.ranks.end(), std::not_equal_to<>()) != bands.ranks.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace orbisurf
