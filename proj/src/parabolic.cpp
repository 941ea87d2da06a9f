#include "orbisurf/parabolic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbisurf/error.hpp"

namespace orbisurf {

namespace {

long weight_numerator(const Rat& alpha, int r) {
  const Rat m = alpha * Rat(r);
  if (!m.is_integer()) {
    fail(ErrorCode::WeightDenominatorMismatch, "weight " + alpha.pretty() + " is not a multiple of 1/" + std::to_string(r));
  }
  return static_cast<long>(m.to_int64());
}

// Band ranks per branch: the piece of weight m/r sits in character m, the
// rest in character 0.
std::vector<std::vector<long>> band_ranks(const RootStackModel& rs, const ParabolicSheaf& p,
                                          const std::vector<long>& numerators) {
  std::vector<std::vector<long>> out(rs.branch_count(), std::vector<long>(rs.r(), 0));
  for (std::size_t l = 0; l < p.components.size(); ++l) {
    auto& row = out[rs.index_of(p.components[l])];
    for (std::size_t i = 0; i < numerators.size(); ++i) row[numerators[i]] += p.pieces[l][i].rank;
  }
  for (auto& row : out) {
    long used = 0;
    for (long x : row) used += x;
    row[0] += p.rank - used;
  }
  return out;
}

std::map<CrossingKey, PointBands> coupled_tables(const RootStackModel& rs, const std::vector<std::vector<long>>& ranks) {
  std::map<CrossingKey, PointBands> out;
  for (std::size_t l = 0; l < rs.branch_count(); ++l) {
    for (std::size_t m = l + 1; m < rs.branch_count(); ++m) {
      if (rs.crossing(l, m) > 0) out[{l, m}] = PointBands{monotone_coupling(ranks[l], ranks[m])};
    }
  }
  return out;
}

// Degree that the other components contribute to band j on branch l:
// sum over crossings n * sum_k T[j][k] k / r.
Rat crossing_degree(const RootStackModel& rs, const std::map<CrossingKey, PointBands>& tables, std::size_t l, long j) {
  Rat out;
  for (const auto& [key, table] : tables) {
    const bool first = key.first == l;
    if (!first && key.second != l) continue;
    const long n = rs.crossing(key.first, key.second);
    for (std::size_t k = 0; k < static_cast<std::size_t>(rs.r()); ++k) {
      const long count = first ? table.ranks[j][k] : table.ranks[k][j];
      out += Rat(n * count * static_cast<long>(k), rs.r());
    }
  }
  return out;
}

// sum over crossings n * sum T[j][k] j k / r^2
Rat crossing_ch2(const RootStackModel& rs, const std::map<CrossingKey, PointBands>& tables) {
  Rat out;
  const long r = rs.r();
  for (const auto& [key, table] : tables) {
    const long n = rs.crossing(key.first, key.second);
    for (long j = 0; j < r; ++j) {
      for (long k = 0; k < r; ++k) out += Rat(n * table.ranks[j][k] * j * k, r * r);
    }
  }
  return out;
}

}  // namespace

Rat parabolic_crossing_term(const RootStackModel& rs, const ParabolicSheaf& p) {
  validate(p);
  std::vector<long> numerators;
  for (const auto& a : p.weights) numerators.push_back(weight_numerator(a, rs.r()));
  return crossing_ch2(rs, coupled_tables(rs, band_ranks(rs, p, numerators)));
}

void validate(const ParabolicSheaf& p) {
  if (p.rank <= 0) fail(ErrorCode::InvalidArgument, "parabolic sheaf needs positive rank");
  if (p.r < 1) fail(ErrorCode::InvalidArgument, "weight denominator must be at least 1");
  for (std::size_t i = 0; i < p.weights.size(); ++i) {
    const Rat& a = p.weights[i];
    if (a.sign() < 0 || a >= Rat(1)) fail(ErrorCode::InvalidArgument, "weight " + a.pretty() + " outside [0, 1)");
    if (i > 0 && !(p.weights[i - 1] < a)) fail(ErrorCode::InvalidArgument, "weights must be strictly increasing");
    weight_numerator(a, p.r);
  }
  if (p.pieces.size() != p.components.size()) {
    fail(ErrorCode::DimensionMismatch, "one list of graded pieces is needed per component");
  }
  std::set<std::string> seen;
  for (std::size_t l = 0; l < p.components.size(); ++l) {
    const auto& name = p.components[l];
    if (!seen.insert(name).second) fail(ErrorCode::InvalidArgument, "component '" + name + "' listed twice");
    if (p.pieces[l].size() != p.weights.size()) {
      fail(ErrorCode::DimensionMismatch, "component '" + name + "' needs one graded piece per weight");
    }
    long total = 0;
    for (const auto& g : p.pieces[l]) {
      if (g.rank < 0) fail(ErrorCode::InvalidArgument, "negative graded rank on '" + name + "'");
      if (g.rank == 0 && !g.degree.is_zero()) {
        fail(ErrorCode::InvalidArgument, "graded piece of rank 0 with nonzero degree on '" + name + "'");
      }
      total += g.rank;
    }
    if (total > p.rank) fail(ErrorCode::InvalidArgument, "graded ranks on '" + name + "' exceed the rank");
  }
}

ParabolicSheaf trivial_parabolic(const RootStackModel& rs, long rank, DivClass c1E, Rat c2E) {
  ParabolicSheaf p;
  p.rank = rank;
  p.c1E = std::move(c1E);
  p.c2E = std::move(c2E);
  p.r = rs.r();
  p.components = rs.branch_names();
  p.pieces.assign(p.components.size(), {});
  return p;
}

OrbSheaf parabolic_to_orb(const RootStackPtr& rs, const ParabolicSheaf& p) {
  validate(p);
  if (p.r != rs->r()) {
    fail(ErrorCode::WeightDenominatorMismatch, "parabolic weights have denominator " + std::to_string(p.r) +
                                                   " but the root stack has r = " + std::to_string(rs->r()));
  }
  const auto& base = rs->base();
  if (p.c1E.size() != static_cast<std::size_t>(base.rho())) fail(ErrorCode::DimensionMismatch, "c1(E) has wrong length");
  const int r = rs->r();
  const Rat rr(r);

  std::vector<long> numerators;
  for (const auto& a : p.weights) numerators.push_back(weight_numerator(a, r));

  // piece lists re-indexed by branch position
  std::vector<const std::vector<GradedPiece>*> by_branch(rs->branch_count(), nullptr);
  for (std::size_t l = 0; l < p.components.size(); ++l) by_branch[rs->index_of(p.components[l])] = &p.pieces[l];
  const auto ranks = band_ranks(*rs, p, numerators);
  auto tables = coupled_tables(*rs, ranks);

  StackyClass c1 = rs->pullback(p.c1E);
  Rat ch2 = base.intersect(p.c1E, p.c1E) / Rat(2) - p.c2E + crossing_ch2(*rs, tables);
  for (std::size_t l = 0; l < rs->branch_count(); ++l) {
    if (!by_branch[l]) continue;
    const Rat self = base.intersect(rs->branch()[l].cls, rs->branch()[l].cls);
    for (std::size_t i = 0; i < numerators.size(); ++i) {
      const auto& g = (*by_branch[l])[i];
      c1.stacky[l] += Rat(numerators[i] * g.rank);
      // ch of iota_*(G (x) N^j): rank term D~, degree term c1 on the gerbe minus rank D~^2 / 2
      for (long j = 1; j <= numerators[i]; ++j) {
        const Rat on_gerbe = g.degree / rr + Rat(j * g.rank) * self / (rr * rr);
        ch2 += on_gerbe - Rat(g.rank) * self / (Rat(2) * rr * rr);
      }
    }
  }
  const Rat c2 = stacky_intersect(*rs, c1, c1) / Rat(2) - ch2;

  std::vector<CurveBands> curves;
  for (std::size_t l = 0; l < rs->branch_count(); ++l) {
    CurveBands bands{ranks[l], std::vector<Rat>(r)};
    const Rat self = base.intersect(rs->branch()[l].cls, rs->branch()[l].cls);
    Rat used_degree;
    if (by_branch[l]) {
      for (std::size_t i = 0; i < numerators.size(); ++i) {
        const auto& g = (*by_branch[l])[i];
        const Rat delta = g.degree + p.weights[i] * Rat(g.rank) * self;
        bands.degrees[numerators[i]] += delta;
        used_degree += delta;
      }
    }
    for (long j = 1; j < r; ++j) {
      const Rat extra = crossing_degree(*rs, tables, l, j);
      bands.degrees[j] += extra;
      used_degree += extra;
    }
    bands.degrees[0] = rr * stacky_intersect(*rs, c1, rs->root_class(l)) - used_degree;
    if (bands.ranks[0] == 0 && !bands.degrees[0].is_zero()) {
      fail(ErrorCode::InconsistentSectorData, "graded pieces on " + rs->branch()[l].name +
                                                  " use the full rank, so their degrees must sum to c1(E)." +
                                                  rs->branch()[l].name);
    }
    curves.push_back(std::move(bands));
  }
  return OrbSheaf(rs, p.rank, std::move(c1), c2, std::move(curves), std::move(tables));
}

ParabolicSheaf orb_to_parabolic(const OrbSheaf& w) {
  const auto& rs = *w.model();
  const auto& base = rs.base();
  const int r = rs.r();
  ParabolicSheaf p;
  p.rank = w.rank();
  p.r = r;
  p.components = rs.branch_names();

  std::vector<int> characters;
  for (int j = 1; j < r; ++j) {
    for (const auto& bands : w.curves()) {
      if (bands.ranks[j] > 0 || !bands.degrees[j].is_zero()) {
        characters.push_back(j);
        break;
      }
    }
  }
  for (int j : characters) p.weights.push_back(Rat(j, r));

  DivClass a_class = DivClass::zero(base.rho());
  for (std::size_t l = 0; l < rs.branch_count(); ++l) {
    const auto& bands = w.curves()[l];
    const auto& d = rs.branch()[l].cls;
    const Rat self = base.intersect(d, d);
    long character_sum = 0;
    std::vector<GradedPiece> pieces;
    for (int j : characters) {
      const Rat alpha(j, r);
      if (bands.ranks[j] == 0 && !bands.degrees[j].is_zero()) {
        fail(ErrorCode::InconsistentSectorData, "character band of rank 0 with nonzero degree");
      }
      pieces.push_back({bands.ranks[j], bands.degrees[j] - alpha * Rat(bands.ranks[j]) * self -
                                            crossing_degree(rs, w.points(), l, j)});
      a_class += (alpha * Rat(bands.ranks[j])) * d;
      character_sum += j * bands.ranks[j];
    }
    const Rat& a = w.c1().stacky[l];
    if (!((a - Rat(character_sum)) / Rat(r)).is_integer()) {
      fail(ErrorCode::InconsistentSectorData, "character bands on '" + rs.branch()[l].name +
                                                  "' do not match the D~ coefficient of c1");
    }
    p.pieces.push_back(std::move(pieces));
  }
  p.c1E = rs.numeric(w.c1()) - a_class;

  Rat correction;
  for (std::size_t l = 0; l < rs.branch_count(); ++l) {
    const auto& d = rs.branch()[l].cls;
    const Rat self = base.intersect(d, d);
    for (std::size_t i = 0; i < characters.size(); ++i) {
      const auto& g = p.pieces[l][i];
      const Rat& alpha = p.weights[i];
      correction += alpha * alpha * Rat(g.rank) * self / Rat(2) + alpha * g.degree;
    }
  }
  p.c2E = w.c2int() - base.intersect(p.c1E, a_class) - base.intersect(a_class, a_class) / Rat(2) + correction +
          crossing_ch2(rs, w.points());
  return p;
}

ParabolicSheaf parabolic_direct_sum(const SurfaceModel& s, const ParabolicSheaf& a, const ParabolicSheaf& b) {
  validate(a);
  validate(b);
  if (a.r != b.r) fail(ErrorCode::WeightDenominatorMismatch, "parabolic sheaves with different weight denominators");
  if (a.components != b.components) fail(ErrorCode::ModelMismatch, "parabolic sheaves over different divisors");
  ParabolicSheaf out;
  out.rank = a.rank + b.rank;
  out.c1E = a.c1E + b.c1E;
  out.c2E = a.c2E + b.c2E + s.intersect(a.c1E, b.c1E);
  out.r = a.r;
  out.components = a.components;
  std::set<Rat> all(a.weights.begin(), a.weights.end());
  all.insert(b.weights.begin(), b.weights.end());
  out.weights.assign(all.begin(), all.end());
  out.pieces.assign(out.components.size(), std::vector<GradedPiece>(out.weights.size()));
  for (const auto* part : {&a, &b}) {
    for (std::size_t i = 0; i < part->weights.size(); ++i) {
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(out.weights.begin(), out.weights.end(), part->weights[i]) - out.weights.begin());
      for (std::size_t l = 0; l < out.components.size(); ++l) {
        out.pieces[l][pos].rank += part->pieces[l][i].rank;
        out.pieces[l][pos].degree += part->pieces[l][i].degree;
      }
    }
  }
  return out;
}

}  // namespace orbisurf
