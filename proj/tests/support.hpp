#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orbisurf/orb_sheaf.hpp"
#include "orbisurf/parabolic.hpp"
#include "orbisurf/root_stack.hpp"
#include "orbisurf/surface.hpp"

namespace testing {

using namespace orbisurf;

inline DivClass cls(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.emplace_back(x);
  return DivClass(v);
}

// P^2 with hyperplane class; lines named L1 and L2.
inline SurfaceModel p2() {
  return SurfaceModel::build(1, {{Rat(1)}}, cls({1}), cls({-3}), Rat(3), {{"L1", cls({1})}, {"L2", cls({1})}});
}

// P^1 x P^1 with the two rulings F (first) and G (second).
inline SurfaceModel p1xp1() {
  return SurfaceModel::build(2, {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}, cls({1, 1}), cls({-2, -2}), Rat(4),
                             {{"F", cls({1, 0})}, {"G", cls({0, 1})}});
}

// Riemann-Roch on the coarse surface: chi(O) + L.(L - K)/2.
inline Rat chi_surface(const SurfaceModel& s, const DivClass& l) {
  return s.chi_structure_sheaf() + s.intersect(l, l - s.K()) / Rat(2);
}

// pi_* O(pi^*L + sum k_i D~_i) = O(L + sum floor(k_i / r) D_i).
inline Rat chi_pushforward(const RootStackModel& rs, const DivClass& base, const std::vector<long>& k) {
  const SurfaceModel& s = rs.base();
  DivClass l = base;
  const auto names = rs.branch_names();
  for (std::size_t i = 0; i < k.size(); ++i) {
    const Rat q(Rat(k[i], rs.r()).floor());
    l += q * s.divisor(names[i]);
  }
  return chi_surface(s, l);
}

// Delta of a direct sum of line bundles with numerical classes L_i:
// -sum_{i<j} (L_i - L_j)^2.
inline Rat delta_of_line_sum(const SurfaceModel& s, const std::vector<DivClass>& ls) {
  Rat out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      const DivClass d = ls[i] - ls[j];
      out -= s.intersect(d, d);
    }
  }
  return out;
}

class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  Rat rat(long lo, long hi, long max_den) { return Rat(integer(lo * max_den, hi * max_den), integer(1, max_den)); }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(integer(0, static_cast<long>(xs.size()) - 1))];
  }

  DivClass divisor(int rho, long bound) {
    std::vector<Rat> v;
    for (int i = 0; i < rho; ++i) v.emplace_back(integer(-bound, bound));
    return DivClass(v);
  }

  // G = P^T diag(1, -a, -b) P with P integral and invertible; H with H.H > 0.
  SurfaceModel hodge_lattice(int rho) {
    for (;;) {
      std::vector<std::vector<long>> p(rho, std::vector<long>(rho));
      for (int i = 0; i < rho; ++i) {
        for (int j = 0; j < rho; ++j) p[i][j] = i == j ? 1 : (j > i ? integer(-2, 2) : 0);
      }
      std::vector<long> d(rho);
      d[0] = 1;
      for (int i = 1; i < rho; ++i) d[i] = -integer(1, 3);
      Matrix g(rho, std::vector<Rat>(rho));
      for (int i = 0; i < rho; ++i) {
        for (int j = 0; j < rho; ++j) {
          long acc = 0;
          for (int k = 0; k < rho; ++k) acc += p[k][i] * d[k] * p[k][j];
          g[i][j] = Rat(acc);
        }
      }
      const DivClass h = divisor(rho, 2);
      const DivClass k = divisor(rho, 3);
      Rat hh;
      for (int i = 0; i < rho; ++i) {
        for (int j = 0; j < rho; ++j) hh += h.coords[i] * g[i][j] * h.coords[j];
      }
      if (hh.sign() <= 0) continue;
      return SurfaceModel::build(rho, g, h, k, Rat(integer(0, 12)), {});
    }
  }

  // Integral vectors v with v.H = 0 (H given by its image h = G H).
  DivClass orthogonal(const SurfaceModel& s, long bound) {
    const int rho = s.rho();
    std::vector<Rat> h(rho);
    for (int i = 0; i < rho; ++i) {
      for (int j = 0; j < rho; ++j) h[i] += s.gram()[i][j] * s.H().coords[j];
    }
    DivClass out = DivClass::zero(rho);
    for (int i = 0; i < rho; ++i) {
      for (int j = i + 1; j < rho; ++j) {
        std::vector<Rat> v(rho);
        v[i] = h[j];
        v[j] = -h[i];
        out += Rat(integer(-bound, bound)) * DivClass(v);
      }
    }
    return out;
  }

  StackyClass line_class(const RootStackModel& rs, long bound) {
    StackyClass c = rs.zero_class();
    c.base = divisor(rs.base().rho(), bound);
    for (auto& x : c.stacky) x = Rat(integer(-2 * rs.r(), 2 * rs.r()));
    return c;
  }

  // Sums and tensor products of line bundles, sometimes with c2 shifted so
  // that the result is not split.
  OrbSheaf sheaf(const RootStackPtr& rs, long max_rank) {
    const long rank = integer(1, max_rank);
    OrbSheaf e = line_bundle(rs, line_class(*rs, 2));
    for (long i = 1; i < rank; ++i) e = direct_sum(e, line_bundle(rs, line_class(*rs, 2)));
    if (coin()) e = twist(e, line_class(*rs, 1));
    if (coin() && rank > 1) {
      e = OrbSheaf(rs, e.rank(), e.c1(), e.c2int() + Rat(integer(-3, 3)), e.curves(), e.points());
    }
    if (integer(0, 3) == 0) e = dual(e);
    return e;
  }

  // Arbitrary band data with the right totals; crossing tables coupled.
  OrbSheaf banded_sheaf(const RootStackPtr& rs, long max_rank) {
    const long rank = integer(1, max_rank);
    const long r = rs->r();
    StackyClass c1 = line_class(*rs, 2);
    std::vector<CurveBands> curves;
    for (std::size_t l = 0; l < rs->branch_count(); ++l) {
      CurveBands b{std::vector<long>(r, 0), std::vector<Rat>(r)};
      for (long k = 0; k < rank; ++k) b.ranks[integer(0, r - 1)] += 1;
      Rat left = Rat(r) * stacky_intersect(*rs, c1, rs->root_class(l));
      long last = r - 1;
      while (b.ranks[last] == 0) --last;
      for (long j = 0; j < last; ++j) {
        if (b.ranks[j] == 0) continue;
        b.degrees[j] = Rat(integer(-3, 3), integer(1, 2));
        left -= b.degrees[j];
      }
      b.degrees[last] = left;
      curves.push_back(b);
    }
    return OrbSheaf::with_coupled_points(rs, rank, c1, Rat(integer(-4, 4)), curves);
  }

  // Root stacks with euler numbers set, so chi is defined.
  RootStackPtr root_stack() {
    const long r = integer(1, 4);
    switch (integer(0, 3)) {
      case 0: return build_root_stack(p2(), static_cast<int>(r), {"L1"});
      case 1: return build_root_stack(p2(), static_cast<int>(r), {"L1", "L2"});
      case 2: return build_root_stack(p1xp1(), static_cast<int>(r), {"F"});
      default: return build_root_stack(p1xp1(), static_cast<int>(r), {"F", "G"});
    }
  }

  // Parabolic data with rank <= 3 and at most two weights.
  ParabolicSheaf parabolic(const RootStackModel& rs) {
    const long rank = integer(1, 3);
    ParabolicSheaf p = trivial_parabolic(rs, rank, divisor(rs.base().rho(), 2), Rat(integer(-3, 3)));
    std::vector<Rat> pool;
    for (long j = 1; j < rs.r(); ++j) pool.emplace_back(j, rs.r());
    std::shuffle(pool.begin(), pool.end(), rng_);
    const std::size_t count = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(integer(0, 2)));
    p.weights.assign(pool.begin(), pool.begin() + static_cast<long>(count));
    std::sort(p.weights.begin(), p.weights.end());
    for (std::size_t l = 0; l < p.pieces.size(); ++l) {
      auto& row = p.pieces[l];
      row.assign(p.weights.size(), GradedPiece{});
      long left = rank;
      Rat degree_left = rs.base().intersect(p.c1E, rs.base().divisor(p.components[l]));
      GradedPiece* last = nullptr;
      for (auto& piece : row) {
        piece.rank = integer(0, left);
        left -= piece.rank;
        piece.degree = piece.rank == 0 ? Rat(0) : Rat(integer(-3, 3));
        degree_left -= piece.degree;
        if (piece.rank > 0) last = &piece;
      }
      // with nothing left in weight zero the degrees must add up to c1(E).D
      if (left == 0 && last) last->degree += degree_left;
    }
    // canonical form: drop weights that carry nothing on any component
    for (std::size_t i = p.weights.size(); i-- > 0;) {
      bool used = false;
      for (const auto& row : p.pieces) used = used || row[i].rank > 0;
      if (used) continue;
      p.weights.erase(p.weights.begin() + static_cast<long>(i));
      for (auto& row : p.pieces) row.erase(row.begin() + static_cast<long>(i));
    }
    return p;
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

// North-west corner rule: fill the table greedily along both marginals.
inline std::vector<std::vector<long>> north_west(std::vector<long> rows, std::vector<long> cols) {
  std::vector<std::vector<long>> t(rows.size(), std::vector<long>(cols.size(), 0));
  std::size_t i = 0, j = 0;
  while (i < rows.size() && j < cols.size()) {
    const long x = std::min(rows[i], cols[j]);
    t[i][j] += x;
    rows[i] -= x;
    cols[j] -= x;
    if (rows[i] == 0) ++i;
    if (i < rows.size() && cols[j] == 0) ++j;
  }
  return t;
}

// Characters meeting at crossings: sum n T[j][k] j k / r^2.
inline Rat crossing_expansion(const RootStackModel& rs, const ParabolicSheaf& p) {
  const long r = rs.r();
  std::vector<std::vector<long>> bands(p.components.size(), std::vector<long>(r, 0));
  for (std::size_t l = 0; l < p.components.size(); ++l) {
    long used = 0;
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
      const long j = (p.weights[i] * Rat(r)).num().get_si();
      bands[l][j] += p.pieces[l][i].rank;
      used += p.pieces[l][i].rank;
    }
    bands[l][0] += p.rank - used;
  }
  Rat out;
  for (std::size_t l = 0; l < bands.size(); ++l) {
    for (std::size_t m = l + 1; m < bands.size(); ++m) {
      const long n = rs.crossing(rs.index_of(p.components[l]), rs.index_of(p.components[m]));
      const auto t = north_west(bands[l], bands[m]);
      for (long j = 0; j < r; ++j) {
        for (long k = 0; k < r; ++k) out += Rat(n * t[j][k] * j * k, r * r);
      }
    }
  }
  return out;
}

// Delta of the sheaf attached to parabolic data, expanded by hand:
// c1(W) = c1(E) + sum alpha r D,
// ch2(W) = ch2(E) + sum (alpha d + alpha^2 r D^2 / 2) + crossing term,
// Delta = c1(W)^2 - 2 rk ch2(W).
inline Rat parabolic_delta_expansion(const RootStackModel& rs, const ParabolicSheaf& p) {
  const SurfaceModel& s = rs.base();
  DivClass c1 = p.c1E;
  Rat ch2 = s.intersect(p.c1E, p.c1E) / Rat(2) - p.c2E;
  for (std::size_t l = 0; l < p.components.size(); ++l) {
    const DivClass& d = s.divisor(p.components[l]);
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
      const Rat& a = p.weights[i];
      const auto& g = p.pieces[l][i];
      c1 += (a * Rat(g.rank)) * d;
      ch2 += a * g.degree + a * a * Rat(g.rank) * s.intersect(d, d) / Rat(2);
    }
  }
  ch2 += crossing_expansion(rs, p);
  return s.intersect(c1, c1) - Rat(2) * Rat(p.rank) * ch2;
}

// sum_{i<j} r_i r_j (mu_i - mu_j)^2
inline Rat hn_brute(const std::vector<long>& ranks, const std::vector<Rat>& slopes) {
  Rat out;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    for (std::size_t j = i + 1; j < ranks.size(); ++j) {
      const Rat d = slopes[i] - slopes[j];
      out += Rat(ranks[i] * ranks[j]) * d * d;
    }
  }
  return out;
}

// All HN polygons of total rank <= max_rank with slopes drawn strictly
// decreasing from the grid.
inline void for_each_polygon(long max_rank, const std::vector<Rat>& grid,
                             const std::function<void(const std::vector<long>&, const std::vector<Rat>&)>& visit) {
  std::vector<long> ranks;
  std::vector<Rat> slopes;
  std::function<void(long, std::size_t)> go = [&](long left, std::size_t next) {
    if (!ranks.empty()) visit(ranks, slopes);
    for (std::size_t s = next; s < grid.size(); ++s) {
      for (long r = 1; r <= left; ++r) {
        ranks.push_back(r);
        slopes.push_back(grid[s]);
        go(left - r, s + 1);
        ranks.pop_back();
        slopes.pop_back();
      }
    }
  };
  go(max_rank, 0);
}

// Slope grid {2, 3/2, ..., -2}, descending.
inline std::vector<Rat> half_grid() {
  std::vector<Rat> g;
  for (long k = 4; k >= -4; --k) g.emplace_back(k, 2);
  return g;
}

}  // namespace testing
