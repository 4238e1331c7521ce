#pragma once

// Test-side oracles and random instance generators. The oracles deliberately
// avoid the library's own algorithms: plain Gauss-Jordan on rationals and
// brute-force enumeration of tight constraint subsets.

#include "polyef/ef.hpp"
#include "polyef/fixtures.hpp"
#include "polyef/io.hpp"
#include "polyef/reduction.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace polyef::test {

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline RVector vec(std::initializer_list<long> xs) {
  RVector out;
  for (long x : xs)
    out.push_back(q(x));
  return out;
}

inline RMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RVector> rs;
  for (auto r : rows)
    rs.push_back(vec(r));
  return RMatrix::from_rows(rs, rs.empty() ? 0 : rs.front().size());
}

inline Constraint le(RVector coef, long rhs) { return {std::move(coef), q(rhs)}; }

inline Polyhedron fixture_polyhedron(const char *name) {
  return io::polyhedron_from_json(io::parse(std::string(*find_fixture(name))));
}

inline AffineMap fixture_map(const char *name) {
  return io::affine_map_from_json(io::parse(std::string(*find_fixture(name))));
}

inline ReductionInstance fixture_instance() {
  return io::reduction_instance_from_json(
      io::parse(std::string(*find_fixture("example1_reduction"))));
}

// --- oracles --------------------------------------------------------------

/// Naive Gauss-Jordan with rational pivots. nullopt when singular.
inline std::optional<RVector> gj_solve(std::vector<RVector> a, RVector b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0)
        continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = 0; k < n; ++k)
        a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  RVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = b[i] / a[i][i];
  return x;
}

/// Inverse by solving against unit vectors.
inline std::optional<RMatrix> gj_inverse(const RMatrix &m) {
  const std::size_t n = m.rows();
  RMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RVector e(n);
    e[j] = 1;
    auto col = gj_solve(m.row_list(), e);
    if (!col)
      return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
      inv(i, j) = (*col)[i];
  }
  return inv;
}

inline bool satisfies(const HRep &h, const RVector &x) {
  for (const auto &c : h.inequalities) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      s += c.coef[i] * x[i];
    if (s > c.rhs)
      return false;
  }
  for (const auto &c : h.equalities) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      s += c.coef[i] * x[i];
    if (s != c.rhs)
      return false;
  }
  return true;
}

/// Vertices of a pointed polyhedron: feasible unique solutions of every
/// choice of `dim` rows among the equalities and inequalities (taken tight),
/// where all equalities are always included.
inline std::vector<RVector> brute_vertices(const HRep &h) {
  const std::size_t d = h.dim;
  std::vector<Constraint> rows = h.equalities;
  const std::size_t ne = rows.size();
  rows.insert(rows.end(), h.inequalities.begin(), h.inequalities.end());
  std::vector<RVector> out;
  if (ne > d)
    return out;
  const std::size_t free_rows = d - ne;
  const std::size_t m = h.inequalities.size();
  if (free_rows > m)
    return out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + free_rows, true);
  do {
    std::vector<RVector> a;
    RVector b;
    for (std::size_t i = 0; i < ne; ++i) {
      a.push_back(rows[i].coef);
      b.push_back(rows[i].rhs);
    }
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        a.push_back(rows[ne + i].coef);
        b.push_back(rows[ne + i].rhs);
      }
    if (auto x = gj_solve(a, b); x && satisfies(h, *x) &&
                                 std::find(out.begin(), out.end(), *x) == out.end())
      out.push_back(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline std::optional<Rational> brute_min(const std::vector<RVector> &points,
                                         const RVector &c) {
  std::optional<Rational> best;
  for (const auto &p : points) {
    Rational v = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      v += c[i] * p[i];
    if (!best || v < *best)
      best = v;
  }
  return best;
}

// --- generators -----------------------------------------------------------

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, n - 1)); }
  bool coin(int percent = 50) { return integer(0, 99) < percent; }

  RVector vector(std::size_t dim, long lo, long hi) {
    RVector v(dim);
    for (auto &x : v)
      x = integer(lo, hi);
    return v;
  }
  RVector nonzero_vector(std::size_t dim, long lo, long hi) {
    for (;;) {
      RVector v = vector(dim, lo, hi);
      if (!is_zero(v))
        return v;
    }
  }

  /// `extra` random inequalities, optionally inside the box [-bound, bound]^dim.
  HRep hrep(std::size_t dim, std::size_t extra, bool boxed, long bound = 5) {
    HRep h{dim, {}, {}};
    if (boxed)
      for (std::size_t i = 0; i < dim; ++i) {
        h.inequalities.push_back({unit_vector(dim, i), Rational(bound)});
        h.inequalities.push_back({scale(unit_vector(dim, i), -1), Rational(bound)});
      }
    for (std::size_t k = 0; k < extra; ++k)
      h.inequalities.push_back({nonzero_vector(dim, -5, 5), Rational(integer(-5, 5))});
    return h;
  }

  VRep vrep(std::size_t dim, std::size_t max_points, bool directions) {
    VRep v{dim, {}, {}, {}};
    const std::size_t n = 1 + index(max_points);
    for (std::size_t i = 0; i < n; ++i)
      v.points.push_back(vector(dim, -5, 5));
    if (directions) {
      if (coin(40))
        v.rays.push_back(nonzero_vector(dim, -2, 2));
      if (coin(25))
        v.lines.push_back(nonzero_vector(dim, -2, 2));
    }
    return v;
  }

  std::vector<std::size_t> keep_subset(std::size_t dim) {
    std::vector<std::size_t> idx(dim);
    for (std::size_t i = 0; i < dim; ++i)
      idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), gen_);
    idx.resize(1 + index(dim));
    std::sort(idx.begin(), idx.end());
    return idx;
  }

private:
  std::mt19937_64 gen_;
};

/// Point of `h` with kept coordinates fixed to x, if any (fiber feasibility).
inline bool has_lift(const HRep &ext, const CoordinateSplit &split, const RVector &x) {
  HRep fiber = ext;
  for (std::size_t i = 0; i < split.keep().size(); ++i)
    fiber.equalities.push_back({unit_vector(ext.dim, split.keep()[i]), x[i]});
  return feasible_point(fiber).has_value();
}

/// Independent re-check of a failing standard/iff verdict.
inline bool witness_certifies(const EfVerdict &v, const HRep &ext,
                              const Polyhedron &target, const CoordinateSplit &split) {
  if (v.holds || !v.witness)
    return false;
  const bool in_target = v_contains(target.v(), *v.witness);
  const bool lifts = has_lift(ext, split, *v.witness);
  switch (v.detail) {
  case EfDetail::ProjPointNotInTarget:
    return lifts && !in_target;
  case EfDetail::TargetPointNoLift:
    return in_target && !lifts;
  default:
    return false;
  }
}

struct EfTriple {
  HRep ext;
  Polyhedron target;
  CoordinateSplit split;
};

/// Extension in dim 2..4 with a target that is, in turn, its exact
/// projection, a one-unit perturbation of it, or an unrelated random set.
inline EfTriple random_ef_triple(Rng &rng) {
  const std::size_t dim = 2 + rng.index(3);
  HRep ext = rng.hrep(dim, 1 + rng.index(3), rng.coin(60), rng.integer(1, 5));
  auto split = CoordinateSplit::keep_only(dim, rng.keep_subset(dim));
  const std::size_t k = split.keep().size();
  switch (rng.index(3)) {
  case 0:
    return {ext, image(Polyhedron::from_h(ext), split.eraser()), split};
  case 1: {
    HRep t = image(Polyhedron::from_h(ext), split.eraser()).h();
    if (!t.inequalities.empty() && rng.coin(80))
      t.inequalities[rng.index(t.inequalities.size())].rhs += rng.coin() ? 1 : -1;
    else
      t.inequalities.push_back({rng.nonzero_vector(k, -5, 5), Rational(rng.integer(-5, 5))});
    return {ext, Polyhedron::from_h(t), split};
  }
  default:
    return {ext, Polyhedron::from_h(rng.hrep(k, 1 + rng.index(3), rng.coin(50))), split};
  }
}

} // namespace polyef::test
