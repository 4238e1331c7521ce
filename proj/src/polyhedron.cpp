#include "polyef/polyhedron.hpp"
#include "polyef/error.hpp"
#include "polyef/lp.hpp"

#include "double_description.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace polyef {

bool constraint_less(const Constraint &a, const Constraint &b) {
  if (a.coef != b.coef)
    return lex_less(a.coef, b.coef);
  return a.rhs < b.rhs;
}

HRep HRep::universe(std::size_t dim) { return HRep{dim, {}, {}}; }

HRep HRep::empty_set(std::size_t dim) {
  return HRep{dim, {Constraint{RVector(dim), Rational(-1)}}, {}};
}

void HRep::validate() const {
  auto check = [&](const std::vector<Constraint> &cs) {
    for (const auto &c : cs)
      if (c.coef.size() != dim)
        throw DimensionMismatch("constraint has " +
                                std::to_string(c.coef.size()) +
                                " coefficients in dimension " +
                                std::to_string(dim));
  };
  check(inequalities);
  check(equalities);
}

void VRep::validate() const {
  auto check = [&](const std::vector<RVector> &vs, bool nonzero) {
    for (const auto &v : vs) {
      if (v.size() != dim)
        throw DimensionMismatch("generator has " + std::to_string(v.size()) +
                                " entries in dimension " + std::to_string(dim));
      if (nonzero && is_zero(v))
        throw Error("rays and lines must be nonzero");
    }
  };
  check(points, false);
  check(rays, true);
  check(lines, true);
}

Constraint normalize_inequality(const Constraint &c) {
  RVector joined = c.coef;
  joined.push_back(c.rhs);
  joined = primitive(joined);
  Rational rhs = joined.back();
  joined.pop_back();
  return {std::move(joined), std::move(rhs)};
}

Constraint normalize_equality(const Constraint &c) {
  Constraint out = normalize_inequality(c);
  auto lead = std::find_if(out.coef.begin(), out.coef.end(),
                           [](const Rational &q) { return sgn(q) != 0; });
  if (lead != out.coef.end() && sgn(*lead) < 0) {
    for (auto &q : out.coef)
      q = -q;
    out.rhs = -out.rhs;
  }
  return out;
}

std::size_t inequality_size(const HRep &h) {
  return h.inequalities.size() + 2 * h.equalities.size();
}

namespace {

RVector joined(const Constraint &c) {
  RVector v = c.coef;
  v.push_back(c.rhs);
  return v;
}

// Affine-hull equalities kept as the RREF of their [a | β] rows. Inequalities
// are reduced modulo it (zero in its pivot columns) and made primitive, which
// gives each facet a unique form.
class EqualityBasis {
public:
  EqualityBasis(std::size_t dim, const std::vector<RVector> &eq_rows)
      : dim_(dim), basis_(rref_basis(eq_rows, dim + 1)) {
    for (const auto &row : basis_) {
      std::size_t c = 0;
      while (sgn(row[c]) == 0)
        ++c;
      if (c == dim_)
        contradictory_ = true; // 0 = nonzero
      pivots_.push_back(c);
    }
  }

  bool contradictory() const { return contradictory_; }

  std::vector<Constraint> equalities() const {
    std::vector<Constraint> out;
    for (const auto &row : basis_) {
      RVector p = primitive(row);
      Rational rhs = p.back();
      p.pop_back();
      out.push_back({std::move(p), std::move(rhs)});
    }
    std::sort(out.begin(), out.end(), constraint_less);
    return out;
  }

  // nullopt when the coefficients vanish; `violated` is then set iff the
  // leftover reads 0 ≤ negative.
  std::optional<Constraint> reduce(const Constraint &c, bool &violated) const {
    RVector v = joined(c);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (sgn(v[pivots_[i]]) == 0)
        continue;
      Rational f = v[pivots_[i]];
      for (std::size_t j = 0; j <= dim_; ++j)
        v[j] -= f * basis_[i][j];
    }
    Rational rhs = v.back();
    v.pop_back();
    violated = false;
    if (is_zero(v)) {
      violated = sgn(rhs) < 0;
      return std::nullopt;
    }
    return normalize_inequality({std::move(v), std::move(rhs)});
  }

  // Reduced inequalities in input order, duplicates dropped; nullopt when
  // some inequality reduces to a contradiction.
  std::optional<std::vector<Constraint>>
  reduce_all(const std::vector<Constraint> &ineqs) const {
    std::vector<Constraint> out;
    std::set<std::pair<RVector, Rational>> seen;
    for (const auto &c : ineqs) {
      bool violated = false;
      auto r = reduce(c, violated);
      if (violated)
        return std::nullopt;
      if (r && seen.emplace(r->coef, r->rhs).second)
        out.push_back(std::move(*r));
    }
    return out;
  }

private:
  std::size_t dim_;
  std::vector<RVector> basis_;
  std::vector<std::size_t> pivots_;
  bool contradictory_ = false;
};

HRep canonical_form(std::size_t dim, const std::vector<RVector> &eq_rows,
                    const std::vector<Constraint> &ineqs) {
  EqualityBasis basis(dim, eq_rows);
  auto reduced = basis.reduce_all(ineqs);
  if (basis.contradictory() || !reduced)
    return HRep::empty_set(dim);
  HRep out{dim, std::move(*reduced), basis.equalities()};
  std::sort(out.inequalities.begin(), out.inequalities.end(), constraint_less);
  return out;
}

// Orthogonal projection onto the complement of span(basis).
RVector project_out(const RVector &v, const std::vector<RVector> &basis) {
  if (basis.empty())
    return v;
  const std::size_t k = basis.size();
  RMatrix gram(k, k);
  RVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(basis[i], v);
    for (std::size_t j = 0; j < k; ++j)
      gram(i, j) = dot(basis[i], basis[j]);
  }
  RVector coeffs = *solve_square(gram, rhs);
  RVector out = v;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[j] -= coeffs[i] * basis[i][j];
  return out;
}

void sort_unique(std::vector<RVector> &vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

HRep without(const HRep &h, std::size_t index) {
  HRep out = h;
  out.inequalities.erase(out.inequalities.begin() +
                         static_cast<std::ptrdiff_t>(index));
  return out;
}

// Inequality i is tight on the whole (nonempty) set.
bool is_implicit_equality(const HRep &h, const Constraint &c) {
  LpOutcome out = solve({c.coef, Sense::minimize, h});
  return out.status == LpStatus::optimal && *out.value == c.rhs;
}

} // namespace

bool h_contains(const HRep &h, const RVector &x) {
  h.validate();
  if (x.size() != h.dim)
    throw DimensionMismatch("point length differs from dimension");
  for (const auto &c : h.inequalities)
    if (dot(c.coef, x) > c.rhs)
      return false;
  for (const auto &c : h.equalities)
    if (dot(c.coef, x) != c.rhs)
      return false;
  return true;
}

bool in_recession_cone(const HRep &h, const RVector &d) {
  if (d.size() != h.dim)
    throw DimensionMismatch("direction length differs from dimension");
  for (const auto &c : h.inequalities)
    if (sgn(dot(c.coef, d)) > 0)
      return false;
  for (const auto &c : h.equalities)
    if (sgn(dot(c.coef, d)) != 0)
      return false;
  return true;
}

bool v_contains(const VRep &v, const RVector &x) {
  v.validate();
  if (x.size() != v.dim)
    throw DimensionMismatch("point length differs from dimension");
  if (v.is_empty())
    return false;
  // Variables: λ (points), μ (rays), ν (lines).
  const std::size_t np = v.points.size(), nr = v.rays.size();
  const std::size_t n = np + nr + v.lines.size();
  HRep sys{n, {}, {}};
  for (std::size_t i = 0; i < np + nr; ++i) {
    RVector c(n);
    c[i] = -1;
    sys.inequalities.push_back({std::move(c), Rational(0)});
  }
  RVector sum(n);
  for (std::size_t i = 0; i < np; ++i)
    sum[i] = 1;
  sys.equalities.push_back({std::move(sum), Rational(1)});
  for (std::size_t j = 0; j < v.dim; ++j) {
    RVector c(n);
    std::size_t col = 0;
    for (const auto &p : v.points)
      c[col++] = p[j];
    for (const auto &r : v.rays)
      c[col++] = r[j];
    for (const auto &l : v.lines)
      c[col++] = l[j];
    sys.equalities.push_back({std::move(c), x[j]});
  }
  return feasible_point(sys).has_value();
}

int dimension(const HRep &h) {
  h.validate();
  if (!feasible_point(h))
    return -1;
  std::vector<RVector> rows;
  for (const auto &c : h.equalities)
    rows.push_back(c.coef);
  for (const auto &c : h.inequalities)
    if (is_implicit_equality(h, c))
      rows.push_back(c.coef);
  return static_cast<int>(h.dim) - static_cast<int>(rank(rows, h.dim));
}

int dimension(const VRep &v) {
  v.validate();
  if (v.is_empty())
    return -1;
  std::vector<RVector> rows;
  for (std::size_t i = 1; i < v.points.size(); ++i)
    rows.push_back(sub(v.points[i], v.points[0]));
  rows.insert(rows.end(), v.rays.begin(), v.rays.end());
  rows.insert(rows.end(), v.lines.begin(), v.lines.end());
  return static_cast<int>(rank(rows, v.dim));
}

VRep h_to_v(const HRep &h, const Limits &limits) {
  h.validate();
  if (h.dim > limits.max_dim)
    throw LimitExceeded("h_to_v: dimension " + std::to_string(h.dim) +
                        " exceeds limit " + std::to_string(limits.max_dim));
  if (h.inequalities.size() + h.equalities.size() > limits.max_constraints)
    throw LimitExceeded("h_to_v: too many constraints");

  // Homogenize: (x, t) with t ≥ 0 and a·x - b t ≤ 0 / = 0.
  const std::size_t n = h.dim + 1;
  std::vector<RVector> ineqs, eqs;
  RVector t_nonneg(n);
  t_nonneg[h.dim] = -1;
  ineqs.push_back(std::move(t_nonneg));
  auto homogenize = [&](const Constraint &c) {
    RVector row = c.coef;
    row.push_back(-c.rhs);
    return row;
  };
  for (const auto &c : h.inequalities)
    ineqs.push_back(homogenize(c));
  for (const auto &c : h.equalities)
    eqs.push_back(homogenize(c));

  detail::ConeGenerators cone = detail::dd_cone(n, ineqs, eqs);

  VRep out{h.dim, {}, {}, {}};
  std::vector<RVector> line_rows;
  for (const auto &l : cone.lines)
    line_rows.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(h.dim));
  for (auto &row : rref_basis(line_rows, h.dim))
    out.lines.push_back(primitive(row));

  for (const auto &r : cone.rays) {
    const Rational &t = r[h.dim];
    RVector x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(h.dim));
    if (sgn(t) > 0) {
      for (auto &e : x)
        e /= t;
      out.points.push_back(project_out(x, out.lines));
    } else {
      RVector d = project_out(x, out.lines);
      if (!is_zero(d))
        out.rays.push_back(primitive(d));
    }
  }
  if (out.points.empty())
    return VRep{h.dim, {}, {}, {}};
  sort_unique(out.points);
  sort_unique(out.rays);
  return out;
}

HRep v_to_h(const VRep &v, const Limits &limits) {
  v.validate();
  if (v.dim > limits.max_dim)
    throw LimitExceeded("v_to_h: dimension " + std::to_string(v.dim) +
                        " exceeds limit " + std::to_string(limits.max_dim));
  if (v.points.size() + v.rays.size() + v.lines.size() > limits.max_generators)
    throw LimitExceeded("v_to_h: too many generators");
  if (v.is_empty())
    return HRep::empty_set(v.dim);

  // Valid inequalities a·x ≤ β form the cone a·p - β ≤ 0, a·r ≤ 0, a·l = 0.
  const std::size_t n = v.dim + 1;
  std::vector<RVector> ineqs, eqs;
  for (const auto &p : v.points) {
    RVector row = p;
    row.push_back(-1);
    ineqs.push_back(std::move(row));
  }
  for (const auto &r : v.rays) {
    RVector row = r;
    row.push_back(0);
    ineqs.push_back(std::move(row));
  }
  for (const auto &l : v.lines) {
    RVector row = l;
    row.push_back(0);
    eqs.push_back(std::move(row));
  }
  detail::ConeGenerators cone = detail::dd_cone(n, ineqs, eqs);

  std::vector<Constraint> facets;
  for (const auto &r : cone.rays) {
    RVector a(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(v.dim));
    if (is_zero(a))
      continue;
    facets.push_back({std::move(a), r[v.dim]});
  }
  return canonical_form(v.dim, cone.lines, facets);
}

bool is_redundant(const HRep &h, std::size_t index) {
  h.validate();
  if (index >= h.inequalities.size())
    throw std::out_of_range("is_redundant: inequality index out of range");
  const Constraint &c = h.inequalities[index];
  LpOutcome out = solve({c.coef, Sense::maximize, without(h, index)});
  switch (out.status) {
  case LpStatus::infeasible:
    return true;
  case LpStatus::unbounded:
    return false;
  case LpStatus::optimal:
    break;
  }
  return *out.value <= c.rhs;
}

HRep remove_redundancy(const HRep &h) {
  h.validate();
  if (!feasible_point(h))
    return HRep::empty_set(h.dim);

  std::vector<RVector> eq_rows;
  for (const auto &c : h.equalities)
    eq_rows.push_back(joined(c));
  std::vector<Constraint> rest;
  for (const auto &c : h.inequalities) {
    if (is_zero(c.coef))
      continue;
    if (is_implicit_equality(h, c))
      eq_rows.push_back(joined(c));
    else
      rest.push_back(c);
  }

  EqualityBasis basis(h.dim, eq_rows);
  HRep reduced{h.dim, *basis.reduce_all(rest), basis.equalities()};
  // Sequential pruning in input order leaves an irredundant system.
  for (std::size_t i = 0; i < reduced.inequalities.size();) {
    if (is_redundant(reduced, i))
      reduced.inequalities.erase(reduced.inequalities.begin() +
                                 static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  std::sort(reduced.inequalities.begin(), reduced.inequalities.end(),
            constraint_less);
  return reduced;
}

bool sets_equal(const HRep &ha, const VRep &va, const HRep &hb,
                const VRep &vb) {
  if (va.is_empty() || vb.is_empty())
    return va.is_empty() == vb.is_empty();
  auto inside = [](const VRep &v, const HRep &h) {
    for (const auto &p : v.points)
      if (!h_contains(h, p))
        return false;
    for (const auto &r : v.rays)
      if (!in_recession_cone(h, r))
        return false;
    for (const auto &l : v.lines)
      if (!in_recession_cone(h, l) || !in_recession_cone(h, scale(l, -1)))
        return false;
    return true;
  };
  return inside(va, hb) && inside(vb, ha);
}

// ---------------------------------------------------------------------------

struct Polyhedron::State {
  std::size_t dim;
  Limits limits;
  mutable std::mutex mutex;
  mutable std::optional<HRep> h;
  mutable std::optional<VRep> v;
};

Polyhedron::Polyhedron(std::shared_ptr<State> state) : state_(std::move(state)) {}

Polyhedron Polyhedron::from_h(HRep h, Limits limits) {
  h.validate();
  auto s = std::make_shared<State>();
  s->dim = h.dim;
  s->limits = limits;
  s->h = std::move(h);
  return Polyhedron(std::move(s));
}

Polyhedron Polyhedron::from_v(VRep v, Limits limits) {
  v.validate();
  auto s = std::make_shared<State>();
  s->dim = v.dim;
  s->limits = limits;
  s->v = std::move(v);
  return Polyhedron(std::move(s));
}

Polyhedron Polyhedron::from_both(HRep h, VRep v, Limits limits) {
  h.validate();
  v.validate();
  if (h.dim != v.dim)
    throw DimensionMismatch("H- and V-representation dimensions differ");
  if (verification_enabled() &&
      !sets_equal(h, h_to_v(h, limits), v_to_h(v, limits), v))
    throw VerificationError("H- and V-representations describe different sets");
  auto s = std::make_shared<State>();
  s->dim = h.dim;
  s->limits = limits;
  s->h = std::move(h);
  s->v = std::move(v);
  return Polyhedron(std::move(s));
}

std::size_t Polyhedron::ambient_dim() const { return state_->dim; }

bool Polyhedron::has_h() const {
  std::lock_guard lock(state_->mutex);
  return state_->h.has_value();
}

bool Polyhedron::has_v() const {
  std::lock_guard lock(state_->mutex);
  return state_->v.has_value();
}

const HRep &Polyhedron::h() const {
  std::lock_guard lock(state_->mutex);
  if (!state_->h)
    state_->h = v_to_h(*state_->v, state_->limits);
  return *state_->h;
}

const VRep &Polyhedron::v() const {
  std::lock_guard lock(state_->mutex);
  if (!state_->v)
    state_->v = h_to_v(*state_->h, state_->limits);
  return *state_->v;
}

bool contains(const Polyhedron &p, const RVector &x) {
  if (p.has_h())
    return h_contains(p.h(), x);
  return v_contains(p.v(), x);
}

int dimension(const Polyhedron &p) {
  if (p.has_v())
    return dimension(p.v());
  return dimension(p.h());
}

bool is_bounded(const Polyhedron &p) {
  const VRep &v = p.v();
  return v.rays.empty() && v.lines.empty();
}

bool poly_equal(const Polyhedron &a, const Polyhedron &b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("poly_equal: ambient dimensions differ");
  return sets_equal(a.h(), a.v(), b.h(), b.v());
}

} // namespace polyef
