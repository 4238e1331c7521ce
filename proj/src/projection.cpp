#include "polyef/projection.hpp"
#include "polyef/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polyef {

AffineMap AffineMap::linear(RMatrix matrix) {
  RVector offset(matrix.rows());
  return AffineMap{std::move(matrix), std::move(offset)};
}

AffineMap AffineMap::identity(std::size_t dim) {
  return linear(RMatrix::identity(dim));
}

RVector AffineMap::apply(const RVector &x) const {
  return add(mat_vec(matrix, x), offset);
}

RVector AffineMap::apply_linear(const RVector &d) const {
  return mat_vec(matrix, d);
}

void AffineMap::validate() const {
  if (offset.size() != matrix.rows())
    throw DimensionMismatch("affine map offset length differs from row count");
}

AffineMap compose(const AffineMap &outer, const AffineMap &inner) {
  outer.validate();
  inner.validate();
  if (outer.in_dim() != inner.out_dim())
    throw DimensionMismatch("compose: inner output and outer input differ");
  return AffineMap{mat_mul(outer.matrix, inner.matrix),
                   add(mat_vec(outer.matrix, inner.offset), outer.offset)};
}

CoordinateSplit CoordinateSplit::keep_only(std::size_t dim,
                                           std::vector<std::size_t> keep) {
  std::vector<bool> kept(dim, false);
  for (std::size_t k : keep) {
    if (k >= dim)
      throw std::out_of_range("coordinate index " + std::to_string(k) +
                              " out of range for dimension " +
                              std::to_string(dim));
    if (kept[k])
      throw std::invalid_argument("coordinate index " + std::to_string(k) +
                                  " repeated");
    kept[k] = true;
  }
  CoordinateSplit s;
  s.dim_ = dim;
  s.keep_ = std::move(keep);
  for (std::size_t i = 0; i < dim; ++i)
    if (!kept[i])
      s.drop_.push_back(i);
  return s;
}

AffineMap CoordinateSplit::eraser() const {
  RMatrix m(keep_.size(), dim_);
  for (std::size_t i = 0; i < keep_.size(); ++i)
    m(i, keep_[i]) = 1;
  return AffineMap::linear(std::move(m));
}

RVector CoordinateSplit::restrict(const RVector &full) const {
  if (full.size() != dim_)
    throw DimensionMismatch("vector length differs from split dimension");
  RVector out;
  out.reserve(keep_.size());
  for (std::size_t k : keep_)
    out.push_back(full[k]);
  return out;
}

namespace {

void axpy(Constraint &c, const Rational &f, const Constraint &src) {
  for (std::size_t j = 0; j < c.coef.size(); ++j)
    c.coef[j] -= f * src.coef[j];
  c.rhs -= f * src.rhs;
}

// Removes coordinate `var` from the system, leaving its column zero.
HRep eliminate(const HRep &h, std::size_t var) {
  HRep out{h.dim, {}, {}};
  auto pivot = std::find_if(h.equalities.begin(), h.equalities.end(),
                            [&](const Constraint &e) { return sgn(e.coef[var]) != 0; });
  if (pivot != h.equalities.end()) {
    const Constraint &e = *pivot;
    auto substitute = [&](Constraint c) {
      if (sgn(c.coef[var]) != 0)
        axpy(c, c.coef[var] / e.coef[var], e);
      return c;
    };
    for (auto it = h.equalities.begin(); it != h.equalities.end(); ++it)
      if (it != pivot)
        out.equalities.push_back(substitute(*it));
    for (const auto &c : h.inequalities)
      out.inequalities.push_back(substitute(c));
    return out;
  }

  out.equalities = h.equalities;
  std::vector<const Constraint *> pos, neg;
  for (const auto &c : h.inequalities) {
    const int s = sgn(c.coef[var]);
    if (s > 0)
      pos.push_back(&c);
    else if (s < 0)
      neg.push_back(&c);
    else
      out.inequalities.push_back(c);
  }
  for (const Constraint *p : pos)
    for (const Constraint *n : neg) {
      const Rational fp = -n->coef[var];
      const Rational fn = p->coef[var];
      Constraint c{RVector(h.dim), fp * p->rhs + fn * n->rhs};
      for (std::size_t j = 0; j < h.dim; ++j)
        c.coef[j] = fp * p->coef[j] + fn * n->coef[j];
      out.inequalities.push_back(std::move(c));
    }
  return out;
}

} // namespace

HRep project_coords(const HRep &h, const CoordinateSplit &split) {
  h.validate();
  if (split.dim() != h.dim)
    throw DimensionMismatch("project_coords: split dimension differs");

  HRep cur = h;
  for (std::size_t var : split.drop())
    cur = remove_redundancy(eliminate(cur, var));

  HRep out{split.keep().size(), {}, {}};
  auto restrict = [&](const Constraint &c) {
    return Constraint{split.restrict(c.coef), c.rhs};
  };
  for (const auto &c : cur.inequalities)
    out.inequalities.push_back(restrict(c));
  for (const auto &c : cur.equalities)
    out.equalities.push_back(restrict(c));
  return remove_redundancy(out);
}

Polyhedron image(const Polyhedron &p, const AffineMap &map) {
  map.validate();
  if (map.in_dim() != p.ambient_dim())
    throw DimensionMismatch("image: map input dimension differs from polyhedron");
  const VRep &v = p.v();
  VRep raw{map.out_dim(), {}, {}, {}};
  if (v.is_empty())
    return Polyhedron::from_both(HRep::empty_set(map.out_dim()), raw);
  for (const auto &pt : v.points)
    raw.points.push_back(map.apply(pt));
  // Directions that the map sends to zero contribute nothing.
  for (const auto &r : v.rays)
    if (RVector d = map.apply_linear(r); !is_zero(d))
      raw.rays.push_back(std::move(d));
  for (const auto &l : v.lines)
    if (RVector d = map.apply_linear(l); !is_zero(d))
      raw.lines.push_back(std::move(d));
  HRep h = v_to_h(raw);
  VRep minimal = h_to_v(h);
  return Polyhedron::from_both(std::move(h), std::move(minimal));
}

HRep graph_polyhedron(const AffineMap &map, const HRep &domain) {
  map.validate();
  domain.validate();
  if (domain.dim != map.in_dim())
    throw DimensionMismatch("graph_polyhedron: domain dimension differs");
  const std::size_t in = map.in_dim(), out_dim = map.out_dim();
  HRep g{in + out_dim, {}, {}};
  auto pad = [&](const Constraint &c) {
    RVector coef = c.coef;
    coef.resize(in + out_dim);
    return Constraint{std::move(coef), c.rhs};
  };
  for (const auto &c : domain.inequalities)
    g.inequalities.push_back(pad(c));
  for (const auto &c : domain.equalities)
    g.equalities.push_back(pad(c));
  for (std::size_t i = 0; i < out_dim; ++i) {
    RVector coef(in + out_dim);
    for (std::size_t j = 0; j < in; ++j)
      coef[j] = -map.matrix(i, j);
    coef[in + i] = 1;
    g.equalities.push_back({std::move(coef), map.offset[i]});
  }
  return g;
}

} // namespace polyef
