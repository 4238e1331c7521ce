#include "polyef/ef.hpp"
#include "polyef/error.hpp"
#include "polyef/lp.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace polyef {

const char *to_string(EfDetail detail) {
  switch (detail) {
  case EfDetail::ProjEqual:
    return "ProjEqual";
  case EfDetail::ProjPointNotInTarget:
    return "ProjPointNotInTarget";
  case EfDetail::TargetPointNoLift:
    return "TargetPointNoLift";
  case EfDetail::ImageEqual:
    return "ImageEqual";
  case EfDetail::ImageNotEqual:
    return "ImageNotEqual";
  }
  return "?";
}

namespace {

void check_split(const HRep &ext, const Polyhedron &target,
                 const CoordinateSplit &split) {
  ext.validate();
  if (split.dim() != ext.dim)
    throw DimensionMismatch("split dimension differs from extension dimension");
  if (split.keep().size() != target.ambient_dim())
    throw DimensionMismatch("kept block size differs from target dimension");
}

// {w : (w, x) ∈ ext} for fixed kept coordinates x, over the dropped block.
HRep fiber(const HRep &ext, const CoordinateSplit &split, const RVector &x,
           bool homogeneous) {
  HRep out{split.drop().size(), {}, {}};
  auto restrict = [&](const Constraint &c) {
    Constraint r{RVector(), homogeneous ? Rational(0) : c.rhs};
    for (std::size_t d : split.drop())
      r.coef.push_back(c.coef[d]);
    for (std::size_t i = 0; i < split.keep().size(); ++i)
      r.rhs -= c.coef[split.keep()[i]] * x[i];
    return r;
  };
  for (const auto &c : ext.inequalities)
    out.inequalities.push_back(restrict(c));
  for (const auto &c : ext.equalities)
    out.equalities.push_back(restrict(c));
  return out;
}

bool has_lift(const HRep &ext, const CoordinateSplit &split, const RVector &x) {
  return feasible_point(fiber(ext, split, x, false)).has_value();
}

// Some recession direction of ext projects onto d.
bool direction_lifts(const HRep &ext, const CoordinateSplit &split,
                     const RVector &d) {
  return feasible_point(fiber(ext, split, d, true)).has_value();
}

// base + t·dir for t = 1, 2, 4, ... until `inside` fails. Callers guarantee
// that dir is not a recession direction of the set `inside` tests.
RVector walk_out(const RVector &base, const RVector &dir,
                 const std::function<bool(const RVector &)> &inside) {
  Rational step = 1;
  for (;;) {
    RVector x = add(base, scale(dir, step));
    if (!inside(x))
      return x;
    step *= 2;
  }
}

// Rays and both orientations of lines.
std::vector<RVector> directions(const VRep &v) {
  std::vector<RVector> out = v.rays;
  for (const auto &l : v.lines) {
    out.push_back(l);
    out.push_back(scale(l, -1));
  }
  return out;
}

EfVerdict failure(RVector witness, EfDetail detail) {
  return EfVerdict{false, std::move(witness), detail};
}

// Every reported witness is re-checked with the membership primitives.
void confirm(const EfVerdict &v, const HRep &ext, const CoordinateSplit &split,
             const Polyhedron &target) {
  const RVector &w = *v.witness;
  const bool lifts = has_lift(ext, split, w);
  const bool in_target = contains(target, w);
  const bool ok = v.detail == EfDetail::ProjPointNotInTarget
                      ? (lifts && !in_target)
                      : (!lifts && in_target);
  if (!ok)
    throw VerificationError("extended-formulation witness failed re-check");
}

EfVerdict standard_witness(const HRep &ext, const CoordinateSplit &split,
                           const HRep &proj, const VRep &pv,
                           const Polyhedron &target) {
  const HRep &th = target.h();
  const VRep &tv = target.v();
  for (const auto &p : pv.points)
    if (!h_contains(th, p))
      return failure(p, EfDetail::ProjPointNotInTarget);
  for (const auto &t : tv.points)
    if (!has_lift(ext, split, t))
      return failure(t, EfDetail::TargetPointNoLift);
  for (const auto &d : directions(pv))
    if (!in_recession_cone(th, d))
      return failure(walk_out(tv.points.front(), d,
                              [&](const RVector &x) { return h_contains(th, x); }),
                     EfDetail::ProjPointNotInTarget);
  for (const auto &d : directions(tv))
    if (!in_recession_cone(proj, d))
      return failure(
          walk_out(tv.points.front(), d,
                   [&](const RVector &x) { return h_contains(proj, x); }),
          EfDetail::TargetPointNoLift);
  throw VerificationError("sets differ but no separating witness was found");
}

} // namespace

EfVerdict check_ef_standard(const HRep &ext, const Polyhedron &target,
                            const CoordinateSplit &split) {
  check_split(ext, target, split);
  HRep proj = project_coords(ext, split);
  VRep pv = h_to_v(proj);
  if (sets_equal(proj, pv, target.h(), target.v()))
    return EfVerdict{true, std::nullopt, EfDetail::ProjEqual};
  EfVerdict v = standard_witness(ext, split, proj, pv, target);
  confirm(v, ext, split, target);
  return v;
}

EfVerdict check_ef_iff(const HRep &ext, const Polyhedron &target,
                       const CoordinateSplit &split) {
  check_split(ext, target, split);
  const HRep &th = target.h();
  const VRep &tv = target.v();
  const std::size_t n = ext.dim;

  auto lifted = [&](const RVector &coef) {
    RVector full(n);
    for (std::size_t i = 0; i < split.keep().size(); ++i)
      full[split.keep()[i]] = coef[i];
    return full;
  };

  auto verdict = [&]() -> EfVerdict {
    // (∃w (w, x) ∈ ext) ⇒ x ∈ target: each target constraint is valid on ext.
    auto violated = [&](const RVector &coef, const Rational &rhs,
                        Sense sense) -> std::optional<RVector> {
      LpOutcome out = solve({lifted(coef), sense, ext});
      const bool maximize = sense == Sense::maximize;
      if (out.status == LpStatus::optimal) {
        if (maximize ? *out.value > rhs : *out.value < rhs)
          return split.restrict(*out.point);
        return std::nullopt;
      }
      if (out.status == LpStatus::unbounded) {
        RVector start = split.restrict(*feasible_point(ext));
        RVector dir = split.restrict(*out.ray);
        return walk_out(start, dir, [&](const RVector &x) {
          Rational lhs = dot(coef, x);
          return maximize ? lhs <= rhs : lhs >= rhs;
        });
      }
      return std::nullopt;
    };
    if (tv.is_empty()) {
      if (auto f = feasible_point(ext))
        return failure(split.restrict(*f), EfDetail::ProjPointNotInTarget);
      return EfVerdict{true, std::nullopt, EfDetail::ProjEqual};
    }
    for (const auto &c : th.equalities) {
      if (auto w = violated(c.coef, c.rhs, Sense::maximize))
        return failure(*w, EfDetail::ProjPointNotInTarget);
      if (auto w = violated(c.coef, c.rhs, Sense::minimize))
        return failure(*w, EfDetail::ProjPointNotInTarget);
    }
    for (const auto &c : th.inequalities)
      if (auto w = violated(c.coef, c.rhs, Sense::maximize))
        return failure(*w, EfDetail::ProjPointNotInTarget);

    // x ∈ target ⇒ ∃w (w, x) ∈ ext: generators and directions lift.
    for (const auto &t : tv.points)
      if (!has_lift(ext, split, t))
        return failure(t, EfDetail::TargetPointNoLift);
    for (const auto &d : directions(tv))
      if (!direction_lifts(ext, split, d))
        return failure(walk_out(tv.points.front(), d,
                                [&](const RVector &x) {
                                  return has_lift(ext, split, x);
                                }),
                       EfDetail::TargetPointNoLift);
    return EfVerdict{true, std::nullopt, EfDetail::ProjEqual};
  }();

  if (!verdict.holds)
    confirm(verdict, ext, split, target);
  return verdict;
}

EfVerdict check_ef_map(const Polyhedron &ext, const Polyhedron &target,
                       const AffineMap &map, bool allow_affine) {
  map.validate();
  if (map.in_dim() != ext.ambient_dim() || map.out_dim() != target.ambient_dim())
    throw DimensionMismatch("map dimensions do not match extension and target");
  if (!allow_affine && !map.is_linear())
    throw Error("map has a nonzero offset; affine maps need the affine flag");

  Polyhedron img = image(ext, map);
  if (poly_equal(img, target))
    return EfVerdict{true, std::nullopt, EfDetail::ImageEqual};

  const HRep &ih = img.h();
  const VRep &iv = img.v();
  const HRep &th = target.h();
  const VRep &tv = target.v();
  auto in_img = [&](const RVector &x) { return h_contains(ih, x); };
  auto in_target = [&](const RVector &x) { return h_contains(th, x); };

  auto find = [&]() -> RVector {
    for (const auto &p : iv.points)
      if (!in_target(p))
        return p;
    for (const auto &t : tv.points)
      if (!in_img(t))
        return t;
    for (const auto &d : directions(iv))
      if (!in_recession_cone(th, d))
        return walk_out(tv.points.front(), d, in_target);
    for (const auto &d : directions(tv))
      if (!in_recession_cone(ih, d))
        return walk_out(iv.points.front(), d, in_img);
    throw VerificationError("images differ but no separating witness was found");
  };
  RVector w = find();
  if (in_img(w) == in_target(w))
    throw VerificationError("image witness failed re-check");
  return failure(std::move(w), EfDetail::ImageNotEqual);
}

std::optional<AffineMap> synthesize_linear_map(const Polyhedron &ext,
                                               const Polyhedron &target,
                                               std::size_t enumeration_bound) {
  const VRep &ev = ext.v();
  const VRep &tv = target.v();
  const std::size_t in = ext.ambient_dim(), out = target.ambient_dim();
  const AffineMap zero = AffineMap::linear(RMatrix(out, in));
  if (ev.is_empty())
    return tv.is_empty() ? std::optional(zero) : std::nullopt;
  if (tv.is_empty())
    return std::nullopt;

  const std::size_t np = ev.points.size(), nt = tv.points.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < np; ++i) {
    if (total > enumeration_bound / nt + 1)
      throw EnumerationBoundExceeded("vertex assignment enumeration too large");
    total *= nt;
  }
  if (total > enumeration_bound)
    throw EnumerationBoundExceeded("vertex assignment enumeration has " +
                                   std::to_string(total) + " cases");

  // Unknowns: M (row-major), then per ext ray the target-ray weights μ ≥ 0
  // and target-line weights, then per ext line the target-line weights.
  const std::size_t nm = out * in;
  const std::size_t tr = tv.rays.size(), tl = tv.lines.size();
  const std::size_t er = ev.rays.size(), el = ev.lines.size();
  const std::size_t nvars = nm + er * (tr + tl) + el * tl;
  auto m_var = [&](std::size_t o, std::size_t c) { return o * in + c; };

  HRep base{nvars, {}, {}};
  std::size_t col = nm;
  for (std::size_t j = 0; j < er; ++j) {
    for (std::size_t o = 0; o < out; ++o) {
      RVector coef(nvars);
      for (std::size_t c = 0; c < in; ++c)
        coef[m_var(o, c)] = ev.rays[j][c];
      for (std::size_t k = 0; k < tr; ++k)
        coef[col + k] = -tv.rays[k][o];
      for (std::size_t k = 0; k < tl; ++k)
        coef[col + tr + k] = -tv.lines[k][o];
      base.equalities.push_back({std::move(coef), Rational(0)});
    }
    for (std::size_t k = 0; k < tr; ++k) {
      RVector coef(nvars);
      coef[col + k] = -1;
      base.inequalities.push_back({std::move(coef), Rational(0)});
    }
    col += tr + tl;
  }
  for (std::size_t j = 0; j < el; ++j) {
    for (std::size_t o = 0; o < out; ++o) {
      RVector coef(nvars);
      for (std::size_t c = 0; c < in; ++c)
        coef[m_var(o, c)] = ev.lines[j][c];
      for (std::size_t k = 0; k < tl; ++k)
        coef[col + k] = -tv.lines[k][o];
      base.equalities.push_back({std::move(coef), Rational(0)});
    }
    col += tl;
  }

  const bool pointed = tv.rays.empty() && tv.lines.empty();
  std::vector<std::size_t> assign(np, 0);
  for (std::size_t iter = 0; iter < total; ++iter) {
    if (iter > 0) {
      std::size_t i = np;
      while (i-- > 0) {
        if (++assign[i] < nt)
          break;
        assign[i] = 0;
      }
    }
    // A pointed target's vertices must all be images of ext vertices.
    if (pointed) {
      std::vector<bool> hit(nt, false);
      for (std::size_t a : assign)
        hit[a] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end())
        continue;
    }
    HRep sys = base;
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t o = 0; o < out; ++o) {
        RVector coef(nvars);
        for (std::size_t c = 0; c < in; ++c)
          coef[m_var(o, c)] = ev.points[i][c];
        sys.equalities.push_back({std::move(coef), tv.points[assign[i]][o]});
      }
    auto sol = feasible_point(sys);
    if (!sol)
      continue;
    RMatrix m(out, in);
    for (std::size_t o = 0; o < out; ++o)
      for (std::size_t c = 0; c < in; ++c)
        m(o, c) = (*sol)[m_var(o, c)];
    AffineMap candidate = AffineMap::linear(std::move(m));
    if (check_ef_map(ext, target, candidate).holds)
      return candidate;
  }
  return std::nullopt;
}

SizeReport lemma9_size_report(const HRep &ext, const HRep &target) {
  HRep e = remove_redundancy(ext);
  HRep t = remove_redundancy(target);
  SizeReport r;
  r.ext_inequalities = e.inequalities.size();
  r.ext_equalities = e.equalities.size();
  r.target_inequalities = t.inequalities.size();
  r.target_equalities = t.equalities.size();
  r.ext_ge_target = r.ext_size() >= r.target_size();
  return r;
}

} // namespace polyef
