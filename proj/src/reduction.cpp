#include "polyef/reduction.hpp"
#include "polyef/error.hpp"

namespace polyef {

const char *const kRedundancyInterpretation =
    "the coupling is redundant for X and Y when every generator of X equals "
    "C̄y + b̄ for some y in Y and every generator of Y is sent into X by "
    "y ↦ C̄y + b̄ (directions through the recession cones)";

AffineGraph normalize_graph(const RMatrix &B, const RMatrix &C,
                            const RVector &b) {
  if (B.rows() != C.rows() || B.rows() != b.size())
    throw DimensionMismatch("normalize_graph: B, C and b have different row counts");

  AffineGraph g;
  g.b_mat_ = B;
  g.c_mat_ = C;
  g.rhs_ = b;
  g.cbar_ = -gram_solve(B, C);
  g.bbar_ = gram_solve(B, RMatrix::column(b)).col(0);

  std::vector<RVector> coupled, augmented;
  for (std::size_t i = 0; i < B.rows(); ++i) {
    RVector row = B.row(i);
    RVector c = C.row(i);
    row.insert(row.end(), c.begin(), c.end());
    coupled.push_back(row);
    row.push_back(b[i]);
    augmented.push_back(std::move(row));
  }
  const std::size_t width = B.cols() + C.cols();
  g.consistent_ = rank(coupled, width) == rank(augmented, width + 1);
  g.normal_form_exact_ =
      mat_mul(B, g.cbar_) == -C && mat_vec(B, g.bbar_) == b;
  if (!g.consistent_)
    g.warning_ = "Bx + Cy = b is inconsistent: L is empty";
  else if (!g.normal_form_exact_)
    g.warning_ = "L constrains y: x = C̄y + b̄ describes L only for y with "
                 "Bx + Cy = b solvable";
  return g;
}

TwoStepResult two_step_solve(const Polyhedron &Y, const AffineGraph &graph,
                             const RVector &alpha) {
  if (alpha.size() != graph.x_dim())
    throw DimensionMismatch("alpha length differs from x dimension");
  if (Y.ambient_dim() != graph.y_dim())
    throw DimensionMismatch("Y dimension differs from the graph's y block");

  TwoStepResult r;
  r.reduced_objective = mat_vec(graph.cbar().transpose(), alpha);
  r.constant = dot(alpha, graph.bbar());
  LpOutcome out = solve({r.reduced_objective, Sense::minimize, Y.h()});
  r.status = out.status;
  if (out.status == LpStatus::optimal) {
    r.y = *out.point;
    r.x = graph.retrieve(*r.y);
    r.value = dot(alpha, *r.x);
    if (verification_enabled() && *r.value != *out.value + r.constant)
      throw VerificationError("two-step value differs from reduced optimum");
  } else if (out.status == LpStatus::unbounded) {
    r.ray = out.ray;
  }
  return r;
}

void ReductionInstance::validate() const {
  if (X && X->ambient_dim() != graph.x_dim())
    throw DimensionMismatch("X dimension differs from the graph's x block");
  if (Y.ambient_dim() != graph.y_dim())
    throw DimensionMismatch("Y dimension differs from the graph's y block");
  if (alpha.size() != graph.x_dim())
    throw DimensionMismatch("alpha length differs from x dimension");
}

namespace {

LegResult leg(const LpOutcome &out) {
  return LegResult{out.status, out.value, out.point};
}

// {(x, y) : x ∈ X, y ∈ Y, Bx + Cy = b}.
HRep product_system(const HRep &X, const HRep &Y, const AffineGraph &g) {
  const std::size_t p = X.dim, q = Y.dim;
  HRep out{p + q, {}, {}};
  auto place = [&](const Constraint &c, std::size_t at) {
    RVector coef(p + q);
    std::copy(c.coef.begin(), c.coef.end(), coef.begin() + static_cast<std::ptrdiff_t>(at));
    return Constraint{std::move(coef), c.rhs};
  };
  for (const auto &c : X.inequalities)
    out.inequalities.push_back(place(c, 0));
  for (const auto &c : X.equalities)
    out.equalities.push_back(place(c, 0));
  for (const auto &c : Y.inequalities)
    out.inequalities.push_back(place(c, p));
  for (const auto &c : Y.equalities)
    out.equalities.push_back(place(c, p));
  for (std::size_t i = 0; i < g.B().rows(); ++i) {
    RVector coef = g.B().row(i);
    RVector c = g.C().row(i);
    coef.insert(coef.end(), c.begin(), c.end());
    out.equalities.push_back({std::move(coef), g.b()[i]});
  }
  return out;
}

// Y ∩ {C̄y + b̄ = x}, or its recession version {C̄d = x} over rec(Y).
HRep fiber(const HRep &Y, const AffineGraph &g, const RVector &x,
           bool homogeneous) {
  HRep out{Y.dim, {}, {}};
  for (auto c : Y.inequalities) {
    if (homogeneous)
      c.rhs = 0;
    out.inequalities.push_back(std::move(c));
  }
  for (auto c : Y.equalities) {
    if (homogeneous)
      c.rhs = 0;
    out.equalities.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < g.x_dim(); ++i)
    out.equalities.push_back(
        {g.cbar().row(i), homogeneous ? x[i] : Rational(x[i] - g.bbar()[i])});
  return out;
}

} // namespace

EquivalenceReport verify_equivalence(const ReductionInstance &inst,
                                     const RVector &alpha) {
  if (!inst.X)
    throw Error("verify_equivalence needs X with an H-representation");
  ReductionInstance checked = inst;
  checked.alpha = alpha;
  checked.validate();

  const HRep &xh = inst.X->h();
  const HRep &yh = inst.Y.h();
  EquivalenceReport rep;
  rep.lp0 = leg(solve({alpha, Sense::minimize, xh}));

  RVector lifted_alpha = alpha;
  lifted_alpha.resize(xh.dim + yh.dim);
  rep.lp1 = leg(solve({lifted_alpha, Sense::minimize,
                       product_system(xh, yh, inst.graph)}));

  TwoStepResult two = two_step_solve(inst.Y, inst.graph, alpha);
  rep.lp2 = LegResult{two.status, two.value, two.y};
  rep.retrieved_x = two.x;

  rep.values_equal = rep.lp0.status == rep.lp1.status &&
                     rep.lp1.status == rep.lp2.status &&
                     (rep.lp0.status != LpStatus::optimal ||
                      (*rep.lp0.value == *rep.lp1.value &&
                       *rep.lp1.value == *rep.lp2.value));
  rep.retrieved_optimal = rep.lp0.status == LpStatus::optimal &&
                          two.x.has_value() && h_contains(xh, *two.x) &&
                          dot(alpha, *two.x) == *rep.lp0.value;
  return rep;
}

EquivalenceReport verify_equivalence(const ReductionInstance &inst) {
  return verify_equivalence(inst, inst.alpha);
}

bool check_graph_redundancy(const Polyhedron &X, const Polyhedron &Y,
                            const AffineGraph &graph) {
  if (X.ambient_dim() != graph.x_dim() || Y.ambient_dim() != graph.y_dim())
    throw DimensionMismatch("X or Y dimension differs from the graph");
  const HRep &xh = X.h();
  const VRep &xv = X.v();
  const HRep &yh = Y.h();
  const VRep &yv = Y.v();

  for (const auto &x : xv.points)
    if (!feasible_point(fiber(yh, graph, x, false)))
      return false;
  auto direction_hit = [&](const RVector &d) {
    return feasible_point(fiber(yh, graph, d, true)).has_value();
  };
  for (const auto &d : xv.rays)
    if (!direction_hit(d))
      return false;
  for (const auto &l : xv.lines)
    if (!direction_hit(l) || !direction_hit(scale(l, -1)))
      return false;

  const AffineMap map = graph.as_map();
  for (const auto &y : yv.points)
    if (!h_contains(xh, map.apply(y)))
      return false;
  for (const auto &r : yv.rays)
    if (!in_recession_cone(xh, map.apply_linear(r)))
      return false;
  for (const auto &l : yv.lines) {
    RVector d = map.apply_linear(l);
    if (!in_recession_cone(xh, d) || !in_recession_cone(xh, scale(d, -1)))
      return false;
  }
  return true;
}

CorrespondenceReport correspondence_report(const Polyhedron &X,
                                           const Polyhedron &Y,
                                           const AffineGraph &graph) {
  CorrespondenceReport r;
  r.redundant = check_graph_redundancy(X, Y, graph);
  if (!r.redundant) {
    r.reason = "coupling is not redundant for X and Y";
    return r;
  }
  const VRep &yv = Y.v();
  std::vector<RVector> dirs;
  for (std::size_t i = 1; i < yv.points.size(); ++i)
    dirs.push_back(sub(yv.points[i], yv.points[0]));
  dirs.insert(dirs.end(), yv.rays.begin(), yv.rays.end());
  dirs.insert(dirs.end(), yv.lines.begin(), yv.lines.end());
  std::vector<RVector> images;
  for (const auto &d : dirs)
    images.push_back(mat_vec(graph.cbar(), d));
  r.injective = rank(images, graph.x_dim()) == rank(dirs, graph.y_dim());
  r.image_equal = poly_equal(image(Y, graph.as_map()), X);
  if (!r.injective)
    r.reason = "y ↦ C̄y + b̄ collapses a direction of Y";
  else if (!r.image_equal)
    r.reason = "image of Y differs from X";
  return r;
}

bool is_bijective_on(const Polyhedron &X, const Polyhedron &Y,
                     const AffineGraph &graph) {
  return correspondence_report(X, Y, graph).bijective();
}

std::optional<RVector> find_inequivalent_alpha(const ReductionInstance &inst) {
  const std::size_t p = inst.graph.x_dim();
  for (std::size_t i = 0; i < p; ++i)
    for (int s : {1, -1}) {
      RVector alpha(p);
      alpha[i] = s;
      EquivalenceReport rep = verify_equivalence(inst, alpha);
      if (!rep.values_equal ||
          (rep.lp0.status == LpStatus::optimal && !rep.retrieved_optimal))
        return alpha;
    }
  return std::nullopt;
}

} // namespace polyef
