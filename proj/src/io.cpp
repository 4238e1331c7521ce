#include "polyef/io.hpp"
#include "polyef/error.hpp"

#include <initializer_list>
#include <string_view>

namespace polyef::io {

namespace {

[[noreturn]] void fail(const std::string &what) { throw ParseError(what); }

void expect_object(const Json &j, std::string_view what,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object())
    fail(std::string(what) + " must be a JSON object");
  for (const auto &[key, _] : j.items()) {
    bool known = false;
    for (auto a : allowed)
      known = known || key == a;
    if (!known)
      fail("unknown key '" + key + "' in " + std::string(what));
  }
}

const Json &require(const Json &j, const char *key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end())
    fail(std::string(what) + " is missing '" + key + "'");
  return *it;
}

std::vector<RVector> vectors_from_json(const Json &j, std::size_t dim,
                                       const char *what) {
  if (!j.is_array())
    fail(std::string(what) + " must be an array");
  std::vector<RVector> out;
  for (const auto &e : j) {
    RVector v = vector_from_json(e);
    if (v.size() != dim)
      throw DimensionMismatch(std::string(what) + " entry has length " +
                              std::to_string(v.size()) + ", expected " +
                              std::to_string(dim));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Constraint> constraints_from_json(const Json &j, std::size_t dim,
                                              const char *what) {
  if (!j.is_array())
    fail(std::string(what) + " must be an array");
  std::vector<Constraint> out;
  for (const auto &e : j) {
    expect_object(e, what, {"coef", "rhs"});
    RVector coef = vector_from_json(require(e, "coef", what));
    if (coef.size() != dim)
      throw DimensionMismatch(std::string(what) + " coefficient vector has length " +
                              std::to_string(coef.size()) + ", expected " +
                              std::to_string(dim));
    out.push_back({std::move(coef), rational_from_json(require(e, "rhs", what))});
  }
  return out;
}

Json constraints_json(const std::vector<Constraint> &cs) {
  Json out = Json::array();
  for (const auto &c : cs)
    out.push_back(Json{{"coef", to_json(c.coef)}, {"rhs", to_json(c.rhs)}});
  return out;
}

Json optional_json(const std::optional<RVector> &v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json optional_json(const std::optional<Rational> &q) {
  return q ? to_json(*q) : Json(nullptr);
}

} // namespace

Rational rational_from_json(const Json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return parse_rational(j.dump());
  if (j.is_number_float())
    fail("floating-point literal " + j.dump() +
         " is not exact; write it as a string such as \"22.5\"");
  fail("expected a rational, got " + j.dump());
}

RVector vector_from_json(const Json &j) {
  if (!j.is_array())
    fail("expected an array of rationals, got " + j.dump());
  RVector out;
  out.reserve(j.size());
  for (const auto &e : j)
    out.push_back(rational_from_json(e));
  return out;
}

RMatrix matrix_from_json(const Json &j) {
  if (!j.is_array() || j.empty())
    fail("matrix must be a nonempty array of rows");
  std::vector<RVector> rows;
  for (const auto &r : j)
    rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.front().size();
  if (cols == 0)
    fail("matrix rows must be nonempty");
  return RMatrix::from_rows(rows, cols);
}

Polyhedron polyhedron_from_json(const Json &j, const Limits &limits) {
  expect_object(j, "polyhedron", {"dim", "hrep", "vrep"});
  const Json &dj = require(j, "dim", "polyhedron");
  if (!dj.is_number_integer() || dj.get<long long>() < 0)
    fail("polyhedron 'dim' must be a nonnegative integer");
  const auto dim = dj.get<std::size_t>();
  if (dim == 0)
    fail("zero-dimensional ambient space is not supported");

  std::optional<HRep> h;
  std::optional<VRep> v;
  if (auto it = j.find("hrep"); it != j.end()) {
    expect_object(*it, "hrep", {"inequalities", "equalities"});
    HRep hr{dim, {}, {}};
    if (auto i = it->find("inequalities"); i != it->end())
      hr.inequalities = constraints_from_json(*i, dim, "inequality");
    if (auto e = it->find("equalities"); e != it->end())
      hr.equalities = constraints_from_json(*e, dim, "equality");
    h = std::move(hr);
  }
  if (auto it = j.find("vrep"); it != j.end()) {
    expect_object(*it, "vrep", {"points", "rays", "lines"});
    VRep vr{dim, {}, {}, {}};
    if (auto p = it->find("points"); p != it->end())
      vr.points = vectors_from_json(*p, dim, "point");
    if (auto r = it->find("rays"); r != it->end())
      vr.rays = vectors_from_json(*r, dim, "ray");
    if (auto l = it->find("lines"); l != it->end())
      vr.lines = vectors_from_json(*l, dim, "line");
    try {
      vr.validate();
    } catch (const DimensionMismatch &) {
      throw;
    } catch (const Error &e) {
      fail(e.what());
    }
    v = std::move(vr);
  }
  if (h && v)
    return Polyhedron::from_both(std::move(*h), std::move(*v), limits);
  if (h)
    return Polyhedron::from_h(std::move(*h), limits);
  if (v)
    return Polyhedron::from_v(std::move(*v), limits);
  fail("polyhedron needs 'hrep' or 'vrep'");
}

AffineMap affine_map_from_json(const Json &j) {
  expect_object(j, "affine map", {"matrix", "offset"});
  AffineMap map = AffineMap::linear(matrix_from_json(require(j, "matrix", "affine map")));
  if (auto it = j.find("offset"); it != j.end())
    map.offset = vector_from_json(*it);
  map.validate();
  return map;
}

ReductionInstance reduction_instance_from_json(const Json &j) {
  expect_object(j, "reduction instance", {"X", "Y", "graph", "alpha"});
  std::optional<Polyhedron> x;
  if (auto it = j.find("X"); it != j.end() && !it->is_null())
    x = polyhedron_from_json(*it);
  Polyhedron y = polyhedron_from_json(require(j, "Y", "reduction instance"));
  const Json &g = require(j, "graph", "reduction instance");
  expect_object(g, "graph", {"B", "C", "b"});
  AffineGraph graph = normalize_graph(matrix_from_json(require(g, "B", "graph")),
                                      matrix_from_json(require(g, "C", "graph")),
                                      vector_from_json(require(g, "b", "graph")));
  ReductionInstance inst{std::move(x), std::move(y), std::move(graph),
                         vector_from_json(require(j, "alpha", "reduction instance"))};
  inst.validate();
  return inst;
}

Json parse(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const Rational &q) { return to_string(q); }

Json to_json(const RVector &v) {
  Json out = Json::array();
  for (const auto &q : v)
    out.push_back(to_string(q));
  return out;
}

Json to_json(const RMatrix &m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const HRep &h) {
  return Json{{"inequalities", constraints_json(h.inequalities)},
              {"equalities", constraints_json(h.equalities)}};
}

Json to_json(const VRep &v) {
  auto list = [](const std::vector<RVector> &vs) {
    Json out = Json::array();
    for (const auto &x : vs)
      out.push_back(to_json(x));
    return out;
  };
  return Json{{"points", list(v.points)}, {"rays", list(v.rays)},
              {"lines", list(v.lines)}};
}

Json polyhedron_json(std::size_t dim, const HRep *h, const VRep *v) {
  Json out{{"dim", dim}};
  if (h)
    out["hrep"] = to_json(*h);
  if (v)
    out["vrep"] = to_json(*v);
  return out;
}

Json to_json(const AffineMap &map) {
  return Json{{"matrix", to_json(map.matrix)}, {"offset", to_json(map.offset)}};
}

Json to_json(const LpOutcome &out) {
  Json j{{"status", to_string(out.status)},
         {"point", optional_json(out.point)},
         {"value", optional_json(out.value)},
         {"ray", optional_json(out.ray)}};
  return j;
}

Json to_json(const EfVerdict &verdict) {
  return Json{{"holds", verdict.holds},
              {"detail", to_string(verdict.detail)},
              {"witness", optional_json(verdict.witness)}};
}

Json to_json(const SizeReport &r) {
  return Json{
      {"measure", "irredundant representation size of the given descriptions; "
                  "not a computed extension complexity"},
      {"convention", "an equality counts as two inequalities in 'size'"},
      {"ext", {{"inequalities", r.ext_inequalities},
               {"equalities", r.ext_equalities},
               {"size", r.ext_size()}}},
      {"target", {{"inequalities", r.target_inequalities},
                  {"equalities", r.target_equalities},
                  {"size", r.target_size()}}},
      {"ext_ge_target", r.ext_ge_target}};
}

Json to_json(const AffineGraph &g) {
  Json j{{"B", to_json(g.B())},       {"C", to_json(g.C())},
         {"b", to_json(g.b())},       {"cbar", to_json(g.cbar())},
         {"bbar", to_json(g.bbar())}, {"consistent", g.consistent()},
         {"normal_form_exact", g.normal_form_exact()}};
  if (!g.warning().empty())
    j["warning"] = g.warning();
  return j;
}

Json to_json(const TwoStepResult &r) {
  return Json{{"status", to_string(r.status)},
              {"reduced_objective", to_json(r.reduced_objective)},
              {"constant", to_json(r.constant)},
              {"y", optional_json(r.y)},
              {"x", optional_json(r.x)},
              {"value", optional_json(r.value)},
              {"ray", optional_json(r.ray)}};
}

Json to_json(const EquivalenceReport &r) {
  auto leg = [](const LegResult &l) {
    return Json{{"status", to_string(l.status)},
                {"value", optional_json(l.value)},
                {"point", optional_json(l.point)}};
  };
  return Json{{"lp0", leg(r.lp0)},
              {"lp1", leg(r.lp1)},
              {"lp2", leg(r.lp2)},
              {"retrieved_x", optional_json(r.retrieved_x)},
              {"values_equal", r.values_equal},
              {"retrieved_optimal", r.retrieved_optimal}};
}

Json to_json(const CorrespondenceReport &r) {
  return Json{{"redundant", r.redundant},
              {"injective", r.injective},
              {"image_equal", r.image_equal},
              {"bijective", r.bijective()},
              {"reason", r.reason}};
}

} // namespace polyef::io
