#include "polyef/ef.hpp"
#include "polyef/error.hpp"
#include "polyef/fixtures.hpp"
#include "polyef/io.hpp"
#include "polyef/reduction.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace pybind11::detail {

// Rational <-> fractions.Fraction. Loading also accepts int and str.
template <> struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool convert) {
    if (!src)
      return false;
    if (PyLong_Check(src.ptr())) {
      value = mpq_class(py::str(src).cast<std::string>(), 10);
      return true;
    }
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    if (py::isinstance(src, fraction)) {
      value = mpq_class(py::str(src.attr("numerator")).cast<std::string>() + "/" +
                            py::str(src.attr("denominator")).cast<std::string>(),
                        10);
      value.canonicalize();
      return true;
    }
    if (convert && py::isinstance<py::str>(src)) {
      try {
        value = polyef::parse_rational(src.cast<std::string>());
      } catch (const polyef::ParseError &) {
        return false;
      }
      return true;
    }
    return false;
  }

  static handle cast(const mpq_class &q, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num(py::reinterpret_steal<py::object>(
        PyLong_FromString(q.get_num().get_str().c_str(), nullptr, 10)));
    py::int_ den(py::reinterpret_steal<py::object>(
        PyLong_FromString(q.get_den().get_str().c_str(), nullptr, 10)));
    return fraction(num, den).release();
  }
};

// RMatrix <-> list of row lists.
template <> struct type_caster<polyef::RMatrix> {
  PYBIND11_TYPE_CASTER(polyef::RMatrix, const_name("list[list[fractions.Fraction]]"));

  bool load(handle src, bool convert) {
    list_caster<std::vector<polyef::RVector>, polyef::RVector> rows;
    if (!rows.load(src, convert))
      return false;
    auto &r = static_cast<std::vector<polyef::RVector> &>(rows);
    const std::size_t cols = r.empty() ? 0 : r.front().size();
    for (const auto &row : r)
      if (row.size() != cols)
        return false;
    value = polyef::RMatrix::from_rows(r, cols);
    return true;
  }

  static handle cast(const polyef::RMatrix &m, return_value_policy policy,
                     handle parent) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i)
      out.append(py::reinterpret_steal<py::object>(
          list_caster<polyef::RVector, mpq_class>::cast(m.row(i), policy, parent)));
    return out.release();
  }
};

} // namespace pybind11::detail

namespace {

using namespace polyef;

py::object json_to_py(const io::Json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

io::Json py_to_json(const py::object &o) {
  if (py::isinstance<py::str>(o))
    return io::parse(o.cast<std::string>());
  return io::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rational polyhedral computations";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GramSingular>(m, "GramSingular", PyExc_ArithmeticError);
  py::register_exception<EnumerationBoundExceeded>(m, "EnumerationBoundExceeded",
                                                   PyExc_RuntimeError);
  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

  m.def("parse_rational", [](const std::string &s) { return parse_rational(s); });
  m.def("rank", [](const RMatrix &a) { return rank(a); });
  m.def("mat_mul", &mat_mul);
  m.def("solve_square",
        py::overload_cast<const RMatrix &, const RVector &>(&solve_square));
  m.def("gram_solve", &gram_solve);
  m.def("set_verification", &set_verification);
  m.def("verification_enabled", &verification_enabled);

  py::class_<Constraint>(m, "Constraint")
      .def(py::init<RVector, Rational>(), py::arg("coef"), py::arg("rhs"))
      .def_readwrite("coef", &Constraint::coef)
      .def_readwrite("rhs", &Constraint::rhs)
      .def(py::self == py::self)
      .def("__repr__", [](const Constraint &c) {
        return "Constraint(" + py::repr(py::cast(c.coef)).cast<std::string>() +
               ", " + to_string(c.rhs) + ")";
      });

  py::class_<HRep>(m, "HRep")
      .def(py::init([](std::size_t dim, std::vector<Constraint> ineq,
                       std::vector<Constraint> eq) {
             HRep h{dim, std::move(ineq), std::move(eq)};
             h.validate();
             return h;
           }),
           py::arg("dim"), py::arg("inequalities") = std::vector<Constraint>{},
           py::arg("equalities") = std::vector<Constraint>{})
      .def_readonly("dim", &HRep::dim)
      .def_readonly("inequalities", &HRep::inequalities)
      .def_readonly("equalities", &HRep::equalities)
      .def(py::self == py::self);

  py::class_<VRep>(m, "VRep")
      .def(py::init([](std::size_t dim, std::vector<RVector> points,
                       std::vector<RVector> rays, std::vector<RVector> lines) {
             VRep v{dim, std::move(points), std::move(rays), std::move(lines)};
             v.validate();
             return v;
           }),
           py::arg("dim"), py::arg("points") = std::vector<RVector>{},
           py::arg("rays") = std::vector<RVector>{},
           py::arg("lines") = std::vector<RVector>{})
      .def_readonly("dim", &VRep::dim)
      .def_readonly("points", &VRep::points)
      .def_readonly("rays", &VRep::rays)
      .def_readonly("lines", &VRep::lines)
      .def(py::self == py::self);

  py::class_<Polyhedron>(m, "Polyhedron")
      .def_static("from_h", [](HRep h) { return Polyhedron::from_h(std::move(h)); })
      .def_static("from_v", [](VRep v) { return Polyhedron::from_v(std::move(v)); })
      .def_static("from_json",
                  [](const py::object &o) { return io::polyhedron_from_json(py_to_json(o)); })
      .def_property_readonly("ambient_dim", &Polyhedron::ambient_dim)
      .def_property_readonly("h", &Polyhedron::h)
      .def_property_readonly("v", &Polyhedron::v)
      .def("to_json", [](const Polyhedron &p) {
        return json_to_py(io::polyhedron_json(p.ambient_dim(), &p.h(), &p.v()));
      });

  m.def("h_contains", &h_contains);
  m.def("v_contains", &v_contains);
  m.def("contains", &contains);
  m.def("dimension", py::overload_cast<const Polyhedron &>(&dimension));
  m.def("is_bounded", &is_bounded);
  m.def("h_to_v", [](const HRep &h) { return h_to_v(h); });
  m.def("v_to_h", [](const VRep &v) { return v_to_h(v); });
  m.def("is_redundant", &is_redundant);
  m.def("remove_redundancy", &remove_redundancy);
  m.def("poly_equal", &poly_equal);

  py::enum_<LpStatus>(m, "LpStatus")
      .value("optimal", LpStatus::optimal)
      .value("unbounded", LpStatus::unbounded)
      .value("infeasible", LpStatus::infeasible);

  py::class_<LpOutcome>(m, "LpOutcome")
      .def_readonly("status", &LpOutcome::status)
      .def_readonly("point", &LpOutcome::point)
      .def_readonly("value", &LpOutcome::value)
      .def_readonly("ray", &LpOutcome::ray);

  m.def(
      "solve_lp",
      [](const HRep &h, const RVector &objective, bool maximize) {
        return solve({objective, maximize ? Sense::maximize : Sense::minimize, h});
      },
      py::arg("feasible"), py::arg("objective"), py::arg("maximize") = false);
  m.def("feasible_point", &feasible_point);

  py::class_<AffineMap>(m, "AffineMap")
      .def(py::init([](RMatrix matrix, std::optional<RVector> offset) {
             AffineMap a = AffineMap::linear(std::move(matrix));
             if (offset)
               a.offset = std::move(*offset);
             a.validate();
             return a;
           }),
           py::arg("matrix"), py::arg("offset") = py::none())
      .def_readonly("matrix", &AffineMap::matrix)
      .def_readonly("offset", &AffineMap::offset)
      .def("apply", &AffineMap::apply)
      .def(py::self == py::self);

  py::class_<CoordinateSplit>(m, "CoordinateSplit")
      .def(py::init(&CoordinateSplit::keep_only), py::arg("dim"), py::arg("keep"))
      .def_property_readonly("keep", &CoordinateSplit::keep)
      .def_property_readonly("drop", &CoordinateSplit::drop);

  m.def("project_coords", &project_coords);
  m.def("image", &image);
  m.def("graph_polyhedron", &graph_polyhedron);

  py::class_<EfVerdict>(m, "EfVerdict")
      .def_readonly("holds", &EfVerdict::holds)
      .def_readonly("witness", &EfVerdict::witness)
      .def_property_readonly("detail",
                             [](const EfVerdict &v) { return to_string(v.detail); });

  m.def("check_ef_standard", &check_ef_standard);
  m.def("check_ef_iff", &check_ef_iff);
  m.def("check_ef_map", &check_ef_map, py::arg("ext"), py::arg("target"),
        py::arg("map"), py::arg("allow_affine") = false);
  m.def("synthesize_linear_map", &synthesize_linear_map, py::arg("ext"),
        py::arg("target"), py::arg("enumeration_bound") = 10000);
  m.def("size_report", [](const HRep &ext, const HRep &target) {
    return json_to_py(io::to_json(lemma9_size_report(ext, target)));
  });

  m.def("normalize_graph", [](const RMatrix &B, const RMatrix &C, const RVector &b) {
    AffineGraph g = normalize_graph(B, C, b);
    return py::make_tuple(g.cbar(), g.bbar());
  });
  m.def("reduce", [](const py::object &instance) {
    ReductionInstance inst = io::reduction_instance_from_json(py_to_json(instance));
    return json_to_py(io::to_json(verify_equivalence(inst)));
  });

  py::dict fx;
  for (const auto &f : fixtures())
    fx[py::str(std::string(f.name))] = json_to_py(io::parse(std::string(f.payload)));
  m.attr("fixtures") = fx;
}
