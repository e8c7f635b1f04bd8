#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "robineig/errors.hpp"
#include "robineig/optimal_sets.hpp"
#include "robineig/radial.hpp"
#include "robineig/reduction.hpp"
#include "robineig/serialize.hpp"
#include "robineig/sl_core.hpp"
#include "robineig/thresholds.hpp"
#include "robineig/verifier.hpp"

namespace py = pybind11;
using namespace robineig;

namespace {

std::vector<Interval> segments_of(const BangBangWeight& w) {
  return {w.segments().begin(), w.segments().end()};
}

py::dict samples_dict(const EigenResult& r) {
  std::vector<double> x, u, du;
  for (const auto& s : r.samples) {
    x.push_back(s.x);
    u.push_back(s.u);
    du.push_back(s.du);
  }
  py::dict d;
  d["x"] = x;
  d["u"] = u;
  d["du"] = du;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Principal eigenvalues and optimal bang-bang weights for Robin problems";

  // The module attribute keeps the type alive.
  static PyObject* error_type = py::exception<Error>(m, "Error").ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(py::str(e.what()));
      inst.attr("kind") = std::string(e.name());
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  py::enum_<Regime>(m, "Regime")
      .value("Supercritical", Regime::Supercritical)
      .value("Critical", Regime::Critical)
      .value("Subcritical", Regime::Subcritical);
  py::enum_<Variable>(m, "Variable").value("X", Variable::X).value("T", Variable::T).value("R", Variable::R);
  py::enum_<SweepLength>(m, "SweepLength")
      .value("FixedT", SweepLength::FixedT)
      .value("FixedR", SweepLength::FixedR);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 2) throw py::value_error("an interval needs exactly two endpoints");
        return Interval(t[0].cast<double>(), t[1].cast<double>());
      }))
      .def_readonly("a", &Interval::a)
      .def_readonly("b", &Interval::b)
      .def_property_readonly("length", &Interval::length)
      .def("__iter__", [](const Interval& i) { return py::iter(py::make_tuple(i.a, i.b)); })
      .def("__repr__", [](const Interval& i) {
        return "Interval(" + py::repr(py::float_(i.a)).cast<std::string>() + ", " +
               py::repr(py::float_(i.b)).cast<std::string>() + ")";
      });
  py::implicitly_convertible<py::tuple, Interval>();

  py::class_<BangBangWeight>(m, "BangBangWeight")
      .def(py::init<Interval, double, std::vector<Interval>>(), py::arg("domain"), py::arg("kappa"),
           py::arg("segments"))
      .def_property_readonly("domain", &BangBangWeight::domain)
      .def_property_readonly("kappa", &BangBangWeight::kappa)
      .def_property_readonly("segments", &segments_of)
      .def("__call__", &BangBangWeight::evaluate)
      .def_property_readonly("total_length", &BangBangWeight::total_length)
      .def("mean", &weight_mean);

  py::class_<AdmissibilityParams>(m, "AdmissibilityParams")
      .def(py::init([](double m0, double kappa, double beta) {
             AdmissibilityParams p{m0, kappa, beta};
             p.validate();
             return p;
           }),
           py::arg("m0") = 0.5, py::arg("kappa") = 1.0, py::arg("beta") = 0.0)
      .def_readonly("m0", &AdmissibilityParams::m0)
      .def_readonly("kappa", &AdmissibilityParams::kappa)
      .def_readonly("beta", &AdmissibilityParams::beta)
      .def_property_readonly("volume_fraction", &AdmissibilityParams::volume_fraction);

  py::class_<AdmissibilityCheck>(m, "AdmissibilityCheck")
      .def_readonly("admissible", &AdmissibilityCheck::admissible)
      .def_readonly("mean", &AdmissibilityCheck::mean)
      .def_readonly("constraint_active", &AdmissibilityCheck::constraint_active)
      .def_readonly("diagnostic", &AdmissibilityCheck::diagnostic)
      .def("__bool__", [](const AdmissibilityCheck& c) { return c.admissible; });
  m.def("check_admissible", &check_admissible, py::arg("weight"), py::arg("params"));

  py::class_<RobinProblem1D>(m, "RobinProblem1D")
      .def(py::init<BangBangWeight, double, double>(), py::arg("weight"), py::arg("beta_left"),
           py::arg("beta_right"))
      .def(py::init<BangBangWeight, double>(), py::arg("weight"), py::arg("beta"))
      .def_readonly("domain", &RobinProblem1D::domain)
      .def_readonly("beta_left", &RobinProblem1D::beta_left)
      .def_readonly("beta_right", &RobinProblem1D::beta_right)
      .def_readonly("weight", &RobinProblem1D::weight);

  py::class_<EigenResult>(m, "EigenResult")
      .def_readonly("lambda_", &EigenResult::lambda)
      .def_readonly("zero_count", &EigenResult::zero_count)
      .def_readonly("residual", &EigenResult::residual)
      .def_property_readonly("samples", &samples_dict)
      .def("__repr__", [](const EigenResult& r) {
        return "EigenResult(lambda_=" + py::repr(py::float_(r.lambda)).cast<std::string>() + ")";
      });

  m.def("principal_eigenvalue", [](const RobinProblem1D& p) { return principal_eigenvalue(p); },
        py::arg("problem"));

  py::class_<ShellProblem>(m, "ShellProblem")
      .def(py::init<int, double, double, const AdmissibilityParams&, std::vector<Interval>>(), py::arg("n"),
           py::arg("r1"), py::arg("r2"), py::arg("params"), py::arg("segments"))
      .def_readonly("n", &ShellProblem::n)
      .def_readonly("r1", &ShellProblem::r1)
      .def_readonly("r2", &ShellProblem::r2)
      .def_readonly("beta", &ShellProblem::beta)
      .def_readonly("weight_r", &ShellProblem::weight_r)
      .def("with_segments", &ShellProblem::with_segments);

  m.def("radial_principal_eigenvalue", [](const ShellProblem& sp) { return radial_principal_eigenvalue(sp); },
        py::arg("shell"));
  m.def("map_r_to_t", &map_r_to_t, py::arg("n"), py::arg("r"));
  m.def("map_t_to_r", &map_t_to_r, py::arg("n"), py::arg("t"));
  m.def("solid_angle_constant", &solid_angle_constant, py::arg("n"));

  py::class_<ReducedProblem>(m, "ReducedProblem")
      .def_readonly("n", &ReducedProblem::n)
      .def_readonly("t_domain", &ReducedProblem::t_domain)
      .def_readonly("beta_left", &ReducedProblem::beta_left)
      .def_readonly("beta_right", &ReducedProblem::beta_right)
      .def_readonly("lambda_factor", &ReducedProblem::lambda_factor)
      .def_readonly("q", &ReducedProblem::q)
      .def_readonly("q_lower_bound", &ReducedProblem::q_lower_bound)
      .def_readonly("m0_prime", &ReducedProblem::m0_prime)
      .def_readonly("c_prime", &ReducedProblem::c_prime)
      .def_readonly("weight_t", &ReducedProblem::weight_t)
      .def("exact_weight", &ReducedProblem::exact_weight)
      .def("exact_eigenvalue", [](const ReducedProblem& rp) { return reduced_exact_eigenvalue(rp).lambda; });
  m.def("reduce", &reduce, py::arg("shell"), py::arg("q") = py::none());

  py::class_<ThresholdReport>(m, "ThresholdReport")
      .def_readonly("beta_star", &ThresholdReport::beta_star)
      .def_readonly("beta_star_scaled", &ThresholdReport::beta_star_scaled)
      .def_readonly("beta", &ThresholdReport::beta)
      .def_readonly("regime", &ThresholdReport::regime);
  m.def("beta_star", &beta_star, py::arg("c"), py::arg("kappa"));
  m.def("classify_1d", &classify_1d, py::arg("domain"), py::arg("beta"), py::arg("c"), py::arg("kappa"));
  m.def("classify_shell", &classify_shell, py::arg("shell"), py::arg("c_prime"));

  py::class_<SetFamily>(m, "SetFamily")
      .def_readonly("anchor_range", &SetFamily::anchor_range)
      .def_readonly("length", &SetFamily::length)
      .def_readonly("length_variable", &SetFamily::length_variable);
  py::class_<OptimalSetPrediction>(m, "OptimalSetPrediction")
      .def_readonly("regime", &OptimalSetPrediction::regime)
      .def_readonly("sets", &OptimalSetPrediction::sets)
      .def_readonly("family", &OptimalSetPrediction::family)
      .def_readonly("variable", &OptimalSetPrediction::variable);
  m.def("predict_1d", &predict_1d, py::arg("domain"), py::arg("beta"), py::arg("c"), py::arg("kappa"));
  m.def("predict_shell", &predict_shell, py::arg("shell"), py::arg("c_prime"));
  m.def("pullback_to_t", &pullback_to_t, py::arg("prediction"), py::arg("n"));

  py::class_<SweepResult>(m, "SweepResult")
      .def_property_readonly("anchors",
                             [](const SweepResult& s) {
                               std::vector<double> v;
                               for (const auto& p : s.placements) v.push_back(p.anchor);
                               return v;
                             })
      .def_property_readonly("lambdas",
                             [](const SweepResult& s) {
                               std::vector<double> v;
                               for (const auto& p : s.placements) v.push_back(p.lambda);
                               return v;
                             })
      .def_readonly("argmin_anchor", &SweepResult::argmin_anchor)
      .def_readonly("lambda_min", &SweepResult::lambda_min)
      .def_readonly("lambda_range", &SweepResult::lambda_range)
      .def_readonly("grid_spacing", &SweepResult::grid_spacing)
      .def_readonly("set_length", &SweepResult::set_length)
      .def("matches", &argmin_matches, py::arg("prediction"), py::arg("cells") = 1.0);
  m.def("sweep_placements_1d", &sweep_placements_1d, py::arg("domain"), py::arg("beta_left"),
        py::arg("beta_right"), py::arg("c"), py::arg("kappa"), py::arg("grid_points"),
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "sweep_placements_radial",
      [](const ShellProblem& sp, double c, int grid, SweepLength mode) {
        return sweep_placements_radial(sp, c, grid, mode);
      },
      py::arg("shell"), py::arg("c"), py::arg("grid_points"), py::arg("mode") = SweepLength::FixedT,
      py::call_guard<py::gil_scoped_release>());
  m.def("find_threshold", &find_threshold, py::arg("domain"), py::arg("c"), py::arg("kappa"),
        py::arg("bracket"));
  m.def("fd_eigenvalue", &fd_eigenvalue, py::arg("problem"), py::arg("nodes"));

  m.def("weight_to_json", [](const BangBangWeight& w) { return to_json(w).dump(); });
  m.def("weight_from_json", [](const std::string& s) { return weight_from_json(Json::parse(s)); });
}
