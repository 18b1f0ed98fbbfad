#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "su11/bloch_ode.hpp"
#include "su11/closed_form.hpp"
#include "su11/error.hpp"
#include "su11/map_dynamics.hpp"
#include "su11/runner.hpp"
#include "su11/scenario.hpp"

namespace py = pybind11;
using namespace su11;

// MVec3 <-> any length-3 sequence of floats; returned as a tuple.
namespace pybind11::detail {
template <>
struct type_caster<MVec3> {
  PYBIND11_TYPE_CASTER(MVec3, const_name("tuple[float, float, float]"));

  bool load(handle src, bool) {
    if (!src || py::isinstance<py::str>(src) || !PySequence_Check(src.ptr())) return false;
    const auto seq = py::reinterpret_borrow<py::sequence>(src);
    if (seq.size() != 3) return false;
    try {
      value = {seq[0].cast<double>(), seq[1].cast<double>(), seq[2].cast<double>()};
    } catch (const py::cast_error&) {
      return false;
    }
    return true;
  }

  static handle cast(const MVec3& v, return_value_policy, handle) {
    return py::make_tuple(v.x1, v.x2, v.x3).release();
  }
};
}  // namespace pybind11::detail

namespace {

CaseClass cls_of(const std::string& name) { return case_class_from_string(name); }

py::array_t<std::complex<double>> to_array(const Mat2& m) {
  py::array_t<std::complex<double>> out({2, 2});
  auto a = out.mutable_unchecked<2>();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = m(i, j);
  return out;
}

Mat2 from_array(const py::array_t<std::complex<double>, py::array::forcecast>& arr) {
  if (arr.ndim() != 2 || arr.shape(0) != 2 || arr.shape(1) != 2)
    throw Error(ErrorKind::InvalidArgument, "expected a 2x2 matrix");
  const auto a = arr.unchecked<2>();
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = a(i, j);
  return m;
}

BlochParams params_of(const MVec3& q, const MVec3& p, double lambda, const std::string& cls) {
  return {q, p, lambda, cls_of(cls)};
}

py::tuple trajectory_arrays(const Trajectory& t) {
  const auto n = static_cast<py::ssize_t>(t.samples.size());
  py::array_t<double> theta(n);
  py::array_t<double> r({n, static_cast<py::ssize_t>(3)});
  auto th = theta.mutable_unchecked<1>();
  auto rr = r.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& s = t.samples[static_cast<std::size_t>(i)];
    th(i) = s.theta;
    rr(i, 0) = s.r.x1;
    rr(i, 1) = s.r.x2;
    rr(i, 2) = s.r.x3;
  }
  return py::make_tuple(theta, r);
}

}  // namespace

PYBIND11_MODULE(_su11bloch, m) {
  m.doc() = "SU(1,1) group map, closed-form trajectories and Bloch ODE";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(std::string(to_string(e.kind())), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("mdot", [](const MVec3& x, const MVec3& y) { return mdot(x, y); });
  m.def("mcross", [](const MVec3& x, const MVec3& y) { return mcross(x, y); });
  m.def("classify", [](const MVec3& x, double tol) { return std::string(to_string(classify(x, tol))); },
        py::arg("x"), py::arg("tol") = kDefaultClassTol);
  m.def("reproject", [](const MVec3& x, const std::string& cls) { return reproject(x, cls_of(cls)); });
  m.def("kappa_dot", [](const MVec3& x) { return to_array(kappa_dot(x)); });

  py::class_<GroupElement>(m, "GroupElement")
      .def_static("identity", &GroupElement::identity)
      .def_static(
          "from_matrix", [](const py::array_t<std::complex<double>, py::array::forcecast>& a, double tol) {
            return GroupElement::from_matrix(from_array(a), tol);
          },
          py::arg("m"), py::arg("tol") = 1e-12)
      .def("matrix", [](const GroupElement& g) { return to_array(g.matrix()); })
      .def("inverse", &GroupElement::inverse)
      .def("invariant_residual", &GroupElement::invariant_residual)
      .def("__mul__", [](const GroupElement& a, const GroupElement& b) { return a * b; })
      .def("__pow__", [](const GroupElement& g, std::int64_t n) { return power(g, n); });

  m.def("exp_element",
        [](double chi, const MVec3& s, const std::string& cls) { return exp_element(chi, s, cls_of(cls)); },
        py::arg("chi"), py::arg("s"), py::arg("cls"));
  m.def(
      "decompose",
      [](const GroupElement& g, double tol) {
        const auto d = decompose(g, tol);
        py::dict out;
        out["identity"] = d.identity;
        out["sign"] = d.sign;
        if (!d.identity) {
          out["chi"] = d.axis_angle.chi;
          out["axis"] = d.axis_angle.axis;
          out["cls"] = std::string(to_string(d.axis_angle.cls));
        }
        return out;
      },
      py::arg("g"), py::arg("tol") = kDefaultClassTol);
  m.def("adjoint_vec", &adjoint_vec, py::arg("g"), py::arg("t"));
  m.def("adjoint_closed_form",
        [](double gamma, const MVec3& s, const MVec3& t, const std::string& cls) {
          return adjoint_closed_form(gamma, s, t, cls_of(cls));
        },
        py::arg("gamma"), py::arg("s"), py::arg("t"), py::arg("cls"));

  m.def("compute_P", &compute_P, py::arg("q"), py::arg("r0"), py::arg("r1"));
  m.def("compute_R1", &compute_R1, py::arg("q"), py::arg("p"), py::arg("r0"));
  m.def("iterate_R2K", &iterate_R2K, py::arg("q"), py::arg("r0"), py::arg("r1"), py::arg("k"));
  m.def("exact_R2K",
        py::overload_cast<const GroupElement&, const GroupElement&, const GroupElement&, std::int64_t>(&exact_R2K),
        py::arg("q"), py::arg("p"), py::arg("r0"), py::arg("k"));
  m.def(
      "verify_exact_vs_iterated",
      [](const GroupElement& q, const GroupElement& p, const GroupElement& r0, std::int64_t k_max) {
        const auto rep = verify_exact_vs_iterated(q, p, r0, k_max);
        return py::make_tuple(rep.max_deviation, rep.worst_k);
      },
      py::arg("q"), py::arg("p"), py::arg("r0"), py::arg("k_max"));
  m.def("orbit_vector",
        [](const GroupElement& r, double chi0, const std::string& cls) { return orbit_vector(r, chi0, cls_of(cls)); },
        py::arg("r"), py::arg("chi0"), py::arg("cls"));

  m.def("intermediate_t",
        [](const MVec3& q, const MVec3& p, double lambda, const std::string& cls, const MVec3& r0, double theta) {
          return intermediate_t(params_of(q, p, lambda, cls), r0, theta);
        },
        py::arg("q"), py::arg("p"), py::arg("lam"), py::arg("cls"), py::arg("r0"), py::arg("theta"));
  m.def("trajectory_point",
        [](const MVec3& q, const MVec3& p, double lambda, const std::string& cls, const MVec3& r0, double theta) {
          return trajectory_point(params_of(q, p, lambda, cls), r0, theta);
        },
        py::arg("q"), py::arg("p"), py::arg("lam"), py::arg("cls"), py::arg("r0"), py::arg("theta"));
  m.def(
      "elliptic_bounds",
      [](const MVec3& q, const MVec3& p, double lambda, const MVec3& r0) {
        const auto b = elliptic_bounds(params_of(q, p, lambda, "elliptic"), r0);
        py::dict out;
        out["a"] = b.a;
        out["b"] = b.b;
        out["c"] = b.c;
        out["A1"] = b.A1;
        out["A2"] = b.A2;
        return out;
      },
      py::arg("q"), py::arg("p"), py::arg("lam"), py::arg("r0"));
  m.def(
      "symmetry_order_check",
      [](const MVec3& q, const MVec3& p, double lambda, const MVec3& r0, int n_samples) {
        return symmetry_order_check(params_of(q, p, lambda, "elliptic"), r0, n_samples).max_deviation;
      },
      py::arg("q"), py::arg("p"), py::arg("lam"), py::arg("r0"), py::arg("n_samples") = 1024);

  m.def(
      "integrate",
      [](const MVec3& q, const MVec3& p, double lambda, const std::string& cls, const MVec3& r0, double theta_end,
         double step, int reproject_every) {
        return trajectory_arrays(
            integrate(params_of(q, p, lambda, cls), r0, theta_end, OdeConfig{step, reproject_every}));
      },
      py::arg("q"), py::arg("p"), py::arg("lam"), py::arg("cls"), py::arg("r0"), py::arg("theta_end"),
      py::arg("step") = 1e-3, py::arg("reproject_every") = 0);
  m.def(
      "stroboscopic_residual",
      [](const MVec3& q, const MVec3& p, double lambda, const std::string& cls, const MVec3& r0, double alpha,
         int k_max, double step, double chi0) {
        return stroboscopic_residual(params_of(q, p, lambda, cls), r0, alpha, k_max, OdeConfig{step, 0}, chi0)
            .deviations;
      },
      py::arg("q"), py::arg("p"), py::arg("lam"), py::arg("cls"), py::arg("r0"), py::arg("alpha"),
      py::arg("k_max"), py::arg("step") = 1e-3, py::arg("chi0") = 1.0);

  m.def(
      "verify_scenario",
      [](const std::string& path) { return run_verify(load_scenario(path)).to_json().dump(); },
      py::arg("path"), "Runs every check on a scenario file and returns the JSON report as a string.");
}
