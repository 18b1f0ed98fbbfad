#include "su11/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "su11/error.hpp"
#include "su11/su11.hpp"

namespace su11 {

namespace {

void require_class(const BlochParams& params, const MVec3& r0) {
  validate(params);
  CaseClass actual;
  try {
    actual = classify(r0);
  } catch (const Error& e) {
    throw Error(ErrorKind::ClassMismatch, std::string("initial vector: ") + e.what());
  }
  if (actual != params.cls) {
    throw Error(ErrorKind::ClassMismatch, "initial vector is " + std::string(to_string(actual)) +
                                              ", scenario is " + std::string(to_string(params.cls)));
  }
}

void require_exact_class(const BlochParams& params, CaseClass wanted) {
  if (params.cls != wanted) {
    throw Error(ErrorKind::WrongClass, "operation needs a " + std::string(to_string(wanted)) +
                                           " scenario, got " + std::string(to_string(params.cls)));
  }
}

}  // namespace

void validate(const BlochParams& params) {
  if (!std::isfinite(params.lambda)) throw Error(ErrorKind::InvalidArgument, "lambda must be finite");
  for (const auto& [name, v] : {std::pair{"q", params.q}, std::pair{"p", params.p}}) {
    CaseClass actual;
    try {
      actual = classify(v);
    } catch (const Error& e) {
      throw Error(ErrorKind::ClassMismatch, std::string(name) + ": " + e.what());
    }
    if (actual != params.cls) {
      throw Error(ErrorKind::ClassMismatch, std::string(name) + " is " + std::string(to_string(actual)) +
                                                ", scenario is " + std::string(to_string(params.cls)));
    }
  }
}

std::string_view to_string(Route route) noexcept {
  switch (route) {
    case Route::ClosedForm: return "closed-form";
    case Route::MapIterated: return "map";
    case Route::OdeIntegrated: return "ode";
  }
  return "unknown";
}

Route route_from_string(std::string_view name) {
  if (name == "closed-form") return Route::ClosedForm;
  if (name == "map") return Route::MapIterated;
  if (name == "ode") return Route::OdeIntegrated;
  throw Error(ErrorKind::Parse, "unknown route '" + std::string(name) + "'");
}

MVec3 intermediate_t(const BlochParams& params, const MVec3& r0, double theta) {
  require_class(params, r0);
  return adjoint_closed_form(2.0 * params.lambda * theta, params.p, r0, params.cls);
}

MVec3 trajectory_point(const BlochParams& params, const MVec3& r0, double theta) {
  const MVec3 t = intermediate_t(params, r0, theta);
  return adjoint_closed_form(2.0 * theta, params.q, t, params.cls);
}

Trajectory sample_closed_form(const BlochParams& params, const MVec3& r0, const std::vector<double>& thetas) {
  Trajectory traj{params, r0, {}, Route::ClosedForm};
  traj.samples.reserve(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (i > 0 && !(thetas[i] > thetas[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "sample thetas must be strictly increasing");
    }
    traj.samples.push_back({thetas[i], trajectory_point(params, r0, thetas[i])});
  }
  return traj;
}

double decoupled_component(const BlochParams& params, const MVec3& r0, double theta) {
  return mdot(trajectory_point(params, r0, theta), params.q);
}

EllipticBounds elliptic_bounds(const BlochParams& params, const MVec3& r0) {
  require_exact_class(params, CaseClass::Elliptic);
  require_class(params, r0);
  if (!(r0.x3 > 0.0)) throw Error(ErrorKind::LowerSheet, "initial vector is on the lower sheet");
  if (!(params.q.x3 > 0.0)) throw Error(ErrorKind::LowerSheet, "q is on the lower sheet");
  EllipticBounds out;
  out.a = mdot(r0, params.q);
  out.b = mdot(mcross(r0, params.p), params.q);
  out.c = mdot(params.p, r0) * mdot(params.p, params.q);
  const double radius = std::hypot(out.b, out.a - out.c);
  out.A1 = out.c - radius;
  out.A2 = out.c + radius;
  return out;
}

double parabolic_line(const BlochParams& params, const MVec3& r0, double theta) {
  require_exact_class(params, CaseClass::Parabolic);
  require_class(params, r0);
  const double a = mdot(r0, params.q);
  const double b = mdot(mcross(r0, params.p), params.q);
  const double c = mdot(params.p, r0) * mdot(params.p, params.q);
  const double g = params.lambda * theta;
  return a - 2.0 * g * b + 2.0 * g * g * c;
}

SymmetryReport symmetry_order_check(const BlochParams& params, const MVec3& r0, int n_samples) {
  require_exact_class(params, CaseClass::Elliptic);
  if (params.lambda == 0.0) throw Error(ErrorKind::InvalidArgument, "lambda must be non-zero");
  if (n_samples < 1) throw Error(ErrorKind::InvalidArgument, "n_samples must be positive");
  SymmetryReport report;
  report.period = std::numbers::pi / std::fabs(params.lambda);
  report.n_samples = n_samples;
  const double turn = 2.0 * report.period;
  for (int i = 0; i < n_samples; ++i) {
    const double theta = report.period * i / n_samples;
    const MVec3 later = trajectory_point(params, r0, theta + report.period);
    const MVec3 rotated = adjoint_closed_form(turn, params.q, trajectory_point(params, r0, theta), params.cls);
    report.max_deviation = std::fmax(report.max_deviation, euclidean_norm(later - rotated));
  }
  return report;
}

}  // namespace su11
