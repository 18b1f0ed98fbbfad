#include "su11/bloch_ode.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "su11/error.hpp"
#include "su11/map_dynamics.hpp"
#include "su11/su11.hpp"

namespace su11 {

namespace {

void check_config(const OdeConfig& cfg) {
  if (!(cfg.step > 0.0)) throw Error(ErrorKind::InvalidArgument, "ODE step must be positive");
  if (cfg.step > kMaxOdeStep) {
    std::ostringstream os;
    os << "ODE step " << cfg.step << " exceeds " << kMaxOdeStep;
    throw Error(ErrorKind::StepTooLarge, os.str());
  }
  if (cfg.reproject_every < 0) throw Error(ErrorKind::InvalidArgument, "reproject_every must be >= 0");
}

void check_initial(const BlochParams& params, const MVec3& r0) {
  validate(params);
  CaseClass actual;
  try {
    actual = classify(r0);
  } catch (const Error& e) {
    throw Error(ErrorKind::ClassMismatch, std::string("initial vector: ") + e.what());
  }
  if (actual != params.cls) throw Error(ErrorKind::ClassMismatch, "initial vector class differs from scenario");
}

MVec3 rk4_step(const BlochParams& params, double theta, const MVec3& r, double h) {
  const MVec3 k1 = rhs(params, theta, r);
  const MVec3 k2 = rhs(params, theta + 0.5 * h, r + (0.5 * h) * k1);
  const MVec3 k3 = rhs(params, theta + 0.5 * h, r + (0.5 * h) * k2);
  const MVec3 k4 = rhs(params, theta + h, r + h * k3);
  return r + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_blowup(const MVec3& r, double theta) {
  if (!is_finite(r) || max_abs(r) > kBlowupMagnitude) {
    std::ostringstream os;
    os << "state exceeded " << kBlowupMagnitude << " at theta = " << theta;
    throw Error(ErrorKind::Blowup, os.str());
  }
}

// Steps from theta0 towards theta1, calling visit(theta, r) after each step.
template <typename Visit>
MVec3 march(const BlochParams& params, MVec3 r, double theta0, double theta1, const OdeConfig& cfg,
            Visit&& visit) {
  const double span = theta1 - theta0;
  if (!(span > 0.0)) return r;
  // Full steps on the grid theta0 + i * step, then one shortened step that
  // lands exactly on theta1.
  const auto n_steps = std::max(1LL, static_cast<long long>(std::ceil(span / cfg.step - 1e-9)));
  long long taken = 0;
  double theta = theta0;
  auto advance = [&](double next_theta) {
    r = rk4_step(params, theta, r, next_theta - theta);
    theta = next_theta;
    ++taken;
    if (cfg.reproject_every > 0 && taken % cfg.reproject_every == 0) r = reproject(r, params.cls);
    check_blowup(r, theta);
    visit(theta, r);
  };
  for (long long i = 1; i < n_steps; ++i) advance(theta0 + static_cast<double>(i) * cfg.step);
  advance(theta1);
  return r;
}

}  // namespace

void check_growth_cap(const BlochParams& params, double theta_end) {
  if (params.cls != CaseClass::Hyperbolic) return;
  const double rate = 2.0 * std::fmax(1.0, std::fabs(params.lambda));
  if (std::cosh(rate * std::fabs(theta_end)) >= kHyperbolicGrowthCap) {
    std::ostringstream os;
    os << "hyperbolic run to theta = " << theta_end << " would exceed growth cap " << kHyperbolicGrowthCap;
    throw Error(ErrorKind::Blowup, os.str());
  }
}

MVec3 p_of_theta(const BlochParams& params, double theta) {
  return adjoint_closed_form(2.0 * theta, params.q, params.p, params.cls);
}

MVec3 u_of_theta(const BlochParams& params, double theta) {
  return params.q + params.lambda * p_of_theta(params, theta);
}

MVec3 rhs(const BlochParams& params, double theta, const MVec3& r) {
  return -2.0 * mcross(r, u_of_theta(params, theta));
}

MVec3 propagate(const BlochParams& params, const MVec3& r, double theta0, double theta1, const OdeConfig& cfg) {
  check_config(cfg);
  if (theta1 < theta0) throw Error(ErrorKind::InvalidArgument, "backward integration is not supported");
  return march(params, r, theta0, theta1, cfg, [](double, const MVec3&) {});
}

Trajectory integrate(const BlochParams& params, const MVec3& r0, double theta_end, const OdeConfig& cfg) {
  check_config(cfg);
  check_initial(params, r0);
  if (!(theta_end > 0.0)) throw Error(ErrorKind::InvalidArgument, "theta_end must be positive");
  check_growth_cap(params, theta_end);
  Trajectory traj{params, r0, {}, Route::OdeIntegrated};
  traj.samples.reserve(static_cast<std::size_t>(theta_end / cfg.step) + 2);
  traj.samples.push_back({0.0, r0});
  march(params, r0, 0.0, theta_end, cfg,
        [&traj](double theta, const MVec3& r) { traj.samples.push_back({theta, r}); });
  return traj;
}

StroboscopicReport stroboscopic_residual(const BlochParams& params, const MVec3& r0, double alpha, int k_max,
                                         const OdeConfig& cfg, double chi0) {
  check_config(cfg);
  check_initial(params, r0);
  if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  if (k_max < 0) throw Error(ErrorKind::InvalidArgument, "K_max must be non-negative");
  check_growth_cap(params, alpha * k_max);

  const AxisAngle q{alpha, params.q, params.cls};
  const AxisAngle p{2.0 * params.lambda * alpha, params.p, params.cls};
  const GroupElement r0_elem = exp_element(chi0, r0, params.cls);

  StroboscopicReport report;
  report.deviations.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  MVec3 r = r0;
  for (int k = 1; k <= k_max; ++k) {
    r = march(params, r, (k - 1) * alpha, k * alpha, cfg, [](double, const MVec3&) {});
    const MVec3 discrete = orbit_vector(exact_R2K(q, p, r0_elem, k), chi0, params.cls);
    const double dev = euclidean_norm(r - discrete);
    report.deviations[static_cast<std::size_t>(k)] = dev;
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  return report;
}

}  // namespace su11
