#pragma once

#include <vector>

#include "su11/closed_form.hpp"

namespace su11 {

enum class OdeMethod { RK4 };

struct OdeConfig {
  double step = 1e-3;       // theta increment, in (0, 0.1]
  int reproject_every = 0;  // 0 = never
  OdeMethod method = OdeMethod::RK4;
};

inline constexpr double kMaxOdeStep = 0.1;
inline constexpr double kBlowupMagnitude = 1e12;
/// Hyperbolic runs are refused up front when cosh(2 theta max(1, |lambda|)) exceeds this.
inline constexpr double kHyperbolicGrowthCap = 1e10;

/// Throws Blowup when a hyperbolic run to theta_end would exceed kHyperbolicGrowthCap.
void check_growth_cap(const BlochParams& params, double theta_end);

/// p(theta): p carried by conjugation with exp(i theta kappa.q), i.e. the
/// adjoint closed form at angle 2 theta about q.
MVec3 p_of_theta(const BlochParams& params, double theta);

/// u(theta) = q + lambda p(theta)
MVec3 u_of_theta(const BlochParams& params, double theta);

/// dr/dtheta = -2 r x u(theta)
MVec3 rhs(const BlochParams& params, double theta, const MVec3& r);

/// Fixed-step RK4 from theta0 to theta1 (last step shortened to land on
/// theta1), returning only the end point.
MVec3 propagate(const BlochParams& params, const MVec3& r, double theta0, double theta1, const OdeConfig& cfg);

/// Fixed-step RK4 from 0 to theta_end, recording every step.
/// Throws StepTooLarge, Blowup, ClassMismatch.
Trajectory integrate(const BlochParams& params, const MVec3& r0, double theta_end, const OdeConfig& cfg);

struct StroboscopicReport {
  std::vector<double> deviations;  // index K = 0..K_max, Euclidean
  double max_deviation = 0.0;
};

/// Compares the discrete orbit r_{2K}, read off exact_R2K with
/// Q = exp(alpha, q), P = exp(2 lambda alpha, p), R0 = exp(chi0, r0),
/// with the ODE flow sampled at theta = K alpha.
StroboscopicReport stroboscopic_residual(const BlochParams& params, const MVec3& r0, double alpha, int k_max,
                                         const OdeConfig& cfg, double chi0 = 1.0);

}  // namespace su11
