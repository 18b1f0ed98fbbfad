#pragma once

#include <string_view>
#include <vector>

#include "su11/minkowski.hpp"

namespace su11 {

/// One dynamical scenario: axes q and p of Q and P, and lambda = beta / (2 alpha).
struct BlochParams {
  MVec3 q{0.0, 0.0, 1.0};
  MVec3 p{0.0, 0.0, 1.0};
  double lambda = 0.0;
  CaseClass cls = CaseClass::Elliptic;
};

/// Throws ClassMismatch if q or p do not classify as params.cls, or
/// InvalidArgument for a non-finite lambda.
void validate(const BlochParams& params);

enum class Route { ClosedForm, MapIterated, OdeIntegrated };

/// "closed-form", "map" or "ode", as written in trajectory CSV files.
std::string_view to_string(Route route) noexcept;
Route route_from_string(std::string_view name);

struct TrajectorySample {
  double theta = 0.0;
  MVec3 r;
};

struct Trajectory {
  BlochParams params;
  MVec3 r0;
  std::vector<TrajectorySample> samples;
  Route route = Route::ClosedForm;
};

/// t(theta): r0 carried by the adjoint action of P^K, i.e. rotated by
/// 2 lambda theta about p.
MVec3 intermediate_t(const BlochParams& params, const MVec3& r0, double theta);

/// r(theta): intermediate_t rotated by 2 theta about q.
MVec3 trajectory_point(const BlochParams& params, const MVec3& r0, double theta);

/// Closed-form samples on thetas (which must be strictly increasing).
Trajectory sample_closed_form(const BlochParams& params, const MVec3& r0, const std::vector<double>& thetas);

/// mdot(r(theta), q). Equal to mdot(t(theta), q) because Q fixes q.
double decoupled_component(const BlochParams& params, const MVec3& r0, double theta);

struct EllipticBounds {
  double a = 0.0;   // r0.q
  double b = 0.0;   // (r0 x p).q
  double c = 0.0;   // (p.r0)(p.q)
  double A1 = 0.0;  // c - sqrt(b^2 + (a - c)^2)
  double A2 = 0.0;  // c + sqrt(b^2 + (a - c)^2)
};

/// The two parallels A1 <= r(theta).q <= A2 confining an elliptic orbit.
/// Requires r0 and q on the upper sheet (x3 > 0); throws WrongClass or LowerSheet.
EllipticBounds elliptic_bounds(const BlochParams& params, const MVec3& r0);

/// Parabolic t(theta).q = a - 2 lambda theta b + 2 (lambda theta)^2 c with
/// a, b, c as in EllipticBounds. Affine in theta only when c = 0.
/// Throws WrongClass.
double parabolic_line(const BlochParams& params, const MVec3& r0, double theta);

struct SymmetryReport {
  double period = 0.0;        // pi / lambda
  double max_deviation = 0.0; // Euclidean
  int n_samples = 0;
};

/// Checks r(theta + pi/lambda) = rotation by 2 pi/lambda about q of r(theta)
/// on n_samples points of one period. For integer lambda this is the
/// lambda-fold symmetry of the orbit about q. Throws WrongClass, InvalidArgument.
SymmetryReport symmetry_order_check(const BlochParams& params, const MVec3& r0, int n_samples);

}  // namespace su11
