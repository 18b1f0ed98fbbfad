#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "su11/bloch_ode.hpp"
#include "su11/error.hpp"
#include "test_support.hpp"

using namespace su11;
using su11::testing::dist;
using su11::testing::exp_oracle;
using su11::testing::kAllClasses;
using su11::testing::kind_of;
using su11::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

const MVec3 kQ{0, 0, 1};
const MVec3 kP{1, 0, std::sqrt(2.0)};
const MVec3 kR0{0.5, 0.5, std::sqrt(1.5)};

BlochParams fig_params(double lambda) { return {kQ, kP, lambda, CaseClass::Elliptic}; }

double max_error_vs_closed_form(const BlochParams& bp, const MVec3& r0, double theta_end, double h) {
  const auto traj = integrate(bp, r0, theta_end, OdeConfig{h, 0});
  double worst = 0.0;
  for (const auto& s : traj.samples) worst = std::max(worst, dist(s.r, trajectory_point(bp, r0, s.theta)));
  return worst;
}

}  // namespace

TEST_CASE("p_of_theta and u_of_theta") {
  const auto bp = fig_params(3.0);
  CHECK(p_of_theta(bp, 0.0) == kP);
  for (double th : {0.3, 1.7, 4.0}) {
    const Mat2 g = exp_oracle(2 * th, kQ);
    const Mat2 g_inv = exp_oracle(-2 * th, kQ);
    const MVec3 oracle = vector_from_kappa(g * kappa_dot(kP) * g_inv);
    CHECK(dist(p_of_theta(bp, th), oracle) < 1e-12);
    CHECK(dist(u_of_theta(bp, th), kQ + 3.0 * oracle) < 1e-11);
  }
  // p rotates about q with the x3 component fixed.
  const MVec3 quarter = p_of_theta(bp, kPi / 4);
  CHECK(std::fabs(quarter.x3 - kP.x3) < 1e-15);
  CHECK(std::fabs(std::hypot(quarter.x1, quarter.x2) - 1.0) < 1e-15);
}

TEST_CASE("rhs is Minkowski-orthogonal to r") {
  Rng rng(31);
  for (CaseClass cls : kAllClasses) {
    for (int i = 0; i < 10000; ++i) {
      const BlochParams bp{rng.on_manifold(cls, 1.0), rng.on_manifold(cls, 1.0), rng.uniform(-3, 3), cls};
      const MVec3 r = rng.on_manifold(cls, 1.0, true);
      const MVec3 d = rhs(bp, rng.uniform(0, 5), r);
      const double scale = std::max(1.0, euclidean_norm(r) * euclidean_norm(d));
      CHECK(std::fabs(mdot(r, d)) < 1e-12 * scale);
    }
  }
}

TEST_CASE("lambda = 0 with r0 = q is stationary") {
  const auto traj = integrate(fig_params(0.0), kQ, 2.0, OdeConfig{1e-2, 0});
  for (const auto& s : traj.samples) CHECK(dist(s.r, kQ) < 1e-15);
}

TEST_CASE("integrate samples") {
  const auto traj = integrate(fig_params(3.0), kR0, 0.35, OdeConfig{0.1, 0});
  CHECK(traj.route == Route::OdeIntegrated);
  REQUIRE(traj.samples.size() == 5);
  CHECK(traj.samples.front().theta == 0.0);
  CHECK(traj.samples.back().theta == 0.35);
  CHECK(traj.samples[2].theta == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("fig-1 ODE agrees with the closed form") {
  CHECK(max_error_vs_closed_form(fig_params(3.0), kR0, kPi, 1e-3) < 1e-8);
}

TEST_CASE("RK4 converges at fourth order") {
  const auto bp = fig_params(3.0);
  const double e1 = max_error_vs_closed_form(bp, kR0, kPi, 0.05);
  const double e2 = max_error_vs_closed_form(bp, kR0, kPi, 0.025);
  const double ratio = e1 / e2;
  CAPTURE(e1);
  CAPTURE(e2);
  CHECK(ratio >= 8.0);
  CHECK(ratio <= 32.0);
  CHECK(std::log2(ratio) >= 3.5);
  CHECK(std::log2(ratio) <= 4.5);
}

TEST_CASE("reprojection keeps the norm") {
  const auto bp = fig_params(3.0);
  const auto traj = integrate(bp, kR0, kPi, OdeConfig{1e-3, 1});
  double drift = 0.0;
  for (const auto& s : traj.samples) drift = std::max(drift, std::fabs(mdot(s.r, s.r) - 1.0));
  CHECK(drift < 1e-13);
  // Without reprojection the drift stays small but need not be at roundoff.
  const auto raw = integrate(bp, kR0, kPi, OdeConfig{1e-3, 0});
  double raw_drift = 0.0;
  for (const auto& s : raw.samples) raw_drift = std::max(raw_drift, std::fabs(mdot(s.r, s.r) - 1.0));
  CHECK(raw_drift < 1e-8);
}

TEST_CASE("closed form satisfies the ODE") {
  Rng rng(37);
  const double delta = 1e-5;
  for (CaseClass cls : kAllClasses) {
    for (int i = 0; i < 200; ++i) {
      const BlochParams bp{rng.on_manifold(cls, 1.0), rng.on_manifold(cls, 1.0), rng.uniform(-2, 2), cls};
      const MVec3 r0 = rng.on_manifold(cls, 1.0);
      const double th = rng.uniform(0.01, cls == CaseClass::Hyperbolic ? 0.5 : 3.0);
      const MVec3 fd = (1.0 / (2 * delta)) *
                       (trajectory_point(bp, r0, th + delta) - trajectory_point(bp, r0, th - delta));
      const MVec3 exact = rhs(bp, th, trajectory_point(bp, r0, th));
      CHECK(dist(fd, exact) < 1e-7 * std::max(1.0, euclidean_norm(exact)));
    }
  }
}

TEST_CASE("stroboscopic residual") {
  SUBCASE("fig-2: 36 points close the orbit") {
    const double alpha = 5.0 * kPi / 180.0;
    const auto rep = stroboscopic_residual(fig_params(2.0), kR0, alpha, 36, OdeConfig{1e-3, 1});
    REQUIRE(rep.deviations.size() == 37);
    CHECK(rep.deviations[0] == 0.0);
    CHECK(rep.max_deviation < 1e-6);
  }
  SUBCASE("hyperbolic") {
    const BlochParams bp{{1, 0, 0}, {0, 1, 0}, 0.5, CaseClass::Hyperbolic};
    const auto rep = stroboscopic_residual(bp, MVec3{std::sqrt(2.0), 0, 1}, 0.1, 5, OdeConfig{1e-3, 0});
    CHECK(rep.max_deviation < 1e-5);
  }
  SUBCASE("parabolic") {
    const BlochParams bp{{0, 1, 1}, {1, 0, 1}, 1.0, CaseClass::Parabolic};
    const auto rep = stroboscopic_residual(bp, MVec3{0.6, 0.8, 1.0}, 0.05, 40, OdeConfig{1e-3, 0});
    CHECK(rep.max_deviation < 1e-6);
  }
}

TEST_CASE("ODE errors") {
  const auto bp = fig_params(3.0);
  CHECK(kind_of([&] { integrate(bp, kR0, 1.0, OdeConfig{0.2, 0}); }) == ErrorKind::StepTooLarge);
  CHECK(kind_of([&] { integrate(bp, kR0, 1.0, OdeConfig{0.0, 0}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { integrate(bp, MVec3{1, 0, 0}, 1.0, OdeConfig{}); }) == ErrorKind::ClassMismatch);
  const BlochParams hyp{{1, 0, 0}, {0, 1, 0}, 0.5, CaseClass::Hyperbolic};
  CHECK(kind_of([&] { integrate(hyp, MVec3{std::sqrt(2.0), 0, 1}, 20.0, OdeConfig{}); }) == ErrorKind::Blowup);
  CHECK(kind_of([&] { check_growth_cap(hyp, 20.0); }) == ErrorKind::Blowup);
  CHECK_NOTHROW(check_growth_cap(hyp, 1.0));
  CHECK_NOTHROW(check_growth_cap(bp, 1e6));
}
