#include <doctest.h>

#include <cmath>
#include <numbers>

#include "su11/map_dynamics.hpp"
#include "test_support.hpp"

using namespace su11;
using su11::testing::kAllClasses;
using su11::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

const MVec3 kQ{0, 0, 1};
const MVec3 kP{1, 0, std::sqrt(2.0)};
const MVec3 kR0{0.5, 0.5, std::sqrt(1.5)};

struct Setup {
  GroupElement q, p, r0;
};

Setup fig(double alpha, double lambda, double chi0 = 1.0) {
  return {exp_element(alpha, kQ, CaseClass::Elliptic), exp_element(2 * lambda * alpha, kP, CaseClass::Elliptic),
          exp_element(chi0, kR0, CaseClass::Elliptic)};
}

GroupElement random_element(Rng& rng, CaseClass cls, double chi_max) {
  return exp_element(rng.uniform(-chi_max, chi_max), rng.on_manifold(cls, 1.0, true), cls);
}

}  // namespace

TEST_CASE("compute_P and compute_R1") {
  Rng rng(2);
  const auto r0 = random_element(rng, CaseClass::Elliptic, 2.0);
  const auto r1 = random_element(rng, CaseClass::Elliptic, 2.0);
  const auto q = random_element(rng, CaseClass::Elliptic, 2.0);
  CHECK(max_abs_diff(compute_P(GroupElement::identity(), r0, r1).matrix(), (r1 * r0).matrix()) < 1e-15);
  CHECK(max_abs_diff(compute_P(q, GroupElement::identity(), GroupElement::identity()).matrix(), Mat2::identity()) < 1e-15);

  const auto p = compute_P(q, r0, r1);
  CHECK(max_abs_diff((q * p * r0.inverse() * q.inverse()).matrix(), r1.matrix()) < 1e-12);
  CHECK(max_abs_diff(compute_R1(q, p, r0).matrix(), r1.matrix()) < 1e-12);

  CHECK(max_abs_diff(compute_R1(GroupElement::identity(), p, GroupElement::identity()).matrix(), p.matrix()) < 1e-15);
  CHECK(max_abs_diff(compute_R1(q, GroupElement::identity(), r0).matrix(),
                     (q * r0.inverse() * q.inverse()).matrix()) < 1e-15);

  const auto f = fig(0.05, 3.0);
  const auto r1f = compute_R1(f.q, f.p, f.r0);
  CHECK(max_abs_diff(compute_P(f.q, f.r0, r1f).matrix(), f.p.matrix()) < 1e-12);
}

TEST_CASE("step") {
  Rng rng(4);
  const auto a = random_element(rng, CaseClass::Hyperbolic, 1.0);
  const auto b = random_element(rng, CaseClass::Elliptic, 1.0);
  const auto q = random_element(rng, CaseClass::Parabolic, 1.0);

  const MapState s1 = step(MapState{a, b, GroupElement::identity(), 1});
  CHECK(s1.n == 2);
  CHECK(max_abs_diff(s1.prev.matrix(), b.matrix()) == 0.0);
  CHECK(max_abs_diff(s1.curr.matrix(), (b * a * b.inverse()).matrix()) < 1e-14);

  const MapState s2 = step(MapState{GroupElement::identity(), GroupElement::identity(), q, 5});
  CHECK(s2.n == 6);
  CHECK(max_abs_diff(s2.curr.matrix(), Mat2::identity()) < 1e-15);
}

TEST_CASE("exact_R2K") {
  const auto f = fig(0.05, 3.0);
  CHECK(max_abs_diff(exact_R2K(f.q, f.p, f.r0, 0).matrix(), f.r0.matrix()) == 0.0);

  const auto qk = exact_R2K(f.q, GroupElement::identity(), f.r0, 4);
  CHECK(max_abs_diff(qk.matrix(), (power(f.q, 8) * f.r0 * power(f.q, -8)).matrix()) < 1e-14);

  const AxisAngle qa{0.05, kQ, CaseClass::Elliptic}, pa{0.3, kP, CaseClass::Elliptic};
  for (std::int64_t k : {0, 1, 7, 50, 100}) {
    const auto by_powers = exact_R2K(f.q, f.p, f.r0, k);
    const auto by_angles = exact_R2K(qa, pa, f.r0, k);
    CHECK(max_abs_diff(by_powers.matrix(), by_angles.matrix()) < 1e-11);
  }
}

TEST_CASE("iteration agrees with the exact solution") {
  SUBCASE("trivial scenario") {
    const auto id = GroupElement::identity();
    const auto rep = verify_exact_vs_iterated(id, id, id, 10);
    CHECK(rep.entries.size() == 10);
    CHECK(rep.max_deviation == 0.0);
  }
  SUBCASE("fig-1 parameters") {
    const auto f = fig(0.05, 3.0);
    CHECK(verify_exact_vs_iterated(f.q, f.p, f.r0, 50).max_deviation < 1e-10);
  }
  SUBCASE("fig-2 parameters, 2K steps") {
    const double alpha = 5.0 * kPi / 180.0;
    const auto f = fig(alpha, 2.0);
    const auto r1 = compute_R1(f.q, f.p, f.r0);
    for (std::int64_t k = 1; k <= 18; ++k) {
      CHECK(max_abs_diff(iterate_R2K(f.q, f.r0, r1, k).matrix(), exact_R2K(f.q, f.p, f.r0, k).matrix()) < 1e-10);
    }
  }
  SUBCASE("random scenarios") {
    Rng rng(8);
    for (CaseClass cls : kAllClasses) {
      for (int trial = 0; trial < 10; ++trial) {
        const double alpha = cls == CaseClass::Elliptic ? rng.uniform(0.01, 0.2) : rng.uniform(0.001, 0.01);
        const double lambda = rng.uniform(-1.5, 1.5);
        const auto q = exp_element(alpha, rng.on_manifold(cls, 1.0, true), cls);
        const auto p = exp_element(2 * lambda * alpha, rng.on_manifold(cls, 1.0, true), cls);
        const auto r0 = exp_element(rng.uniform(0.3, 2.0), rng.on_manifold(cls, 1.0, true), cls);
        const auto rep = verify_exact_vs_iterated(q, p, r0, 100);
        CAPTURE(to_string(cls));
        CHECK(rep.max_deviation < 1e-9);
      }
    }
  }
}

TEST_CASE("map invariants") {
  const auto f = fig(0.05, 3.0);
  const auto orbit = iterate_orbit(f.q, f.r0, compute_R1(f.q, f.p, f.r0), 200);
  REQUIRE(orbit.size() == 201);
  double worst = 0.0;
  for (const auto& r : orbit) worst = std::fmax(worst, r.invariant_residual());
  CHECK(worst < 1e-9);

  for (std::int64_t k = 0; k <= 100; ++k) {
    const MVec3 r = orbit_vector(orbit[static_cast<std::size_t>(2 * k)], 1.0, CaseClass::Elliptic);
    CHECK(std::fabs(mdot(r, r) - 1.0) < 1e-9);
    CHECK(r.x3 > 0);
  }
}

TEST_CASE("continuous symmetry R -> Q^kappa R Q^-kappa preserves tr R_2K") {
  const double alpha = 0.05;
  const auto f = fig(alpha, 3.0);
  const auto r1 = compute_R1(f.q, f.p, f.r0);
  for (double kappa : {0.3, 1.0, 2.7}) {
    const auto c = exp_element(kappa * alpha, kQ, CaseClass::Elliptic);  // Q^kappa
    const auto r0s = c * f.r0 * c.inverse();
    const auto r1s = c * r1 * c.inverse();
    const auto ps = compute_P(f.q, r0s, r1s);
    for (std::int64_t k : {1, 10, 40}) {
      const Complex tr = exact_R2K(f.q, f.p, f.r0, k).matrix().trace();
      CHECK(std::abs(exact_R2K(f.q, ps, r0s, k).matrix().trace() - tr) < 1e-11);
      CHECK(std::abs(iterate_R2K(f.q, r0s, r1s, k).matrix().trace() - tr) < 1e-11);
    }
  }
}

TEST_CASE("orbit_vector") {
  const MVec3 r{0.5, 0.5, std::sqrt(1.5)};
  for (double chi0 : {0.4, 3.0, 7.0, 11.0}) {
    CHECK(su11::testing::dist(orbit_vector(exp_element(chi0, r, CaseClass::Elliptic), chi0, CaseClass::Elliptic), r) < 1e-12);
    CHECK(su11::testing::dist(orbit_vector(exp_element(chi0, -r, CaseClass::Elliptic), chi0, CaseClass::Elliptic), -r) < 1e-12);
  }
  const MVec3 n{0.6, 0.8, 1.0};
  CHECK(su11::testing::dist(orbit_vector(exp_element(1.7, n, CaseClass::Parabolic), 1.7, CaseClass::Parabolic), n) < 1e-14);
  const MVec3 h{std::sqrt(2.0), 0, 1};
  CHECK(su11::testing::dist(orbit_vector(exp_element(-0.6, h, CaseClass::Hyperbolic), -0.6, CaseClass::Hyperbolic), h) < 1e-13);
}
