#include <doctest.h>

#include <cmath>

#include "su11/error.hpp"
#include "su11/minkowski.hpp"
#include "test_support.hpp"

using namespace su11;
using su11::testing::Rng;
using su11::testing::kind_of;
using su11::testing::dist;

namespace {

// Nearest point on the null cone by solving the Lagrange conditions
// y - x = mu * grad(y1^2 + y2^2 - y3^2) with bisection on mu.
MVec3 cone_nearest_lagrange(const MVec3& x) {
  const double rho2 = x.x1 * x.x1 + x.x2 * x.x2;
  const double z2 = x.x3 * x.x3;
  auto f = [&](double mu) { return rho2 * (1 + 2 * mu) * (1 + 2 * mu) - z2 * (1 - 2 * mu) * (1 - 2 * mu); };
  double lo = -0.5 + 1e-15, hi = 0.5 - 1e-15;
  // f(lo) = -z2 * 4 < 0, f(hi) = rho2 * 4 > 0
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  const double mu = 0.5 * (lo + hi);
  return {x.x1 / (1 - 2 * mu), x.x2 / (1 - 2 * mu), x.x3 / (1 + 2 * mu)};
}

}  // namespace

TEST_CASE("mdot matches the signature (-,-,+)") {
  CHECK(mdot({0, 0, 1}, {0, 0, 1}) == 1.0);
  CHECK(mdot({0, 0, 0}, {3.5, -2, 7}) == 0.0);
  const MVec3 p{1, 0, std::sqrt(2.0)}, r0{0.5, 0.5, std::sqrt(1.5)};
  // -1/2 - 0 + sqrt(2) sqrt(3/2) = sqrt(3) - 1/2
  CHECK(mdot(p, r0) == doctest::Approx(std::sqrt(3.0) - 0.5).epsilon(1e-15));
  CHECK(mdot(p, r0) == doctest::Approx(1.2320508075688772));
}

TEST_CASE("mcross component formula") {
  CHECK(mcross({1, 0, 0}, {0, 1, 0}) == MVec3{0, 0, 1});
  const MVec3 x{0.3, -1.2, 2.5};
  CHECK(mcross(x, x) == MVec3{0, 0, 0});

  const MVec3 r0{0.5, 0.5, std::sqrt(1.5)}, p{1, 0, std::sqrt(2.0)};
  const MVec3 c = mcross(r0, p);
  CHECK(c.x1 == doctest::Approx(-std::sqrt(2.0) / 2));
  CHECK(c.x2 == doctest::Approx(std::sqrt(2.0) / 2 - std::sqrt(1.5)));
  CHECK(c.x3 == doctest::Approx(-0.5));
  CHECK(std::fabs(mdot(c, r0)) < 1e-15);
  CHECK(std::fabs(mdot(c, p)) < 1e-15);
}

TEST_CASE("classify") {
  CHECK(classify({0, 0, 1}, 1e-12) == CaseClass::Elliptic);
  CHECK(classify({0.6, 0.8, 1.0}, 1e-12) == CaseClass::Parabolic);
  CHECK(classify({1.4142135623730951, 0, 1}, 1e-12) == CaseClass::Hyperbolic);
  CHECK(classify({0, 0, -1}) == CaseClass::Elliptic);
  CHECK(kind_of([] { classify({2, 0, 0}, 1e-12); }) == ErrorKind::Unnormalized);
  CHECK(kind_of([] { classify({0, 0, 1}, 0.5); }) == ErrorKind::Ambiguous);
  CHECK(kind_of([] { classify({0, 0, 1}, 0.0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { classify({NAN, 0, 1}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("reproject") {
  SUBCASE("points already on the manifold are fixed") {
    CHECK(reproject({0, 0, 1}, CaseClass::Elliptic) == MVec3{0, 0, 1});
    CHECK(reproject({0, 0, -1}, CaseClass::Elliptic) == MVec3{0, 0, -1});
    CHECK(reproject({1, 0, 0}, CaseClass::Hyperbolic) == MVec3{1, 0, 0});
    const MVec3 null{0.6, 0.8, 1.0};
    CHECK(dist(reproject(null, CaseClass::Parabolic), null) < 1e-15);
  }
  SUBCASE("radial scaling on the elliptic axis") {
    const MVec3 y = reproject({0, 0, 1 + 1e-9}, CaseClass::Elliptic);
    CHECK(std::fabs(mdot(y, y) - 1.0) <= 1e-15);
    CHECK(y.x3 > 0);
  }
  SUBCASE("parabolic nearest point agrees with the Lagrange solve") {
    for (double eps : {1e-3, -2e-3, 5e-2}) {
      const MVec3 x{0.6 + eps, 0.8, 1.0};
      const MVec3 y = reproject(x, CaseClass::Parabolic);
      CHECK(std::fabs(mdot(y, y)) < 1e-15);
      CHECK(dist(y, x) <= 2 * std::fabs(eps));
      CHECK(dist(y, cone_nearest_lagrange(x)) < 1e-12);
    }
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
      const MVec3 on = rng.on_manifold(CaseClass::Parabolic);
      const MVec3 x = on + MVec3{rng.uniform(-0.03, 0.03), rng.uniform(-0.03, 0.03), rng.uniform(-0.03, 0.03)};
      CHECK(dist(reproject(x, CaseClass::Parabolic), cone_nearest_lagrange(x)) < 1e-10);
    }
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { reproject({0, 0, 0}, CaseClass::Parabolic); }) == ErrorKind::TooFar);
    CHECK(kind_of([] { reproject({0, 0, 2}, CaseClass::Elliptic); }) == ErrorKind::TooFar);
    CHECK(kind_of([] { reproject({2, 0, 0}, CaseClass::Elliptic); }) == ErrorKind::TooFar);
    CHECK(kind_of([] { reproject({0, 0, 1}, CaseClass::Hyperbolic); }) == ErrorKind::TooFar);
  }
}

TEST_CASE("vector algebra properties") {
  Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const MVec3 x = rng.any(), y = rng.any(), z = rng.any();
    const double a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
    const double lhs = mdot(a * x + b * y, z);
    const double rhs = a * mdot(x, z) + b * mdot(y, z);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fmax(1.0, std::fabs(rhs)) + 1e-13);
    CHECK(mdot(x, y) == mdot(y, x));

    const MVec3 c = mcross(x, y), d = mcross(y, x);
    CHECK(c + d == MVec3{0, 0, 0});
    const MVec3 xu = x * (1.0 / euclidean_norm(x)), yu = y * (1.0 / euclidean_norm(y));
    CHECK(std::fabs(mdot(mcross(xu, yu), xu)) < 1e-12);
    CHECK(std::fabs(mdot(mcross(xu, yu), yu)) < 1e-12);
  }
}

TEST_CASE("classify after reproject returns the requested class") {
  Rng rng(3);
  for (CaseClass cls : su11::testing::kAllClasses) {
    for (int i = 0; i < 500; ++i) {
      const MVec3 on = rng.on_manifold(cls, 1.5, true);
      const MVec3 x = on + MVec3{rng.uniform(-1e-3, 1e-3), rng.uniform(-1e-3, 1e-3), rng.uniform(-1e-3, 1e-3)};
      const MVec3 y = reproject(x, cls);
      CHECK(classify(y) == cls);
      CHECK(dist(reproject(y, cls), y) <= 1e-15 * std::fmax(1.0, euclidean_norm(y)) * 4);
      if (cls == CaseClass::Elliptic) CHECK((y.x3 > 0) == (on.x3 > 0));
    }
  }
}
