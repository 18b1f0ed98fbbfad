#include "su11/minkowski.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "su11/error.hpp"

namespace su11 {

namespace {

constexpr double kMaxReprojectDistance = 0.1;

std::string describe(const MVec3& x) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << x.x1 << ", " << x.x2 << ", " << x.x3 << "]";
  return os.str();
}

MVec3 nearest_on_cone(const MVec3& x) {
  const double rho = std::hypot(x.x1, x.x2);
  const double z = x.x3;
  // Within the azimuthal half-plane the cone is the pair of lines rho = |z|;
  // project onto the generator on the same side as z.
  const double radial = 0.5 * (rho + std::fabs(z));
  const double height = z >= 0.0 ? radial : -radial;
  if (rho == 0.0) {
    // On the axis every azimuth is equidistant; take the x1 direction.
    return {radial, 0.0, height};
  }
  return {radial * x.x1 / rho, radial * x.x2 / rho, height};
}

}  // namespace

std::string_view to_string(CaseClass c) noexcept {
  switch (c) {
    case CaseClass::Elliptic: return "elliptic";
    case CaseClass::Parabolic: return "parabolic";
    case CaseClass::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

CaseClass case_class_from_string(std::string_view name) {
  if (name == "elliptic") return CaseClass::Elliptic;
  if (name == "parabolic") return CaseClass::Parabolic;
  if (name == "hyperbolic") return CaseClass::Hyperbolic;
  throw Error(ErrorKind::Parse, "unknown case class '" + std::string(name) + "'");
}

CaseClass classify(const MVec3& x, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "classification tolerance must be positive");
  }
  if (tol >= 0.5) {
    throw Error(ErrorKind::Ambiguous, "tolerance >= 1/2 makes the classes overlap");
  }
  if (!is_finite(x)) {
    throw Error(ErrorKind::InvalidArgument, "non-finite vector " + describe(x));
  }
  const double n = mdot(x, x);
  if (std::fabs(n - 1.0) <= tol) return CaseClass::Elliptic;
  if (std::fabs(n) <= tol) return CaseClass::Parabolic;
  if (std::fabs(n + 1.0) <= tol) return CaseClass::Hyperbolic;
  std::ostringstream os;
  os.precision(17);
  os << "mdot(x, x) = " << n << " for x = " << describe(x) << " is not within " << tol
     << " of +1, 0 or -1";
  throw Error(ErrorKind::Unnormalized, os.str());
}

MVec3 reproject(const MVec3& x, CaseClass c) {
  if (!is_finite(x)) {
    throw Error(ErrorKind::TooFar, "non-finite vector " + describe(x));
  }
  MVec3 y;
  if (c == CaseClass::Parabolic) {
    if (x == MVec3{}) {
      throw Error(ErrorKind::TooFar, "cannot reproject the zero vector onto the null cone");
    }
    y = nearest_on_cone(x);
  } else {
    const double n = mdot(x, x) * eta(c);
    if (!(n > 0.0)) {
      throw Error(ErrorKind::TooFar, describe(x) + " has the wrong Minkowski norm sign for " +
                                         std::string(to_string(c)));
    }
    y = x * (1.0 / std::sqrt(n));
  }
  if (euclidean_norm(x - y) > kMaxReprojectDistance) {
    throw Error(ErrorKind::TooFar, describe(x) + " is too far from the " +
                                       std::string(to_string(c)) + " manifold");
  }
  return y;
}

}  // namespace su11
