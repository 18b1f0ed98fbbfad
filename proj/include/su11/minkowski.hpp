#pragma once

#include <cmath>
#include <string_view>

namespace su11 {

/// Real 3-vector in Minkowski space with signature (-,-,+).
struct MVec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr MVec3& operator+=(const MVec3& o) noexcept {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr MVec3& operator-=(const MVec3& o) noexcept {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr MVec3& operator*=(double s) noexcept {
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const MVec3&, const MVec3&) = default;
};

constexpr MVec3 operator+(MVec3 a, const MVec3& b) noexcept { return a += b; }
constexpr MVec3 operator-(MVec3 a, const MVec3& b) noexcept { return a -= b; }
constexpr MVec3 operator-(const MVec3& a) noexcept { return {-a.x1, -a.x2, -a.x3}; }
constexpr MVec3 operator*(double s, MVec3 a) noexcept { return a *= s; }
constexpr MVec3 operator*(MVec3 a, double s) noexcept { return a *= s; }

inline bool is_finite(const MVec3& x) noexcept {
  return std::isfinite(x.x1) && std::isfinite(x.x2) && std::isfinite(x.x3);
}

/// Euclidean (not Minkowski) length, used for distances and error reporting.
inline double euclidean_norm(const MVec3& x) noexcept {
  return std::sqrt(x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3);
}

inline double max_abs(const MVec3& x) noexcept {
  return std::fmax(std::fabs(x.x1), std::fmax(std::fabs(x.x2), std::fabs(x.x3)));
}

/// The three conjugacy classes; the underlying value is the axis norm eta.
enum class CaseClass : int { Elliptic = 1, Parabolic = 0, Hyperbolic = -1 };

constexpr int eta(CaseClass c) noexcept { return static_cast<int>(c); }

std::string_view to_string(CaseClass c) noexcept;
CaseClass case_class_from_string(std::string_view name);

inline constexpr double kDefaultClassTol = 1e-9;

/// -x1*y1 - x2*y2 + x3*y3
constexpr double mdot(const MVec3& x, const MVec3& y) noexcept {
  return -x.x1 * y.x1 - x.x2 * y.x2 + x.x3 * y.x3;
}

/// Twisted cross product; its first two components are negated with respect
/// to the Euclidean convention so that mcross(x, y) is Minkowski-orthogonal
/// to both x and y.
constexpr MVec3 mcross(const MVec3& x, const MVec3& y) noexcept {
  return {-x.x2 * y.x3 + x.x3 * y.x2,
          -x.x3 * y.x1 + x.x1 * y.x3,
          x.x1 * y.x2 - x.x2 * y.x1};
}

/// Classifies x by which of {+1, 0, -1} its Minkowski norm lies within tol of.
/// Throws Unnormalized if none, Ambiguous if tol >= 1/2.
CaseClass classify(const MVec3& x, double tol = kDefaultClassTol);

/// Pulls x back onto {y : mdot(y, y) = eta(c)}. Elliptic and hyperbolic use
/// radial scaling (which keeps the sheet); parabolic uses the Euclidean
/// nearest point on the null cone. Throws TooFar when x is more than 0.1 away.
MVec3 reproject(const MVec3& x, CaseClass c);

}  // namespace su11
