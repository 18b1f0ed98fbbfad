#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "su11/minkowski.hpp"

namespace su11 {

using Complex = std::complex<double>;

/// Plain 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<Complex, 4> m{};

  static constexpr Mat2 identity() noexcept { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }

  constexpr Complex& operator()(int row, int col) noexcept { return m[2 * row + col]; }
  constexpr const Complex& operator()(int row, int col) const noexcept { return m[2 * row + col]; }

  Complex trace() const noexcept { return m[0] + m[3]; }
  Complex det() const noexcept { return m[0] * m[3] - m[1] * m[2]; }
  Mat2 adjoint() const noexcept {
    return Mat2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }
  /// Largest entry modulus.
  double max_abs() const noexcept;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& a, const Mat2& b) noexcept;
Mat2 operator+(const Mat2& a, const Mat2& b) noexcept;
Mat2 operator-(const Mat2& a, const Mat2& b) noexcept;
Mat2 operator*(Complex s, const Mat2& a) noexcept;

/// max |a_ij - b_ij|
double max_abs_diff(const Mat2& a, const Mat2& b) noexcept;

/// kappa . x = -kappa^1 x1 - kappa^2 x2 + kappa^3 x3 with kappa = [i s1, i s2, s3]:
///   [[ x3,          -i x1 - x2 ],
///    [ -i x1 + x2,  -x3        ]]
/// Traceless, squares to mdot(x, x) times the identity, det = -mdot(x, x).
Mat2 kappa_dot(const MVec3& x) noexcept;

/// Inverse of kappa_dot. Throws ExtractionFailure when m is farther than
/// tol * max(1, |m|) from the image of kappa_dot.
MVec3 vector_from_kappa(const Mat2& m, double tol = 1e-9);

/// Element of SU(1,1): det g = 1 and g^dagger J g = J with J = diag(1, -1).
class GroupElement {
 public:
  GroupElement() noexcept : m_(Mat2::identity()) {}

  static GroupElement identity() noexcept { return GroupElement(); }

  /// Checks the group invariants to tol (relative to |m|^2) and throws
  /// NotInGroup on failure.
  static GroupElement from_matrix(const Mat2& m, double tol = 1e-12);
  /// No invariant check; for matrices that are in the group by construction.
  static GroupElement from_matrix_unchecked(const Mat2& m) noexcept { return GroupElement(m); }

  const Mat2& matrix() const noexcept { return m_; }
  const Complex& operator()(int row, int col) const noexcept { return m_(row, col); }

  /// Adjugate over determinant.
  GroupElement inverse() const noexcept;

  /// max(|det - 1|, max_ij |(g^dagger J g - J)_ij|)
  double invariant_residual() const noexcept;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) noexcept {
    return GroupElement(a.m_ * b.m_);
  }

 private:
  explicit GroupElement(const Mat2& m) noexcept : m_(m) {}
  Mat2 m_;
};

inline GroupElement multiply(const GroupElement& g, const GroupElement& h) noexcept { return g * h; }
inline GroupElement inverse(const GroupElement& g) noexcept { return g.inverse(); }

/// g^n by binary exponentiation; negative n uses the inverse.
GroupElement power(const GroupElement& g, std::int64_t n) noexcept;

/// Angle chi about axis s (mdot(s, s) = eta(cls)). Chi is an angle for the
/// elliptic class, a rapidity for the hyperbolic class and a scale for the
/// parabolic class.
struct AxisAngle {
  double chi = 0.0;
  MVec3 axis{0.0, 0.0, 1.0};
  CaseClass cls = CaseClass::Elliptic;
};

/// exp(i chi/2 kappa.s). Throws InvalidAxis if s does not classify as cls.
/// Any real chi is accepted; exp(chi1) * exp(chi2) = exp(chi1 + chi2).
GroupElement exp_element(const AxisAngle& a, double class_tol = kDefaultClassTol);
inline GroupElement exp_element(double chi, const MVec3& s, CaseClass cls,
                                double class_tol = kDefaultClassTol) {
  return exp_element(AxisAngle{chi, s, cls}, class_tol);
}

/// Vector part of g (kappa.t) g^-1.
MVec3 adjoint_vec(const GroupElement& g, const MVec3& t);

/// Closed form of adjoint_vec(exp_element(gamma, s, cls), t):
///   elliptic    cos g t - sin g (t x s) + (1 - cos g)(t.s) s
///   parabolic   t - g (t x s) + (g^2/2)(t.s) s
///   hyperbolic  cosh g t - sinh g (t x s) + (cosh g - 1)(t.s) s
/// The quadratic coefficient of the parabolic form is the limit of the
/// elliptic one and is required for the norm to be preserved.
MVec3 adjoint_closed_form(double gamma, const MVec3& s, const MVec3& t, CaseClass cls);

/// Result of decompose. When identity is set the axis is undefined and g = sign * 1.
/// Otherwise exp_element(axis_angle) = sign * g.
struct Decomposition {
  AxisAngle axis_angle;
  int sign = 1;
  bool identity = false;
};

/// Reads (chi, s, class) back from a group element by its half-trace.
/// Canonical forms: elliptic s on the upper sheet with chi in (0, 4pi);
/// hyperbolic chi > 0; parabolic chi = 2 (the axis carries the scale).
Decomposition decompose(const GroupElement& g, double tol = kDefaultClassTol);

}  // namespace su11
