#include "su11/su11.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "su11/error.hpp"

namespace su11 {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_axis(const MVec3& s, CaseClass cls, double tol) {
  CaseClass actual;
  try {
    actual = classify(s, tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidAxis, e.what());
  }
  if (actual != cls) {
    throw Error(ErrorKind::InvalidAxis, "axis classifies as " + std::string(to_string(actual)) +
                                            ", expected " + std::string(to_string(cls)));
  }
}

}  // namespace

double Mat2::max_abs() const noexcept {
  double r = 0.0;
  for (const auto& z : m) r = std::max(r, std::abs(z));
  return r;
}

Mat2 operator*(const Mat2& a, const Mat2& b) noexcept {
  return Mat2{{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
               a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

Mat2 operator+(const Mat2& a, const Mat2& b) noexcept {
  return Mat2{{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
}

Mat2 operator-(const Mat2& a, const Mat2& b) noexcept {
  return Mat2{{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
}

Mat2 operator*(Complex s, const Mat2& a) noexcept {
  return Mat2{{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}};
}

double max_abs_diff(const Mat2& a, const Mat2& b) noexcept { return (a - b).max_abs(); }

Mat2 kappa_dot(const MVec3& x) noexcept {
  return Mat2{{Complex(x.x3, 0.0), Complex(-x.x2, -x.x1), Complex(x.x2, -x.x1), Complex(-x.x3, 0.0)}};
}

MVec3 vector_from_kappa(const Mat2& m, double tol) {
  const Complex sum = m(0, 1) + m(1, 0);   // -2i x1
  const Complex diff = m(1, 0) - m(0, 1);  // 2 x2
  const double residual = std::max({std::fabs(m(0, 0).imag()), std::abs(m.trace()),
                                    std::fabs(sum.real()), std::fabs(diff.imag())});
  const double scale = std::max(1.0, m.max_abs());
  if (!(residual <= tol * scale)) {
    std::ostringstream os;
    os << "matrix is " << residual << " away from the kappa image (scale " << scale << ")";
    throw Error(ErrorKind::ExtractionFailure, os.str());
  }
  return {-0.5 * sum.imag(), 0.5 * diff.real(), 0.5 * (m(0, 0).real() - m(1, 1).real())};
}

GroupElement GroupElement::from_matrix(const Mat2& m, double tol) {
  GroupElement g(m);
  const double scale = std::max(1.0, m.max_abs() * m.max_abs());
  const double residual = g.invariant_residual();
  if (!(residual <= tol * scale)) {
    std::ostringstream os;
    os << "matrix violates the SU(1,1) invariants by " << residual;
    throw Error(ErrorKind::NotInGroup, os.str());
  }
  return g;
}

GroupElement GroupElement::inverse() const noexcept {
  // Dividing by the determinant matters: with the bare adjugate, rounding
  // drift in det compounds geometrically under the group map.
  const Complex inv_det = 1.0 / m_.det();
  return GroupElement(Mat2{{inv_det * m_.m[3], -inv_det * m_.m[1], -inv_det * m_.m[2], inv_det * m_.m[0]}});
}

double GroupElement::invariant_residual() const noexcept {
  const Mat2 j{{1.0, 0.0, 0.0, -1.0}};
  const double det_err = std::abs(m_.det() - 1.0);
  return std::max(det_err, max_abs_diff(m_.adjoint() * j * m_, j));
}

GroupElement power(const GroupElement& g, std::int64_t n) noexcept {
  GroupElement base = n < 0 ? g.inverse() : g;
  // Avoid negating INT64_MIN.
  auto e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1u : static_cast<std::uint64_t>(n);
  GroupElement result;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

GroupElement exp_element(const AxisAngle& a, double class_tol) {
  require_axis(a.axis, a.cls, class_tol);
  const double half = 0.5 * a.chi;
  double c = 1.0;
  double f = half;
  switch (a.cls) {
    case CaseClass::Elliptic:
      c = std::cos(half);
      f = std::sin(half);
      break;
    case CaseClass::Parabolic:
      break;
    case CaseClass::Hyperbolic:
      c = std::cosh(half);
      f = std::sinh(half);
      break;
  }
  const Mat2 k = kappa_dot(a.axis);
  return GroupElement::from_matrix_unchecked(Complex(c, 0.0) * Mat2::identity() + (kI * f) * k);
}

MVec3 adjoint_vec(const GroupElement& g, const MVec3& t) {
  const Mat2 conj = g.matrix() * kappa_dot(t) * g.inverse().matrix();
  return vector_from_kappa(conj);
}

MVec3 adjoint_closed_form(double gamma, const MVec3& s, const MVec3& t, CaseClass cls) {
  require_axis(s, cls, kDefaultClassTol);
  const MVec3 txs = mcross(t, s);
  const double ts = mdot(t, s);
  switch (cls) {
    case CaseClass::Elliptic: {
      const double c = std::cos(gamma);
      return c * t - std::sin(gamma) * txs + ((1.0 - c) * ts) * s;
    }
    case CaseClass::Parabolic:
      return t - gamma * txs + (0.5 * gamma * gamma * ts) * s;
    case CaseClass::Hyperbolic: {
      const double c = std::cosh(gamma);
      return c * t - std::sinh(gamma) * txs + ((c - 1.0) * ts) * s;
    }
  }
  return t;
}

Decomposition decompose(const GroupElement& g, double tol) {
  const Mat2& m = g.matrix();
  const Complex h = 0.5 * m.trace();
  const double scale = std::max(1.0, m.max_abs());
  if (std::fabs(h.imag()) > 1e-11 * scale) {
    throw Error(ErrorKind::NotInGroup, "half-trace is not real");
  }
  const double hr = h.real();
  // (g - h) / i = f kappa.s with f = sin, chi/2 or sinh of chi/2.
  const MVec3 v = vector_from_kappa(Complex(0.0, -1.0) * (m - Complex(hr, 0.0) * Mat2::identity()));

  Decomposition d;
  if (std::fabs(std::fabs(hr) - 1.0) <= tol) {
    d.sign = hr > 0.0 ? 1 : -1;
    if (max_abs(v) <= tol) {
      d.identity = true;
      return d;
    }
    const MVec3 s = static_cast<double>(d.sign) * v;
    const double e2 = s.x1 * s.x1 + s.x2 * s.x2 + s.x3 * s.x3;
    if (std::fabs(mdot(s, s)) > std::sqrt(tol) * e2) {
      std::ostringstream os;
      os << "half-trace " << hr << " is within " << tol
         << " of +-1 but the axis is not null (mdot = " << mdot(s, s) << ")";
      throw Error(ErrorKind::NearBoundary, os.str());
    }
    d.axis_angle = AxisAngle{2.0, s, CaseClass::Parabolic};
    return d;
  }
  if (std::fabs(hr) < 1.0) {
    const double n = mdot(v, v);
    if (!(n > 0.0)) throw Error(ErrorKind::NearBoundary, "elliptic half-trace with non-timelike axis");
    const double f = std::sqrt(n);
    MVec3 s = v * (1.0 / f);
    double chi = 2.0 * std::atan2(f, hr);
    if (s.x3 < 0.0) {
      s = -s;
      chi = 4.0 * std::numbers::pi - chi;
    }
    d.axis_angle = AxisAngle{chi, s, CaseClass::Elliptic};
    return d;
  }
  d.sign = hr > 0.0 ? 1 : -1;
  const MVec3 w = static_cast<double>(d.sign) * v;
  const double n = -mdot(w, w);
  if (!(n > 0.0)) throw Error(ErrorKind::NearBoundary, "hyperbolic half-trace with non-spacelike axis");
  const double f = std::sqrt(n);
  d.axis_angle = AxisAngle{2.0 * std::asinh(f), w * (1.0 / f), CaseClass::Hyperbolic};
  return d;
}

}  // namespace su11
