#include "su11/map_dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "su11/error.hpp"

namespace su11 {

GroupElement compute_P(const GroupElement& q, const GroupElement& r0, const GroupElement& r1) noexcept {
  return q.inverse() * r1 * q * r0;
}

GroupElement compute_R1(const GroupElement& q, const GroupElement& p, const GroupElement& r0) noexcept {
  return q * p * r0.inverse() * q.inverse();
}

MapState step(const MapState& s) noexcept {
  const GroupElement q_inv = s.q.inverse();
  const GroupElement next = s.q * s.curr * s.q * s.prev * q_inv * s.curr.inverse() * q_inv;
  return MapState{s.curr, next, s.q, s.n + 1};
}

GroupElement iterate_R2K(const GroupElement& q, const GroupElement& r0, const GroupElement& r1,
                         std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "K must be non-negative");
  if (k == 0) return r0;
  MapState s{r0, r1, q, 1};
  while (s.n < 2 * k) s = step(s);
  return s.curr;
}

std::vector<GroupElement> iterate_orbit(const GroupElement& q, const GroupElement& r0,
                                        const GroupElement& r1, std::int64_t n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be non-negative");
  std::vector<GroupElement> orbit{r0};
  if (n_max == 0) return orbit;
  orbit.reserve(static_cast<std::size_t>(n_max) + 1);
  MapState s{r0, r1, q, 1};
  orbit.push_back(r1);
  while (s.n < n_max) {
    s = step(s);
    orbit.push_back(s.curr);
  }
  return orbit;
}

GroupElement exact_R2K(const GroupElement& q, const GroupElement& p, const GroupElement& r0,
                       std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "K must be non-negative");
  const GroupElement outer = power(q, 2 * k) * power(p, k);
  return outer * r0 * outer.inverse();
}

GroupElement exact_R2K(const AxisAngle& q, const AxisAngle& p, const GroupElement& r0, std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "K must be non-negative");
  const auto kd = static_cast<double>(k);
  const GroupElement outer = exp_element(2.0 * kd * q.chi, q.axis, q.cls) *
                             exp_element(kd * p.chi, p.axis, p.cls);
  return outer * r0 * outer.inverse();
}

ExactVsIteratedReport verify_exact_vs_iterated(const GroupElement& q, const GroupElement& p,
                                               const GroupElement& r0, std::int64_t k_max) {
  if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "K_max must be at least 1");
  ExactVsIteratedReport report;
  report.entries.reserve(static_cast<std::size_t>(k_max));
  MapState s{r0, compute_R1(q, p, r0), q, 1};
  for (std::int64_t k = 1; k <= k_max; ++k) {
    while (s.n < 2 * k) s = step(s);
    const double dev = max_abs_diff(s.curr.matrix(), exact_R2K(q, p, r0, k).matrix());
    report.entries.push_back({k, dev});
    if (dev > report.max_deviation || k == 1) {
      report.max_deviation = dev;
      report.worst_k = k;
    }
  }
  return report;
}

MVec3 orbit_vector(const GroupElement& r, double chi0, CaseClass cls) {
  const Decomposition d = decompose(r);
  if (d.identity) {
    throw Error(ErrorKind::ExtractionFailure, "orbit element is +-identity; axis undefined");
  }
  if (d.axis_angle.cls != cls) {
    throw Error(ErrorKind::ClassMismatch, "orbit element decomposes as " +
                                              std::string(to_string(d.axis_angle.cls)));
  }
  const MVec3& s = d.axis_angle.axis;
  switch (cls) {
    case CaseClass::Parabolic:
      // Only chi * s is intrinsic.
      return (d.sign * d.axis_angle.chi / chi0) * s;
    case CaseClass::Hyperbolic:
      return chi0 < 0.0 ? -s : s;
    case CaseClass::Elliptic: {
      const double period = 4.0 * std::numbers::pi;
      const double wrapped = chi0 - period * std::floor(chi0 / period);
      // chi and 4pi - chi with the opposite axis give the same element.
      const bool same = std::fabs(d.axis_angle.chi - wrapped) <= std::fabs(d.axis_angle.chi - (period - wrapped));
      return same ? s : -s;
    }
  }
  return s;
}

}  // namespace su11
