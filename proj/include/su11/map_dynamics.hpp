#pragma once

#include <cstdint>
#include <vector>

#include "su11/su11.hpp"

namespace su11 {

/// Two consecutive iterates of the constant-Q group map.
struct MapState {
  GroupElement prev;  // R_{N-1}
  GroupElement curr;  // R_N
  GroupElement q;
  std::int64_t n = 1;
};

/// P = Q^-1 R1 Q R0
GroupElement compute_P(const GroupElement& q, const GroupElement& r0, const GroupElement& r1) noexcept;

/// R1 = Q P R0^-1 Q^-1, the inverse of compute_P in its R1 argument.
GroupElement compute_R1(const GroupElement& q, const GroupElement& p, const GroupElement& r0) noexcept;

/// R_{N+1} = Q R_N Q R_{N-1} Q^-1 R_N^-1 Q^-1
MapState step(const MapState& state) noexcept;

/// Runs step from (R0, R1) until N = 2K and returns R_{2K}.
GroupElement iterate_R2K(const GroupElement& q, const GroupElement& r0, const GroupElement& r1,
                         std::int64_t k);

/// Every iterate R_0 .. R_n_max, index = N.
std::vector<GroupElement> iterate_orbit(const GroupElement& q, const GroupElement& r0,
                                        const GroupElement& r1, std::int64_t n_max);

/// R_{2K} = Q^{2K} P^K R0 P^-K Q^-2K with matrix powers by repeated squaring.
GroupElement exact_R2K(const GroupElement& q, const GroupElement& p, const GroupElement& r0,
                       std::int64_t k);

/// Same, with the powers taken by scaling the angles of Q and P.
GroupElement exact_R2K(const AxisAngle& q, const AxisAngle& p, const GroupElement& r0, std::int64_t k);

struct ExactVsIteratedReport {
  struct Entry {
    std::int64_t k = 0;
    double deviation = 0.0;
  };
  std::vector<Entry> entries;
  double max_deviation = 0.0;
  std::int64_t worst_k = 0;
};

/// Max entrywise |R_2K(iterated) - R_2K(exact)| for K = 1..k_max, with
/// R1 = compute_R1(Q, P, R0).
ExactVsIteratedReport verify_exact_vs_iterated(const GroupElement& q, const GroupElement& p,
                                               const GroupElement& r0, std::int64_t k_max);

/// Vector r with R = exp_element(chi0, r, cls), given the conserved angle
/// chi0 of the orbit. Elliptic orbits started on the lower sheet stay there.
MVec3 orbit_vector(const GroupElement& r, double chi0, CaseClass cls);

}  // namespace su11
