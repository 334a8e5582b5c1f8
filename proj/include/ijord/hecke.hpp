#pragma once

#include <utility>

#include "ijord/lusztig.hpp"
#include "ijord/rational.hpp"

namespace ijord {

// The exponent r in the quadratic relation (T - q^r w)(T + w) = 0 of the
// rank-one finite Hecke algebra attached to (Q, d), with f = [k_E : k_F].
// With P* = sig_m(Q):
//   index 1, P* = X-1:  r/f = 2b_+   (even special orthogonal), else 2b_+ + 1
//   index 1, P* = X+1:  r/f = 2b_- + 1 (odd special orthogonal), else 2b_-
//   otherwise:          r/f = (2 b_{P*} + 1) m/2
// The returned value is exact; 2r/f is always an integer.  Pass expected_m
// >= 0 to assert deg(Q).
Rational hecke_parameter(const SelfDualPoly& q, const CuspidalDatum& d, Involution sig_m,
                         long long f, int expected_m = -1);

// { (r0+r1)/(2 t_rho), |r0-r1|/(2 t_rho) }, largest first.  Both must be
// half-integers; anything else signals an inconsistent descriptor.
std::pair<Rational, Rational> reducibility_real_parts(const Rational& r0, const Rational& r1,
                                                      long long t_rho);

// t(rho) = dim_F W / e(F[beta_W]/F).
long long unramified_twist_number(long long dim_w_over_f, long long e_ef);

// Both quadratic-relation exponents for one inertial class, plus the derived
// parity flag: in the index-2 / even-m case 2 r_t / f = (2b+1) m.
struct HeckeParams {
    Rational r0;
    Rational r1;
    long long f;
    int m;
    bool two_r_over_f_is_odd;
};

HeckeParams hecke_params(const SelfDualPoly& q, const CuspidalDatum& d0, Involution sig0,
                         const CuspidalDatum& d1, Involution sig1, long long f);

} // namespace ijord
