#include "ijord/hecke.hpp"

namespace ijord {

Rational hecke_parameter(const SelfDualPoly& q, const CuspidalDatum& d, Involution sig_m,
                         long long f, int expected_m) {
    if (q.ctx() != d.gtype().ctx())
        throw Error(Errc::ContextMismatch, "polynomial and datum have different duality contexts");
    if (f < 1) throw Error(Errc::InvalidArgument, "f must be >= 1");
    int m = q.degree();
    if (expected_m >= 0 && m != expected_m)
        throw Error(Errc::DegreeMismatch, "deg(Q) = " + std::to_string(m) + ", expected " +
                                              std::to_string(expected_m));

    MonicPoly pstar = apply_involution(sig_m, q.poly());
    int index = q.ctx().index();
    GroupKind kind = d.gtype().kind();

    Rational r_over_f;
    if (index == 1 && is_x_minus_one(pstar)) {
        long long b = d.b(pstar);
        r_over_f = (kind == GroupKind::EvenSpecialOrthogonal) ? Rational(2 * b) : Rational(2 * b + 1);
    } else if (index == 1 && is_x_plus_one(pstar)) {
        long long b = d.b(pstar);
        r_over_f = (kind == GroupKind::OddSpecialOrthogonal) ? Rational(2 * b + 1) : Rational(2 * b);
    } else {
        long long b = d.b(pstar);
        r_over_f = Rational((2 * b + 1) * m, 2);
    }
    return r_over_f * f;
}

std::pair<Rational, Rational> reducibility_real_parts(const Rational& r0, const Rational& r1,
                                                      long long t_rho) {
    if (t_rho < 1) throw Error(Errc::InvalidArgument, "t(rho) must be >= 1");
    Rational s_plus = (r0 + r1) / Rational(2 * t_rho);
    Rational diff = r0 - r1;
    if (diff < Rational(0)) diff = -diff;
    Rational s_minus = diff / Rational(2 * t_rho);
    if (!is_half_integral(s_plus) || !is_half_integral(s_minus))
        throw Error(Errc::NonHalfInteger, "real parts " + rat_to_string(s_plus) + ", " +
                                              rat_to_string(s_minus) + " are not half-integers");
    return {s_plus, s_minus};
}

long long unramified_twist_number(long long dim_w_over_f, long long e_ef) {
    if (dim_w_over_f < 1 || e_ef < 1)
        throw Error(Errc::InvalidArgument, "dimension and ramification index must be >= 1");
    if (dim_w_over_f % e_ef != 0)
        throw Error(Errc::NotDivisible, "e = " + std::to_string(e_ef) + " does not divide dim = " +
                                            std::to_string(dim_w_over_f));
    return dim_w_over_f / e_ef;
}

HeckeParams hecke_params(const SelfDualPoly& q, const CuspidalDatum& d0, Involution sig0,
                         const CuspidalDatum& d1, Involution sig1, long long f) {
    Rational r0 = hecke_parameter(q, d0, sig0, f);
    Rational r1 = hecke_parameter(q, d1, sig1, f);
    Rational tw0 = Rational(2) * r0 / f;
    Rational tw1 = Rational(2) * r1 / f;
    bool odd0 = as_integer(tw0) % 2 != 0;
    bool odd1 = as_integer(tw1) % 2 != 0;
    if (odd0 != odd1)
        throw Error(Errc::NonHalfInteger, "parity coherence violated for " + q.poly().to_string());
    return HeckeParams{r0, r1, f, q.degree(), odd0};
}

} // namespace ijord
