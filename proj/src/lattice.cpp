#include "ijord/lattice.hpp"

#include <numeric>

namespace ijord {

namespace {

int val2(long long n) {
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    return v;
}

long long pos_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

void LatticeSeqSpec::check() const {
    if (e < 1 || s < 1 || dim < 1)
        throw Error(Errc::InvalidArgument, "lattice spec needs e, s, dim >= 1");
    if (e % s != 0) throw Error(Errc::InvalidArgument, "jump stride s must divide the period e");
    if (a < 0 || a >= s) throw Error(Errc::InvalidArgument, "jump offset must satisfy 0 <= a < s");
    if (!principal) throw Error(Errc::InvalidArgument, "only principal lattice sequences are supported");
}

JumpResult hom_lattice_jumps(const LatticeSeqSpec& ly, const LatticeSeqSpec& lw) {
    ly.check();
    lw.check();
    if (ly.e != lw.e)
        throw Error(Errc::PeriodMismatch, "lattice sequences have periods " + std::to_string(ly.e) +
                                              " and " + std::to_string(lw.e));
    long long g = std::gcd(lw.s, ly.s);
    long long prod = g * lw.dim * ly.dim;
    if (prod % ly.e != 0)
        throw Error(Errc::NonIntegralDimension,
                    "quotient dimension gcd/e * dim_W dim_Y is not integral");
    JumpResult out;
    out.coset_mod = g;
    out.coset_rep = pos_mod(lw.a - ly.a, g);
    out.c = prod / ly.e;
    return out;
}

bool same_jumps(long long e, long long e_w, long long r_y) {
    if (e < 1 || e_w < 1 || r_y < 1)
        throw Error(Errc::InvalidArgument, "arguments must be >= 1");
    if (e % e_w != 0)
        throw Error(Errc::NotDivisor, "e_W = " + std::to_string(e_w) + " does not divide e");
    if (e % r_y != 0)
        throw Error(Errc::NotDivisor, "r_Y = " + std::to_string(r_y) + " does not divide e");
    return val2(e_w) < val2(r_y);
}

long long signature_dimension(long long e_w, long long r_y, long long dim_f_y) {
    if (e_w < 1 || r_y < 1 || dim_f_y < 1)
        throw Error(Errc::InvalidArgument, "arguments must be >= 1");
    long long l = std::lcm(r_y, e_w);
    if ((e_w * dim_f_y) % l != 0)
        throw Error(Errc::NonIntegral, "e_W / lcm(r_Y, e_W) * dim is not integral");
    return e_w * dim_f_y / l;
}

int signature_char(FiniteField::Elt det_value, const FiniteField& field) {
    if (det_value == field.zero())
        throw Error(Errc::ZeroDeterminant, "signature character needs an invertible determinant");
    FiniteField::Elt s = field.pow(det_value, (field.q() - 1) / 2);
    if (s == field.one()) return 1;
    if (s == field.neg(field.one())) return -1;
    throw Error(Errc::InvalidArgument, "det^((q-1)/2) is not a sign (unreachable)");
}

Involution epsilon_involution_hint(const std::vector<std::array<long long, 3>>& terms) {
    int parity = 0;
    for (const auto& t : terms) {
        long long d = signature_dimension(t[0], t[1], t[2]);
        if (d % 2 != 0) parity ^= 1;
    }
    return parity ? Involution::NegateVariable : Involution::Identity;
}

} // namespace ijord
