#pragma once

#include <array>
#include <vector>

#include "ijord/ffpoly.hpp"

namespace ijord {

// A principal lattice sequence known only through its jump progression
// a + s Z (0 <= a < s, s | e) and the dimension of the underlying space.
struct LatticeSeqSpec {
    long long e = 1;    // common period
    long long a = 0;    // jump offset
    long long s = 1;    // jump stride
    long long dim = 1;  // dim over the base field
    bool principal = true;

    void check() const;
};

// Jumps of Hom(Lambda_Y, Lambda_W): the coset (a_W - a_Y) + gcd(s_W, s_Y) Z,
// with all nonzero quotients of the common dimension c = gcd/e * dim_W dim_Y.
struct JumpResult {
    long long coset_rep = 0;
    long long coset_mod = 1;
    long long c = 0;
};

JumpResult hom_lattice_jumps(const LatticeSeqSpec& ly, const LatticeSeqSpec& lw);

// Whether the two index-shifted Hom lattices have identical jump sets:
// val_2(e_W) < val_2(r_Y).  Otherwise they are shifted by half a period.
bool same_jumps(long long e, long long e_w, long long r_y);

// d = e_W / lcm(r_Y, e_W) * dim_F Y; the induced permutation character is
// trivial iff d is even.
long long signature_dimension(long long e_w, long long r_y, long long dim_f_y);

// Signature of multiplication by g on the ambient space: det(g)^((q-1)/2),
// mapped to +-1.
int signature_char(FiniteField::Elt det_value, const FiniteField& field);

// Product of the per-term signature parities; NegateVariable iff an odd
// number of terms have odd d.  The terms are caller-supplied (e_W, r_Y,
// dim_F Y) triples; nothing here derives them from strata.
Involution epsilon_involution_hint(const std::vector<std::array<long long, 3>>& terms);

} // namespace ijord
