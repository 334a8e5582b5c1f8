#pragma once

#include <vector>

#include "ijord/ffpoly.hpp"
#include "ijord/lattice.hpp"

namespace ijord::oracles {

// Independent reference implementations backing the verification suites.
// Nothing here calls the code paths it is used to check: self-dual
// polynomials come from Frobenius orbits of roots in the extension field,
// signatures from literal cycle decompositions, and Hom-lattice jumps from
// an explicit valuation model.

// All irreducible self-dual monic polynomials of degree m over ctx, built
// from root orbits in F_{q^m}: an orbit {a^(q^j)} of size m closed under
// a -> bar(a)^{-1}, with the minimal polynomial assembled in the big field
// and mapped back through an explicit subfield embedding.
std::vector<MonicPoly> self_dual_irreducible_by_roots(const DualityContext& ctx, int m);

// Sign of the permutation v -> M v of F_q^n by cycle decomposition.
// The matrix is row-major, n x n.
int permutation_signature(const FiniteField& field,
                          const std::vector<std::vector<FiniteField::Elt>>& matrix);

struct ModelJumps {
    std::vector<long long> jumps; // representatives in [0, e)
    long long quotient_dim = 0;
    bool equal_quotients = true;
};

// Valuation model of C(t) = { g : g L_Y(i) <= L_W(i+t) }: basis vectors get
// jump offsets, each Hom matrix entry a required valuation, and the jumps of
// C are the increments.
ModelJumps hom_jumps_by_filtration(const LatticeSeqSpec& ly, const LatticeSeqSpec& lw);

// Whether both specs admit the principal valuation model (integral per-jump
// quotients), i.e. the sweep range of the oracle.
bool modelable(const LatticeSeqSpec& spec);

} // namespace ijord::oracles
