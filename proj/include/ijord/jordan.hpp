#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ijord/hecke.hpp"
#include "ijord/lusztig.hpp"
#include "ijord/rational.hpp"

namespace ijord {

enum class SelfDualType { TrivialClass, UnramifiedQuadratic, RamifiedQuadratic };

const char* self_dual_type_name(SelfDualType t);

// Numeric invariants of an endo-class; the label is opaque.  dual_type is
// engaged exactly for self-dual classes.
struct EndoClassInvariants {
    std::string label;
    long long degree = 1;
    long long e = 1;
    long long f = 1;
    std::optional<SelfDualType> dual_type;

    bool self_dual() const { return dual_type.has_value(); }
    void check() const;

    // Squaring preserves degree, e, f, the duality type and self-duality;
    // only the (opaque) label moves.  The trivial class is fixed.
    EndoClassInvariants squared() const;
    std::string squared_label() const;

    bool operator==(const EndoClassInvariants& other) const {
        return label == other.label && degree == other.degree && e == other.e && f == other.f &&
               dual_type == other.dual_type;
    }
};

// Everything needed to run the inertial-Jordan algorithm on one simple
// cuspidal representation: base residue cardinality, endo-class invariants,
// the two Lusztig data, the involution flags sigma_m^(t), and the optional
// quadratic twist used by the general-case composition.
struct SimpleCuspidalDescriptor {
    long long q = 3;
    EndoClassInvariants endo;
    long long N = 0;
    std::vector<CuspidalDatum> data; // exactly two, t = 0 and t = 1
    std::map<std::pair<int, int>, Involution> involutions; // (t, m) -> sigma; default Identity
    bool chi_twist = false;

    long long dim_e_v() const;
    DualityContext context() const;
    Involution involution(int t, int m) const;
    void validate() const;
};

// One inertial class entry ([rho_Q], m): the endo-class label of Theta^2,
// the polynomial Q, the composition twist flag, the Jordan block size m and
// deg(rho) = deg(Q) deg(Theta).
struct IJordEntry {
    std::string endo_label;
    MonicPoly poly;
    bool chi_twist = false;
    long long m = 1;
    long long deg_rho = 1;
};

// Multiset of Jordan blocks; entries stay unaggregated so disjoint unions
// remain literal.  Aggregation happens only at serialization.
struct IJordMultiset {
    std::vector<IJordEntry> entries;

    long long total_m_deg() const;
};

struct QBreakdownRow {
    MonicPoly q_poly;
    int m;
    Rational r0, r1;
    Rational s_plus, s_minus;
    std::vector<long long> blocks_plus, blocks_minus;
    long long contribution;
};

struct IJordReport {
    IJordMultiset multiset;
    std::vector<QBreakdownRow> rows;
    long long total = 0;
    long long expected = 0;
    bool identity_ok = false;
};

// Block ladder of one reducibility real part: all m = 2s-1, 2s-3, ... >= 1.
// Empty below s = 1.
std::vector<long long> jordan_blocks_from_real_part(const Rational& s);

// floor((r0^2 + r1^2) / (2 t_rho^2)); equals the sum of the two block
// ladders' sizes.
long long inertial_contribution(const Rational& r0, const Rational& r1, long long t_rho);

IJordReport ijord_simple_report(const SimpleCuspidalDescriptor& desc);
IJordMultiset ijord_simple(const SimpleCuspidalDescriptor& desc);

// Verifies sum m deg(rho) = 2N+1 (trivial endo-class) or 2N (otherwise)
// against the given multiset; throws IdentityViolation with the per-Q
// breakdown attached when it fails.
IJordReport identity_check(const SimpleCuspidalDescriptor& desc, const IJordMultiset& ij);

struct GeneralPart {
    SimpleCuspidalDescriptor desc;
    bool chi = false;
};

struct IJordGeneralReport {
    IJordMultiset multiset;
    std::vector<IJordReport> part_reports;
    long long total = 0;
    long long expected = 0; // always 2N+1 with 2N the ambient dimension
    bool identity_ok = false;
};

// Disjoint union over the parts, each entry twisted by the part's chi flag.
// Parts need pairwise distinct endo-class labels and at most one depth-zero
// part; a missing depth-zero part is supplied as the degenerate N = 0 one.
IJordGeneralReport ijord_general_report(const std::vector<GeneralPart>& parts);
IJordMultiset ijord_general(const std::vector<GeneralPart>& parts);

// Deterministic parallel evaluation of a corpus: output order is the input
// order regardless of scheduling.
std::vector<IJordReport> ijord_batch(const std::vector<SimpleCuspidalDescriptor>& descs,
                                     unsigned threads = 0);

// Optional bridge from the jump calculus: fill the involution table from
// per-(t, m) signature term lists.  The involutions stay plain inputs; this
// only spares the caller the parity bookkeeping.
void derive_involutions(
    SimpleCuspidalDescriptor& desc,
    const std::map<std::pair<int, int>, std::vector<std::array<long long, 3>>>& terms);

} // namespace ijord
