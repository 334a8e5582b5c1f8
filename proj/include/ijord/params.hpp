#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ijord/jordan.hpp"

namespace ijord {

// ---------------------------------------------------------------------------
// Registry: the finite table of endo-classes, their squaring permutation, the
// paired wild-inertia orbits and the available irreducible-representation
// descriptors.  Actual Galois data is not computable, so this is an explicit
// input (file or synthetic generator).
// ---------------------------------------------------------------------------

struct WildOrbit {
    std::string label;
    long long dim = 1;
    bool self_dual = false;
    std::string paired_endo;
};

enum class Parity { Orthogonal, Symplectic };

// The Klein four-group of quadratic characters, with the unramified one
// distinguished.
enum class QuadChar { One, Wnr, Wram1, Wram2 };

QuadChar quad_mul(QuadChar a, QuadChar b);
const char* quad_char_name(QuadChar c);
const char* parity_name(Parity p);

struct IrrepDescriptor {
    std::string id;
    long long dim = 1;
    Parity parity = Parity::Orthogonal;
    QuadChar det = QuadChar::One;
    std::string orbit_label;

    void check() const;
};

class EndoRegistry {
public:
    void add_class(EndoClassInvariants cls, const std::string& square_label,
                   const std::string& orbit_label);
    void add_orbit(WildOrbit orbit);
    void add_irrep(IrrepDescriptor irrep);
    void validate();

    const EndoClassInvariants& cls(const std::string& label) const;
    const std::string& square_of(const std::string& label) const;
    const std::string& unsquare_of(const std::string& label) const;
    const WildOrbit& orbit_of_endo(const std::string& endo_label) const;
    const WildOrbit& orbit(const std::string& orbit_label) const;
    const EndoClassInvariants& endo_of_orbit(const std::string& orbit_label) const;
    const std::string& trivial_class_label() const;
    const std::string& trivial_orbit_label() const;

    std::vector<std::string> class_labels() const;       // sorted
    std::vector<std::string> self_dual_class_labels() const;
    std::vector<const WildOrbit*> self_dual_orbits() const;
    std::vector<const IrrepDescriptor*> irreps_for_orbit(const std::string& orbit_label) const;
    const std::vector<IrrepDescriptor>& irreps() const { return irreps_; }
    const IrrepDescriptor& irrep(const std::string& id) const;
    std::size_t size() const { return classes_.size(); }

    // Deterministic synthetic registry for tests and `verify`: n_classes
    // endo-classes spread over a few (degree, e, f, duality) strata with a
    // seeded squaring permutation, matching orbits, irrep quadruples for the
    // self-dual orbits, the four quadratic characters and depth-zero
    // orthogonal/symplectic pairs of even dimension.
    static EndoRegistry synthetic(unsigned long long seed, int n_classes = 60,
                                  long long max_depth_zero_dim = 14);

private:
    std::map<std::string, EndoClassInvariants> classes_;
    std::map<std::string, std::string> square_;
    std::map<std::string, std::string> unsquare_;
    std::map<std::string, WildOrbit> orbits_;
    std::map<std::string, std::string> endo_to_orbit_;
    std::map<std::string, std::string> orbit_to_endo_;
    std::vector<IrrepDescriptor> irreps_;
    std::string trivial_class_;
    std::string trivial_orbit_;
};

// ---------------------------------------------------------------------------
// Endo-parameters and wild parameters
// ---------------------------------------------------------------------------

// Formal non-negative combination of endo-classes; degree is sum m deg.
struct EndoParameter {
    std::map<std::string, long long> terms; // label -> multiplicity >= 1
};

EndoParameter endoparam_make(const EndoRegistry& reg,
                             const std::map<std::string, long long>& terms);
long long endoparam_degree(const EndoRegistry& reg, const EndoParameter& ep);
bool endoparam_self_dual(const EndoRegistry& reg, const EndoParameter& ep);
EndoParameter endoparam_square(const EndoRegistry& reg, const EndoParameter& ep);
EndoParameter endoparam_unsquare(const EndoRegistry& reg, const EndoParameter& ep);

// Self-dual degree-2N parameter -> degree-(2N+1) parameter: square every
// term and add one trivial class.
EndoParameter iota_2n(const EndoRegistry& reg, const EndoParameter& ep);

struct WildParameter {
    std::map<std::string, long long> terms; // orbit label -> multiplicity >= 1
};

long long wild_dim(const EndoRegistry& reg, const WildParameter& wp);
bool wild_discrete_self_dual(const EndoRegistry& reg, const WildParameter& wp);

// Term-wise label swap through the orbit pairing; preserves multiplicities
// and matches degree with dimension.
WildParameter ramification_gl(const EndoRegistry& reg, const EndoParameter& ep);
EndoParameter ramification_gl_inverse(const EndoRegistry& reg, const WildParameter& wp);

// ramification_gl(iota_2n(ep)): dimension 2N+1, discrete self-dual.
WildParameter ramification_sp(const EndoRegistry& reg, const EndoParameter& ep);

// ---------------------------------------------------------------------------
// Langlands-parameter shapes
// ---------------------------------------------------------------------------

struct LParamBlock {
    IrrepDescriptor sigma;
    long long m = 1;
};

struct LParamShape {
    std::vector<LParamBlock> blocks; // kept sorted by (sigma.id, m)

    void sort_canonical();
};

struct DiscreteReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Multiplicity-freeness, dimension sum 2N+1, parity-vs-m matching, and
// determinant product 1 in the Klein four-group.
DiscreteReport validate_discrete(const LParamShape& shape, long long n_half);

// Without holes: every (sigma, m) with m > 2 has (sigma, m-2) present.
bool is_cuspidal(const LParamShape& shape);

struct PacketCounts {
    long long packet_size = 1;                 // 2^(#blocks - 1)
    std::optional<long long> cuspidal_count;   // 2^(#distinct orthogonal sigma - 1), iff cuspidal
};

PacketCounts packet_counts(const LParamShape& shape);

bool is_regular(const LParamShape& shape); // all blocks orthogonal with m = 1

// Restriction to wild inertia: each block contributes m * dim(sigma)/dim(orbit)
// copies of its orbit.
WildParameter shape_wild_restriction(const EndoRegistry& reg, const LParamShape& shape);

// All discrete cuspidal shapes of dimension 2N+1 over the inventory, in
// canonical order.  node_budget guards the search.
std::vector<LParamShape> enumerate_cuspidal_shapes(long long n_half,
                                                   const std::vector<IrrepDescriptor>& inventory,
                                                   long long node_budget = 2'000'000);

// The four-squares construction of a (generally irregular) shape restricting
// to a given discrete self-dual wild parameter of odd dimension.
LParamShape four_squares_shape(const EndoRegistry& reg, const WildParameter& wp);

// ---------------------------------------------------------------------------
// Parity of a self-dual representation vs its self-dual unramified twist
// ---------------------------------------------------------------------------

struct GaloisDescriptor {
    bool tame = false;
    long long d = 1; // dim of the tame multiplicity factor
    bool k_over_ktilde_ramified = false;
    bool alpha_ramified = false;
};

struct ParityDecision {
    bool same_parity = false;
    std::optional<Parity> parity; // set iff same_parity
};

ParityDecision parity_decision(const GaloisDescriptor& g);

// Existence of self-dual cuspidals of relative degree m with the given
// duality type: odd m for unramified quadratic, m = 1 or even for ramified
// quadratic, even m for the trivial class (plus the degree-1 quadratic
// characters, all orthogonal).
bool existence_table(SelfDualType dual_type, long long m);

} // namespace ijord
