#include "ijord/params.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <functional>
#include <sstream>

namespace ijord {

QuadChar quad_mul(QuadChar a, QuadChar b) {
    auto bits = [](QuadChar c) -> int {
        switch (c) {
            case QuadChar::One: return 0;
            case QuadChar::Wnr: return 1;
            case QuadChar::Wram1: return 2;
            case QuadChar::Wram2: return 3;
        }
        return 0;
    };
    int x = bits(a) ^ bits(b);
    switch (x) {
        case 0: return QuadChar::One;
        case 1: return QuadChar::Wnr;
        case 2: return QuadChar::Wram1;
        default: return QuadChar::Wram2;
    }
}

const char* quad_char_name(QuadChar c) {
    switch (c) {
        case QuadChar::One: return "1";
        case QuadChar::Wnr: return "w_nr";
        case QuadChar::Wram1: return "w_r1";
        case QuadChar::Wram2: return "w_r2";
    }
    return "?";
}

const char* parity_name(Parity p) {
    return p == Parity::Orthogonal ? "orthogonal" : "symplectic";
}

void IrrepDescriptor::check() const {
    if (id.empty()) throw Error(Errc::InvalidArgument, "irrep id must be non-empty");
    if (dim < 1) throw Error(Errc::InvalidArgument, "irrep dimension must be >= 1");
    if (dim % 2 != 0 && (parity != Parity::Orthogonal || dim != 1))
        throw Error(Errc::InvalidArgument,
                    "odd-dimensional self-dual irreps are the quadratic characters (dim 1, orthogonal)");
    if (parity == Parity::Symplectic && det != QuadChar::One)
        throw Error(Errc::InvalidArgument, "symplectic irreps have trivial determinant");
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

void EndoRegistry::add_class(EndoClassInvariants cls, const std::string& square_label,
                             const std::string& orbit_label) {
    cls.check();
    if (classes_.count(cls.label))
        throw Error(Errc::DuplicateEndoClass, "endo-class '" + cls.label + "' already registered");
    square_[cls.label] = square_label;
    endo_to_orbit_[cls.label] = orbit_label;
    classes_.emplace(cls.label, std::move(cls));
}

void EndoRegistry::add_orbit(WildOrbit orbit) {
    if (orbits_.count(orbit.label))
        throw Error(Errc::DuplicateEndoClass, "orbit '" + orbit.label + "' already registered");
    orbit_to_endo_[orbit.label] = orbit.paired_endo;
    orbits_.emplace(orbit.label, std::move(orbit));
}

void EndoRegistry::add_irrep(IrrepDescriptor irrep) {
    irrep.check();
    irreps_.push_back(std::move(irrep));
}

void EndoRegistry::validate() {
    unsquare_.clear();
    trivial_class_.clear();
    trivial_orbit_.clear();

    for (const auto& [label, cls] : classes_) {
        auto sq_it = square_.find(label);
        if (sq_it == square_.end() || !classes_.count(sq_it->second))
            throw Error(Errc::UnpairedLabel, "class '" + label + "' has no square in the registry");
        const EndoClassInvariants& sq = classes_.at(sq_it->second);
        if (sq.degree != cls.degree || sq.e != cls.e || sq.f != cls.f ||
            sq.dual_type != cls.dual_type)
            throw Error(Errc::InvalidArgument,
                        "squaring must preserve degree, e, f and duality type ('" + label + "')");
        if (!unsquare_.emplace(sq_it->second, label).second)
            throw Error(Errc::InvalidArgument, "squaring map is not injective at '" + sq_it->second + "'");

        if (cls.self_dual() && *cls.dual_type == SelfDualType::TrivialClass) {
            if (!trivial_class_.empty())
                throw Error(Errc::DuplicateEndoClass, "two trivial endo-classes registered");
            trivial_class_ = label;
            if (sq_it->second != label)
                throw Error(Errc::InvalidArgument, "the trivial class squares to itself");
        }

        auto orb_it = endo_to_orbit_.find(label);
        if (orb_it == endo_to_orbit_.end() || !orbits_.count(orb_it->second))
            throw Error(Errc::UnpairedLabel, "class '" + label + "' has no paired wild orbit");
        const WildOrbit& orb = orbits_.at(orb_it->second);
        if (orb.dim != cls.degree)
            throw Error(Errc::InvalidArgument,
                        "orbit dimension must equal the endo-class degree ('" + label + "')");
        if (orb.self_dual != cls.self_dual())
            throw Error(Errc::InvalidArgument,
                        "the orbit pairing must preserve self-duality ('" + label + "')");
        if (orb.paired_endo != label)
            throw Error(Errc::UnpairedLabel, "orbit '" + orb.label + "' points back to '" +
                                                 orb.paired_endo + "', not '" + label + "'");
    }
    if (trivial_class_.empty())
        throw Error(Errc::RegistryMissing, "registry needs the trivial endo-class");
    trivial_orbit_ = endo_to_orbit_.at(trivial_class_);

    if (orbit_to_endo_.size() != classes_.size())
        throw Error(Errc::UnpairedLabel, "endo-classes and orbits are not in bijection");
    for (const auto& [olabel, orbit] : orbits_) {
        if (!classes_.count(orbit.paired_endo))
            throw Error(Errc::UnpairedLabel, "orbit '" + olabel + "' pairs with unknown endo-class");
        if (orbit.self_dual && orbit.dim == 1 && olabel != trivial_orbit_)
            throw Error(Errc::InvalidArgument,
                        "the only self-dual orbit of dimension 1 is the trivial one");
    }

    std::set<std::string> ids;
    for (const auto& irrep : irreps_) {
        irrep.check();
        if (!ids.insert(irrep.id).second)
            throw Error(Errc::DuplicateEndoClass, "irrep id '" + irrep.id + "' repeats");
        auto it = orbits_.find(irrep.orbit_label);
        if (it == orbits_.end())
            throw Error(Errc::UnknownLabel, "irrep '" + irrep.id + "' names unknown orbit");
        if (irrep.dim % it->second.dim != 0)
            throw Error(Errc::InvalidArgument,
                        "irrep dimension must be a multiple of its orbit dimension ('" + irrep.id + "')");
    }
}

const EndoClassInvariants& EndoRegistry::cls(const std::string& label) const {
    auto it = classes_.find(label);
    if (it == classes_.end()) throw Error(Errc::UnknownLabel, "unknown endo-class '" + label + "'");
    return it->second;
}

const std::string& EndoRegistry::square_of(const std::string& label) const {
    auto it = square_.find(label);
    if (it == square_.end()) throw Error(Errc::UnpairedLabel, "no square for '" + label + "'");
    return it->second;
}

const std::string& EndoRegistry::unsquare_of(const std::string& label) const {
    auto it = unsquare_.find(label);
    if (it == unsquare_.end()) throw Error(Errc::UnpairedLabel, "no square root for '" + label + "'");
    return it->second;
}

const WildOrbit& EndoRegistry::orbit_of_endo(const std::string& endo_label) const {
    auto it = endo_to_orbit_.find(endo_label);
    if (it == endo_to_orbit_.end())
        throw Error(Errc::UnpairedLabel, "no orbit paired with '" + endo_label + "'");
    return orbits_.at(it->second);
}

const WildOrbit& EndoRegistry::orbit(const std::string& orbit_label) const {
    auto it = orbits_.find(orbit_label);
    if (it == orbits_.end()) throw Error(Errc::UnknownLabel, "unknown orbit '" + orbit_label + "'");
    return it->second;
}

const EndoClassInvariants& EndoRegistry::endo_of_orbit(const std::string& orbit_label) const {
    auto it = orbit_to_endo_.find(orbit_label);
    if (it == orbit_to_endo_.end())
        throw Error(Errc::UnpairedLabel, "no endo-class paired with '" + orbit_label + "'");
    return classes_.at(it->second);
}

const std::string& EndoRegistry::trivial_class_label() const {
    if (trivial_class_.empty()) throw Error(Errc::RegistryMissing, "registry not validated");
    return trivial_class_;
}

const std::string& EndoRegistry::trivial_orbit_label() const {
    if (trivial_orbit_.empty()) throw Error(Errc::RegistryMissing, "registry not validated");
    return trivial_orbit_;
}

std::vector<std::string> EndoRegistry::class_labels() const {
    std::vector<std::string> out;
    for (const auto& [label, cls] : classes_) {
        (void)cls;
        out.push_back(label);
    }
    return out;
}

std::vector<std::string> EndoRegistry::self_dual_class_labels() const {
    std::vector<std::string> out;
    for (const auto& [label, cls] : classes_)
        if (cls.self_dual()) out.push_back(label);
    return out;
}

std::vector<const WildOrbit*> EndoRegistry::self_dual_orbits() const {
    std::vector<const WildOrbit*> out;
    for (const auto& [label, orbit] : orbits_) {
        (void)label;
        if (orbit.self_dual) out.push_back(&orbit);
    }
    return out;
}

std::vector<const IrrepDescriptor*> EndoRegistry::irreps_for_orbit(
    const std::string& orbit_label) const {
    std::vector<const IrrepDescriptor*> out;
    for (const auto& irrep : irreps_)
        if (irrep.orbit_label == orbit_label) out.push_back(&irrep);
    std::sort(out.begin(), out.end(),
              [](const IrrepDescriptor* a, const IrrepDescriptor* b) { return a->id < b->id; });
    return out;
}

const IrrepDescriptor& EndoRegistry::irrep(const std::string& id) const {
    for (const auto& irrep : irreps_)
        if (irrep.id == id) return irrep;
    throw Error(Errc::UnknownLabel, "unknown irrep '" + id + "'");
}

EndoRegistry EndoRegistry::synthetic(unsigned long long seed, int n_classes,
                                     long long max_depth_zero_dim) {
    EndoRegistry reg;
    std::mt19937_64 rng(seed);

    struct Stratum {
        long long degree, e, f;
        std::optional<SelfDualType> dual;
        const char* tag;
    };
    const std::vector<Stratum> strata = {
        {2, 1, 2, SelfDualType::UnramifiedQuadratic, "u2"},
        {2, 2, 1, SelfDualType::RamifiedQuadratic, "r2"},
        {4, 2, 2, SelfDualType::UnramifiedQuadratic, "u4"},
        {4, 4, 1, SelfDualType::RamifiedQuadratic, "r4"},
        {2, 1, 2, std::nullopt, "g2"},
        {3, 1, 3, std::nullopt, "g3"},
        {4, 1, 4, std::nullopt, "g4"},
    };

    struct Pending {
        std::vector<std::string> labels;
        Stratum stratum;
    };
    std::vector<Pending> pending;
    int made = 1; // the trivial class
    for (std::size_t si = 0; made < n_classes; si = (si + 1) % strata.size()) {
        const Stratum& st = strata[si];
        Pending batch{{}, st};
        int take = std::min<int>(4, n_classes - made);
        for (int i = 0; i < take; ++i) {
            std::ostringstream label;
            label << st.tag << "." << made;
            batch.labels.push_back(label.str());
            ++made;
        }
        pending.push_back(std::move(batch));
    }

    auto orbit_label = [](const std::string& endo) { return "w:" + endo; };

    // trivial class, fixed by squaring
    EndoClassInvariants triv{"1", 1, 1, 1, SelfDualType::TrivialClass};
    reg.add_class(triv, "1", orbit_label("1"));
    reg.add_orbit(WildOrbit{orbit_label("1"), 1, true, "1"});

    for (auto& batch : pending) {
        // seeded permutation of each stratum batch as the squaring map
        std::vector<std::string> to = batch.labels;
        std::shuffle(to.begin(), to.end(), rng);
        for (std::size_t i = 0; i < batch.labels.size(); ++i) {
            EndoClassInvariants cls{batch.labels[i], batch.stratum.degree, batch.stratum.e,
                                    batch.stratum.f, batch.stratum.dual};
            reg.add_class(cls, to[i], orbit_label(batch.labels[i]));
            reg.add_orbit(WildOrbit{orbit_label(batch.labels[i]), cls.degree, cls.self_dual(),
                                    batch.labels[i]});
        }
    }

    // quadratic characters on the trivial orbit
    const QuadChar chars[4] = {QuadChar::One, QuadChar::Wnr, QuadChar::Wram1, QuadChar::Wram2};
    for (QuadChar c : chars)
        reg.add_irrep(IrrepDescriptor{std::string("char.") + quad_char_name(c), 1,
                                      Parity::Orthogonal, c, orbit_label("1")});
    // depth-zero pairs of even dimension
    for (long long d = 2; d <= max_depth_zero_dim; d += 2) {
        std::string base = "dz" + std::to_string(d);
        reg.add_irrep(IrrepDescriptor{base + ".o1", d, Parity::Orthogonal, QuadChar::One,
                                      orbit_label("1")});
        reg.add_irrep(IrrepDescriptor{base + ".o2", d, Parity::Orthogonal, QuadChar::Wnr,
                                      orbit_label("1")});
        reg.add_irrep(IrrepDescriptor{base + ".s1", d, Parity::Symplectic, QuadChar::One,
                                      orbit_label("1")});
        reg.add_irrep(IrrepDescriptor{base + ".s2", d, Parity::Symplectic, QuadChar::One,
                                      orbit_label("1")});
    }
    // a quadruple over every nontrivial self-dual orbit
    for (const auto& label : reg.self_dual_class_labels()) {
        const EndoClassInvariants& cls = reg.cls(label);
        if (*cls.dual_type == SelfDualType::TrivialClass) continue;
        std::string ol = orbit_label(label);
        QuadChar det1 = (rng() & 1) ? QuadChar::Wnr : QuadChar::One;
        QuadChar det2 = (rng() & 1) ? QuadChar::Wram1 : QuadChar::Wram2;
        reg.add_irrep(IrrepDescriptor{label + ".o1", cls.degree, Parity::Orthogonal, det1, ol});
        reg.add_irrep(IrrepDescriptor{label + ".o2", cls.degree, Parity::Orthogonal, det2, ol});
        reg.add_irrep(IrrepDescriptor{label + ".s1", cls.degree, Parity::Symplectic, QuadChar::One, ol});
        reg.add_irrep(IrrepDescriptor{label + ".s2", cls.degree, Parity::Symplectic, QuadChar::One, ol});
    }

    reg.validate();
    return reg;
}

// ---------------------------------------------------------------------------
// endo-parameter / wild-parameter algebra
// ---------------------------------------------------------------------------

EndoParameter endoparam_make(const EndoRegistry& reg,
                             const std::map<std::string, long long>& terms) {
    EndoParameter ep;
    for (const auto& [label, mult] : terms) {
        if (mult < 1) throw Error(Errc::InvalidArgument, "multiplicities must be >= 1");
        reg.cls(label);
        ep.terms[label] = mult;
    }
    return ep;
}

long long endoparam_degree(const EndoRegistry& reg, const EndoParameter& ep) {
    long long total = 0;
    for (const auto& [label, mult] : ep.terms) total += mult * reg.cls(label).degree;
    return total;
}

bool endoparam_self_dual(const EndoRegistry& reg, const EndoParameter& ep) {
    for (const auto& [label, mult] : ep.terms) {
        (void)mult;
        if (!reg.cls(label).self_dual()) return false;
    }
    return true;
}

EndoParameter endoparam_square(const EndoRegistry& reg, const EndoParameter& ep) {
    EndoParameter out;
    for (const auto& [label, mult] : ep.terms) out.terms[reg.square_of(label)] += mult;
    return out;
}

EndoParameter endoparam_unsquare(const EndoRegistry& reg, const EndoParameter& ep) {
    EndoParameter out;
    for (const auto& [label, mult] : ep.terms) out.terms[reg.unsquare_of(label)] += mult;
    return out;
}

EndoParameter iota_2n(const EndoRegistry& reg, const EndoParameter& ep) {
    if (!endoparam_self_dual(reg, ep))
        throw Error(Errc::NotSelfDual, "iota_2N needs a self-dual endo-parameter");
    if (endoparam_degree(reg, ep) % 2 != 0)
        throw Error(Errc::OddDegree, "iota_2N needs even degree");
    EndoParameter out = endoparam_square(reg, ep);
    out.terms[reg.trivial_class_label()] += 1;
    return out;
}

long long wild_dim(const EndoRegistry& reg, const WildParameter& wp) {
    long long total = 0;
    for (const auto& [label, mult] : wp.terms) total += mult * reg.orbit(label).dim;
    return total;
}

bool wild_discrete_self_dual(const EndoRegistry& reg, const WildParameter& wp) {
    for (const auto& [label, mult] : wp.terms) {
        (void)mult;
        if (!reg.orbit(label).self_dual) return false;
    }
    return true;
}

WildParameter ramification_gl(const EndoRegistry& reg, const EndoParameter& ep) {
    WildParameter wp;
    for (const auto& [label, mult] : ep.terms) wp.terms[reg.orbit_of_endo(label).label] += mult;
    return wp;
}

EndoParameter ramification_gl_inverse(const EndoRegistry& reg, const WildParameter& wp) {
    EndoParameter ep;
    for (const auto& [label, mult] : wp.terms) ep.terms[reg.endo_of_orbit(label).label] += mult;
    return ep;
}

WildParameter ramification_sp(const EndoRegistry& reg, const EndoParameter& ep) {
    WildParameter wp = ramification_gl(reg, iota_2n(reg, ep));
    return wp;
}

// ---------------------------------------------------------------------------
// shapes
// ---------------------------------------------------------------------------

void LParamShape::sort_canonical() {
    std::sort(blocks.begin(), blocks.end(), [](const LParamBlock& a, const LParamBlock& b) {
        if (a.sigma.id != b.sigma.id) return a.sigma.id < b.sigma.id;
        return a.m < b.m;
    });
}

DiscreteReport validate_discrete(const LParamShape& shape, long long n_half) {
    DiscreteReport rep;
    std::set<std::pair<std::string, long long>> seen;
    long long dim = 0;
    QuadChar det = QuadChar::One;
    for (const auto& block : shape.blocks) {
        block.sigma.check();
        if (block.m < 1) {
            rep.violations.push_back("block multiplicity m must be >= 1");
            continue;
        }
        if (!seen.insert({block.sigma.id, block.m}).second)
            rep.violations.push_back("block (" + block.sigma.id + ", " + std::to_string(block.m) +
                                     ") repeats");
        bool even_m = block.m % 2 == 0;
        if (even_m != (block.sigma.parity == Parity::Symplectic))
            rep.violations.push_back("block (" + block.sigma.id + ", " + std::to_string(block.m) +
                                     ") has parity " + parity_name(block.sigma.parity) +
                                     " against its multiplicity");
        dim += block.m * block.sigma.dim;
        if (block.m % 2 != 0) det = quad_mul(det, block.sigma.det);
    }
    if (dim != 2 * n_half + 1)
        rep.violations.push_back("dimension sum " + std::to_string(dim) + " != " +
                                 std::to_string(2 * n_half + 1));
    if (det != QuadChar::One)
        rep.violations.push_back(std::string("determinant product is ") + quad_char_name(det));
    rep.ok = rep.violations.empty();
    return rep;
}

bool is_cuspidal(const LParamShape& shape) {
    std::set<std::pair<std::string, long long>> present;
    for (const auto& block : shape.blocks) present.insert({block.sigma.id, block.m});
    for (const auto& block : shape.blocks)
        if (block.m > 2 && !present.count({block.sigma.id, block.m - 2})) return false;
    return true;
}

PacketCounts packet_counts(const LParamShape& shape) {
    PacketCounts out;
    long long blocks = static_cast<long long>(shape.blocks.size());
    out.packet_size = blocks <= 1 ? 1 : (1LL << (blocks - 1));
    if (!is_cuspidal(shape)) return out;
    std::set<std::string> orth;
    for (const auto& block : shape.blocks)
        if (block.sigma.parity == Parity::Orthogonal) orth.insert(block.sigma.id);
    long long n_orth = static_cast<long long>(orth.size());
    out.cuspidal_count = n_orth <= 1 ? 1 : (1LL << (n_orth - 1));
    return out;
}

bool is_regular(const LParamShape& shape) {
    for (const auto& block : shape.blocks)
        if (block.m != 1 || block.sigma.parity != Parity::Orthogonal) return false;
    return true;
}

WildParameter shape_wild_restriction(const EndoRegistry& reg, const LParamShape& shape) {
    WildParameter wp;
    for (const auto& block : shape.blocks) {
        const WildOrbit& orbit = reg.orbit(block.sigma.orbit_label);
        wp.terms[orbit.label] += block.m * (block.sigma.dim / orbit.dim);
    }
    return wp;
}

std::vector<LParamShape> enumerate_cuspidal_shapes(long long n_half,
                                                   const std::vector<IrrepDescriptor>& inventory,
                                                   long long node_budget) {
    if (n_half < 0) throw Error(Errc::InvalidArgument, "N must be non-negative");
    std::vector<IrrepDescriptor> inv(inventory);
    std::sort(inv.begin(), inv.end(),
              [](const IrrepDescriptor& a, const IrrepDescriptor& b) { return a.id < b.id; });
    for (const auto& s : inv) s.check();

    const long long target = 2 * n_half + 1;
    std::vector<LParamShape> out;
    std::vector<long long> ladder(inv.size(), 0);
    long long nodes = 0;

    // Cuspidality forces each sigma's blocks to be a full ladder from 1
    // (orthogonal) or 2 (symplectic); choosing a ladder length per inventory
    // entry enumerates exactly the discrete cuspidal shapes.
    auto ladder_dim = [&](std::size_t i, long long a) {
        const IrrepDescriptor& s = inv[i];
        long long sum = (s.parity == Parity::Orthogonal) ? a * a : a * (a + 1);
        return sum * s.dim;
    };

    std::function<void(std::size_t, long long)> dfs = [&](std::size_t i, long long used) {
        if (++nodes > node_budget)
            throw Error(Errc::TooLarge, "shape enumeration exceeded the node budget");
        if (used > target) return;
        if (i == inv.size()) {
            if (used != target) return;
            LParamShape shape;
            QuadChar det = QuadChar::One;
            for (std::size_t j = 0; j < inv.size(); ++j) {
                long long a = ladder[j];
                if (a == 0) continue;
                const IrrepDescriptor& s = inv[j];
                if (s.parity == Parity::Orthogonal) {
                    for (long long m = 1; m <= 2 * a - 1; m += 2) shape.blocks.push_back({s, m});
                    if (a % 2 != 0) det = quad_mul(det, s.det);
                } else {
                    for (long long m = 2; m <= 2 * a; m += 2) shape.blocks.push_back({s, m});
                }
            }
            if (det != QuadChar::One) return;
            shape.sort_canonical();
            out.push_back(std::move(shape));
            return;
        }
        for (long long a = 0;; ++a) {
            long long d = ladder_dim(i, a);
            if (used + d > target) break;
            ladder[i] = a;
            dfs(i + 1, used + d);
        }
        ladder[i] = 0;
    };
    dfs(0, 0);

    std::sort(out.begin(), out.end(), [](const LParamShape& a, const LParamShape& b) {
        auto key = [](const LParamShape& s) {
            std::vector<std::pair<std::string, long long>> k;
            for (const auto& blk : s.blocks) k.emplace_back(blk.sigma.id, blk.m);
            return k;
        };
        return key(a) < key(b);
    });
    return out;
}

namespace {

// Smallest admissible quadruple for 4m+2 = a1^2+a2^2+a3^2+a4^2 with
// a1 >= a2 even and a3 >= a4 odd, lexicographic in (a1, a2, a3, a4); the
// m = 2 case is pinned to (0, 0, 3, 1).
std::array<long long, 4> four_squares_nontrivial(long long m) {
    if (m == 2) return {0, 0, 3, 1};
    long long target = 4 * m + 2;
    for (long long a1 = 0; a1 * a1 <= target; a1 += 2)
        for (long long a2 = 0; a2 <= a1 && a1 * a1 + a2 * a2 <= target; a2 += 2)
            for (long long a3 = 1; a1 * a1 + a2 * a2 + a3 * a3 <= target; a3 += 2)
                for (long long a4 = 1; a4 <= a3; a4 += 2) {
                    if (a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4 == target)
                        return {a1, a2, a3, a4};
                }
    throw Error(Errc::NoSolution,
                "no even/odd four-squares solution for m = " + std::to_string(m) + " (unreachable)");
}

// m0 = a1^2 + ... + a4^2 with a1 of opposite parity to a2 >= a3 >= a4
// (m0 odd); lexicographically smallest.
std::array<long long, 4> four_squares_trivial(long long m0) {
    for (long long a1 = 0; a1 * a1 <= m0; ++a1) {
        long long rp = (a1 % 2 == 0) ? 1 : 0;
        for (long long a2 = rp; a1 * a1 + a2 * a2 <= m0; a2 += 2)
            for (long long a3 = rp; a3 <= a2; a3 += 2) {
                if (a1 * a1 + a2 * a2 + a3 * a3 > m0) break;
                for (long long a4 = rp; a4 <= a3; a4 += 2)
                    if (a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4 == m0) return {a1, a2, a3, a4};
            }
    }
    throw Error(Errc::NoSolution,
                "no opposite-parity four-squares solution for m0 = " + std::to_string(m0) +
                    " (unreachable)");
}

} // namespace

LParamShape four_squares_shape(const EndoRegistry& reg, const WildParameter& wp) {
    long long dim = wild_dim(reg, wp);
    if (dim % 2 == 0) throw Error(Errc::OddDegree, "wild parameter must have odd dimension");
    if (!wild_discrete_self_dual(reg, wp))
        throw Error(Errc::NotSelfDual, "wild parameter must be discrete self-dual");

    LParamShape shape;
    QuadChar correction = QuadChar::One;
    long long trivial_mult = 0;

    for (const auto& [olabel, mult] : wp.terms) {
        if (olabel == reg.trivial_orbit_label()) {
            trivial_mult = mult;
            continue;
        }
        auto irreps = reg.irreps_for_orbit(olabel);
        std::vector<const IrrepDescriptor*> orth, symp;
        for (const auto* s : irreps) {
            if (s->dim != reg.orbit(olabel).dim) continue;
            (s->parity == Parity::Orthogonal ? orth : symp).push_back(s);
        }
        if (orth.size() < 2 || symp.size() < 2)
            throw Error(Errc::RegistryMissing,
                        "orbit '" + olabel + "' needs two orthogonal and two symplectic irreps");
        const IrrepDescriptor* quad[4] = {orth[0], orth[1], symp[0], symp[1]};
        auto a = four_squares_nontrivial(mult);
        for (int i = 0; i < 4; ++i) {
            for (long long m = a[static_cast<std::size_t>(i)] - 1; m >= 1; m -= 2) {
                shape.blocks.push_back({*quad[i], m});
                if (m % 2 != 0) correction = quad_mul(correction, quad[i]->det);
            }
        }
    }

    if (trivial_mult % 2 != 1)
        throw Error(Errc::OddDegree, "trivial-orbit multiplicity must be odd");

    // the four quadratic characters, with omega_1 the determinant correction
    std::map<QuadChar, const IrrepDescriptor*> by_det;
    for (const auto* s : reg.irreps_for_orbit(reg.trivial_orbit_label()))
        if (s->dim == 1 && s->parity == Parity::Orthogonal) by_det[s->det] = s;
    if (by_det.size() != 4)
        throw Error(Errc::RegistryMissing, "registry needs all four quadratic characters");

    std::vector<const IrrepDescriptor*> omegas;
    omegas.push_back(by_det.at(correction));
    for (QuadChar c : {QuadChar::One, QuadChar::Wnr, QuadChar::Wram1, QuadChar::Wram2})
        if (c != correction) omegas.push_back(by_det.at(c));

    auto a = four_squares_trivial(trivial_mult);
    for (int i = 0; i < 4; ++i)
        for (long long m = 2 * a[static_cast<std::size_t>(i)] - 1; m >= 1; m -= 2)
            shape.blocks.push_back({*omegas[static_cast<std::size_t>(i)], m});

    shape.sort_canonical();
    return shape;
}

// ---------------------------------------------------------------------------
// parity decision and existence
// ---------------------------------------------------------------------------

ParityDecision parity_decision(const GaloisDescriptor& g) {
    ParityDecision out;
    if (g.tame) return out; // nontrivial tame self-dual pairs always split parities
    if (g.d < 1) throw Error(Errc::InvalidArgument, "d must be >= 1");
    if (g.k_over_ktilde_ramified && g.d == 1) {
        out.same_parity = true;
        out.parity = g.alpha_ramified ? Parity::Symplectic : Parity::Orthogonal;
    }
    return out;
}

bool existence_table(SelfDualType dual_type, long long m) {
    if (m < 1) throw Error(Errc::InvalidArgument, "m must be >= 1");
    switch (dual_type) {
        case SelfDualType::UnramifiedQuadratic: return m % 2 == 1;
        case SelfDualType::RamifiedQuadratic: return m == 1 || m % 2 == 0;
        case SelfDualType::TrivialClass: return m == 1 || m % 2 == 0;
    }
    return false;
}

} // namespace ijord
