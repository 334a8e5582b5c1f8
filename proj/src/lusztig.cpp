#include "ijord/lusztig.hpp"

#include <optional>

namespace ijord {

const char* group_kind_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::Unitary: return "unitary";
        case GroupKind::OddSpecialOrthogonal: return "odd_special_orthogonal";
        case GroupKind::Symplectic: return "symplectic";
        case GroupKind::EvenSpecialOrthogonal: return "even_special_orthogonal";
    }
    return "?";
}

GroupType::GroupType(GroupKind kind, DualityContext ctx) : kind_(kind), ctx_(std::move(ctx)) {
    bool unitary = kind_ == GroupKind::Unitary;
    if (unitary != (ctx_.index() == 2))
        throw Error(Errc::InvalidArgument,
                    std::string("group kind ") + group_kind_name(kind_) +
                        " is incompatible with duality index " + std::to_string(ctx_.index()));
}

namespace {

// a = b(b+1)/2
std::optional<long long> solve_triangular(long long a) {
    for (long long b = 0; b * (b + 1) / 2 <= a; ++b)
        if (b * (b + 1) / 2 == a) return b;
    return std::nullopt;
}

// a = 2(b^2+b)
std::optional<long long> solve_two_pochhammer(long long a) {
    for (long long b = 0; 2 * b * (b + 1) <= a; ++b)
        if (2 * b * (b + 1) == a) return b;
    return std::nullopt;
}

// a = 2(b^2+b)+1
std::optional<long long> solve_two_pochhammer_plus_one(long long a) {
    if (a < 1) return std::nullopt;
    return solve_two_pochhammer(a - 1);
}

// a = 2b^2
std::optional<long long> solve_two_square(long long a) {
    for (long long b = 0; 2 * b * b <= a; ++b)
        if (2 * b * b == a) return b;
    return std::nullopt;
}

std::optional<long long> solve_b(GroupKind kind, int index, const MonicPoly& p, long long a) {
    if (index == 2 || (!is_x_minus_one(p) && !is_x_plus_one(p))) return solve_triangular(a);
    if (is_x_minus_one(p)) {
        switch (kind) {
            case GroupKind::OddSpecialOrthogonal: return solve_two_pochhammer(a);
            case GroupKind::Symplectic: return solve_two_pochhammer_plus_one(a);
            case GroupKind::EvenSpecialOrthogonal: return solve_two_square(a);
            default: return std::nullopt;
        }
    }
    // X+1
    switch (kind) {
        case GroupKind::OddSpecialOrthogonal: return solve_two_pochhammer(a);
        case GroupKind::Symplectic: return solve_two_square(a);
        case GroupKind::EvenSpecialOrthogonal: return solve_two_square(a);
        default: return std::nullopt;
    }
}

} // namespace

CuspidalDatum CuspidalDatum::validate(GroupType gtype, long long dual_dim, PolyMap a_map,
                                      EigenTypes eigen) {
    const DualityContext& ctx = gtype.ctx();
    if (dual_dim < 0) throw Error(Errc::InvalidArgument, "dual_dim must be non-negative");

    long long total = 0;
    PolyMap b_map;
    for (const auto& [p, a] : a_map) {
        if (a < 1) throw Error(Errc::InvalidArgument, "a_P entries must be >= 1");
        SelfDualPoly::make(p, ctx); // keys are self-dual irreducible over the datum's context
        auto b = solve_b(gtype.kind(), ctx.index(), p, a);
        if (!b)
            throw Error(Errc::NonTriangular, "a=" + std::to_string(a) + " at " + p.to_string() +
                                                 " matches no admissible b for " +
                                                 group_kind_name(gtype.kind()));
        b_map.emplace(p, *b);
        total += a * p.degree();
    }

    if (gtype.kind() == GroupKind::Symplectic) {
        auto it = a_map.find(x_minus_one(ctx.field()));
        if (it == a_map.end())
            throw Error(Errc::MissingSymplecticPlus,
                        "symplectic data need the X-1 entry (a_+ is odd, hence >= 1)");
    }

    if (total != dual_dim)
        throw Error(Errc::DimensionMismatch, "sum a_P deg(P) = " + std::to_string(total) +
                                                 " but dual_dim = " + std::to_string(dual_dim));

    // eigen types: (-1)^{b_+-}; meaningful for both signs in the
    // even-orthogonal case and for the minus sign in the symplectic case
    auto check_eigen = [&](std::optional<int> claimed, const MonicPoly& key, bool meaningful) {
        if (!claimed) return;
        if (*claimed != 1 && *claimed != -1)
            throw Error(Errc::EigenTypeMismatch, "eigen types are +1 or -1");
        if (!meaningful)
            throw Error(Errc::EigenTypeMismatch,
                        std::string("eigen type not defined for ") + group_kind_name(gtype.kind()));
        auto it = b_map.find(key);
        long long b = it == b_map.end() ? 0 : it->second;
        int expected = (b % 2 == 0) ? 1 : -1;
        if (*claimed != expected)
            throw Error(Errc::EigenTypeMismatch, "eigen type at " + key.to_string() + " is " +
                                                     std::to_string(*claimed) + ", expected " +
                                                     std::to_string(expected));
    };
    bool even_orth = gtype.kind() == GroupKind::EvenSpecialOrthogonal;
    bool symplectic = gtype.kind() == GroupKind::Symplectic;
    check_eigen(eigen.plus, x_minus_one(ctx.field()), even_orth);
    check_eigen(eigen.minus, x_plus_one(ctx.field()), even_orth || symplectic);

    return CuspidalDatum(std::move(gtype), dual_dim, std::move(a_map), std::move(b_map),
                         std::move(eigen));
}

CuspidalDatum datum_validate(GroupType gtype, long long dual_dim, const PolyMap& a_map,
                             EigenTypes eigen) {
    return CuspidalDatum::validate(std::move(gtype), dual_dim, a_map, std::move(eigen));
}

long long CuspidalDatum::a(const MonicPoly& p) const {
    auto it = a_map_.find(p);
    return it == a_map_.end() ? 0 : it->second;
}

long long CuspidalDatum::b(const MonicPoly& p) const {
    auto it = b_map_.find(p);
    return it == b_map_.end() ? 0 : it->second;
}

long long CuspidalDatum::dimension() const {
    long long total = 0;
    for (const auto& [p, a] : a_map_) total += a * p.degree();
    return total;
}

long long CuspidalDatum::space_dim() const {
    switch (gtype_.kind()) {
        case GroupKind::Unitary: return dual_dim_;
        case GroupKind::Symplectic: return dual_dim_ - 1;
        case GroupKind::EvenSpecialOrthogonal: return dual_dim_;
        case GroupKind::OddSpecialOrthogonal: return dual_dim_ + 1;
    }
    return dual_dim_;
}

long long datum_dimension(const CuspidalDatum& d) { return d.dimension(); }

CuspidalDatum datum_twist(const CuspidalDatum& d, Involution sig) {
    if (sig == Involution::Identity) return d;
    PolyMap twisted;
    for (const auto& [p, a] : d.a_map()) twisted.emplace(apply_involution(sig, p), a);
    EigenTypes eigen{d.eigen_types().minus, d.eigen_types().plus}; // NegateVariable swaps the eigenspaces
    return CuspidalDatum::validate(d.gtype(), d.dual_dim(), std::move(twisted), eigen);
}

} // namespace ijord
