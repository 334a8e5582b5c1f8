#pragma once

#include <map>
#include <optional>
#include <string>

#include "ijord/ffpoly.hpp"

namespace ijord {

enum class GroupKind { Unitary, OddSpecialOrthogonal, Symplectic, EvenSpecialOrthogonal };

const char* group_kind_name(GroupKind kind);

// A connected classical group over the fixed subfield of the duality context.
// Unitary goes with index 2, the three split kinds with index 1.
class GroupType {
public:
    GroupType(GroupKind kind, DualityContext ctx);

    GroupKind kind() const { return kind_; }
    const DualityContext& ctx() const { return ctx_; }

    bool operator==(const GroupType& other) const {
        return kind_ == other.kind_ && ctx_ == other.ctx_;
    }

private:
    GroupKind kind_;
    DualityContext ctx_;
};

// Claimed types of the (+1)/(-1) eigenspaces, checked against (-1)^{b_+-}
// where meaningful (even-orthogonal: both; symplectic: minus only).
struct EigenTypes {
    std::optional<int> plus;
    std::optional<int> minus;
};

using PolyMap = std::map<MonicPoly, long long, MonicPolyLess>;

// The semisimple-class data of a cuspidal Lusztig series: the exponent map
// P -> a_P of the characteristic polynomial, with b_P solved from the
// per-kind constraints.  Absent keys mean a_P = 0 (so b_P = 0); the
// symplectic a_+ entry is mandatory since its constraint forces a_+ odd.
class CuspidalDatum {
public:
    static CuspidalDatum validate(GroupType gtype, long long dual_dim, PolyMap a_map,
                                  EigenTypes eigen = {});

    const GroupType& gtype() const { return gtype_; }
    long long dual_dim() const { return dual_dim_; }
    const PolyMap& a_map() const { return a_map_; }
    const PolyMap& b_map() const { return b_map_; }
    const EigenTypes& eigen_types() const { return eigen_; }

    long long a(const MonicPoly& p) const;
    long long b(const MonicPoly& p) const;

    // Sum a_P deg(P); equals dual_dim by construction.
    long long dimension() const;

    // Dimension of the space the group itself acts on: the dual of a
    // symplectic group acts on a space of dimension one more, the dual of an
    // odd special orthogonal group on one less, unitary and even orthogonal
    // keep the dimension.
    long long space_dim() const;

    bool operator==(const CuspidalDatum& other) const {
        return gtype_ == other.gtype_ && dual_dim_ == other.dual_dim_ && a_map_ == other.a_map_;
    }

private:
    CuspidalDatum(GroupType gtype, long long dual_dim, PolyMap a_map, PolyMap b_map,
                  EigenTypes eigen)
        : gtype_(std::move(gtype)), dual_dim_(dual_dim), a_map_(std::move(a_map)),
          b_map_(std::move(b_map)), eigen_(std::move(eigen)) {}

    GroupType gtype_;
    long long dual_dim_;
    PolyMap a_map_;
    PolyMap b_map_;
    EigenTypes eigen_;
};

CuspidalDatum datum_validate(GroupType gtype, long long dual_dim, const PolyMap& a_map,
                             EigenTypes eigen = {});

// a'_P = a_{sig(P)}, re-validated.  Twisting the X-1 / X+1 entries of a
// non-unitary datum can fail the constraint system; that surfaces as the
// validation error rather than a silent repair.
CuspidalDatum datum_twist(const CuspidalDatum& d, Involution sig);

long long datum_dimension(const CuspidalDatum& d);

} // namespace ijord
