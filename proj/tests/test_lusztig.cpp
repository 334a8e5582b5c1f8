#include <doctest.h>

#include "ijord/lusztig.hpp"

using namespace ijord;

namespace {

DualityContext ctx3() { return DualityContext(field_make(3, 1), 1); }
DualityContext ctx9() { return DualityContext(field_make(3, 2), 2); }

} // namespace

TEST_CASE("group type / context compatibility") {
    CHECK_THROWS_AS(GroupType(GroupKind::Unitary, ctx3()), Error);
    CHECK_THROWS_AS(GroupType(GroupKind::Symplectic, ctx9()), Error);
    CHECK_NOTHROW(GroupType(GroupKind::Unitary, ctx9()));
    CHECK_NOTHROW(GroupType(GroupKind::EvenSpecialOrthogonal, ctx3()));
}

TEST_CASE("symplectic datum with one X-1 entry") {
    auto ctx = ctx3();
    PolyMap amap;
    amap.emplace(x_minus_one(ctx.field()), 1);
    CuspidalDatum d = datum_validate(GroupType(GroupKind::Symplectic, ctx), 1, amap);
    CHECK(d.b(x_minus_one(ctx.field())) == 0);
    CHECK(d.b(x_plus_one(ctx.field())) == 0);
    CHECK(d.dimension() == 1);
    CHECK(d.space_dim() == 0);
}

TEST_CASE("unitary datum solves the triangular constraint") {
    auto ctx = ctx9();
    auto deg1 = enumerate_self_dual_irreducible(ctx, 1);
    PolyMap amap;
    amap.emplace(deg1[0].poly(), 3);
    CuspidalDatum d = datum_validate(GroupType(GroupKind::Unitary, ctx), 3, amap);
    CHECK(d.b(deg1[0].poly()) == 2); // 3 = b(b+1)/2
    CHECK(d.space_dim() == 3);
}

TEST_CASE("constraint failures") {
    auto ctx = ctx3();
    PolyMap amap;
    amap.emplace(x_minus_one(ctx.field()), 2); // even: not 2(b^2+b)+1
    CHECK_THROWS_WITH_AS(datum_validate(GroupType(GroupKind::Symplectic, ctx), 2, amap),
                         doctest::Contains("NonTriangular"), Error);

    PolyMap only_minus;
    only_minus.emplace(x_plus_one(ctx.field()), 2);
    CHECK_THROWS_WITH_AS(datum_validate(GroupType(GroupKind::Symplectic, ctx), 2, only_minus),
                         doctest::Contains("MissingSymplecticPlus"), Error);

    PolyMap good;
    good.emplace(x_minus_one(ctx.field()), 1);
    CHECK_THROWS_WITH_AS(datum_validate(GroupType(GroupKind::Symplectic, ctx), 2, good),
                         doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("eigen types are checked against (-1)^b") {
    auto ctx = ctx3();
    PolyMap amap;
    amap.emplace(x_minus_one(ctx.field()), 2); // even orthogonal: a=2b^2 -> b=1
    EigenTypes good{-1, std::nullopt};
    CHECK_NOTHROW(datum_validate(GroupType(GroupKind::EvenSpecialOrthogonal, ctx), 2, amap, good));
    EigenTypes bad{+1, std::nullopt};
    CHECK_THROWS_WITH_AS(
        datum_validate(GroupType(GroupKind::EvenSpecialOrthogonal, ctx), 2, amap, bad),
        doctest::Contains("EigenTypeMismatch"), Error);

    // the plus eigen type is not defined on the symplectic side
    PolyMap sp;
    sp.emplace(x_minus_one(ctx.field()), 1);
    EigenTypes meaningless{+1, std::nullopt};
    CHECK_THROWS_WITH_AS(datum_validate(GroupType(GroupKind::Symplectic, ctx), 1, sp, meaningless),
                         doctest::Contains("EigenTypeMismatch"), Error);
    EigenTypes minus_ok{std::nullopt, +1}; // b_- = 0
    CHECK_NOTHROW(datum_validate(GroupType(GroupKind::Symplectic, ctx), 1, sp, minus_ok));
}

TEST_CASE("datum_twist swaps the X+-1 entries") {
    auto ctx = ctx3();
    PolyMap amap;
    amap.emplace(x_minus_one(ctx.field()), 4); // odd orthogonal: 4 = 2(b^2+b), b = 1
    CuspidalDatum d = datum_validate(GroupType(GroupKind::OddSpecialOrthogonal, ctx), 4, amap);
    CuspidalDatum t = datum_twist(d, Involution::NegateVariable);
    CHECK(t.a(x_plus_one(ctx.field())) == 4);
    CHECK(t.b(x_plus_one(ctx.field())) == 1);
    CHECK(t.a(x_minus_one(ctx.field())) == 0);
    CHECK(datum_twist(t, Involution::NegateVariable) == d);
    CHECK(datum_twist(d, Involution::Identity) == d);
}

TEST_CASE("twisting a symplectic datum across the X+-1 asymmetry fails loudly") {
    auto ctx = ctx3();
    PolyMap amap;
    amap.emplace(x_minus_one(ctx.field()), 1);
    CuspidalDatum d = datum_validate(GroupType(GroupKind::Symplectic, ctx), 1, amap);
    CHECK_THROWS_AS(datum_twist(d, Involution::NegateVariable), Error);
}

TEST_CASE("twist of a symmetric unitary map is the same multiset") {
    auto ctx = ctx9();
    auto deg1 = enumerate_self_dual_irreducible(ctx, 1);
    // X+1 and X-1 swap under negation; equal entries are fixed as a map
    PolyMap amap;
    amap.emplace(deg1[0].poly(), 1);
    amap.emplace(deg1[1].poly(), 1);
    CuspidalDatum d = datum_validate(GroupType(GroupKind::Unitary, ctx), 2, amap);
    CHECK(datum_twist(d, Involution::NegateVariable) == d);
}

TEST_CASE("datum_dimension") {
    auto ctx = ctx3();
    PolyMap amap;
    amap.emplace(x_minus_one(ctx.field()), 1);
    CHECK(datum_dimension(datum_validate(GroupType(GroupKind::Symplectic, ctx), 1, amap)) == 1);

    auto quad = enumerate_self_dual_irreducible(ctx, 2);
    REQUIRE(!quad.empty());
    PolyMap mixed;
    mixed.emplace(x_minus_one(ctx.field()), 1);
    mixed.emplace(quad[0].poly(), 1);
    CHECK(datum_dimension(datum_validate(GroupType(GroupKind::Symplectic, ctx), 3, mixed)) == 3);
}

TEST_CASE("a-from-b round trip for every kind, b <= 4") {
    auto ctx1 = ctx3();
    auto ctx2 = ctx9();
    for (long long b = 0; b <= 4; ++b) {
        // generic: a = b(b+1)/2
        if (b >= 1) {
            auto deg1 = enumerate_self_dual_irreducible(ctx2, 1);
            PolyMap amap;
            amap.emplace(deg1[0].poly(), b * (b + 1) / 2);
            CuspidalDatum d =
                datum_validate(GroupType(GroupKind::Unitary, ctx2), b * (b + 1) / 2, amap);
            CHECK(d.b(deg1[0].poly()) == b);
        }
        // symplectic plus: a = 2(b^2+b)+1
        PolyMap sp;
        sp.emplace(x_minus_one(ctx1.field()), 2 * b * (b + 1) + 1);
        CuspidalDatum dsp =
            datum_validate(GroupType(GroupKind::Symplectic, ctx1), 2 * b * (b + 1) + 1, sp);
        CHECK(dsp.b(x_minus_one(ctx1.field())) == b);
        if (b >= 1) {
            // odd orthogonal: a = 2(b^2+b); even orthogonal and symplectic minus: a = 2b^2
            PolyMap od;
            od.emplace(x_plus_one(ctx1.field()), 2 * b * (b + 1));
            CHECK(datum_validate(GroupType(GroupKind::OddSpecialOrthogonal, ctx1), 2 * b * (b + 1),
                                 od)
                      .b(x_plus_one(ctx1.field())) == b);
            PolyMap ev;
            ev.emplace(x_plus_one(ctx1.field()), 2 * b * b);
            CHECK(datum_validate(GroupType(GroupKind::EvenSpecialOrthogonal, ctx1), 2 * b * b, ev)
                      .b(x_plus_one(ctx1.field())) == b);
        }
    }
}
