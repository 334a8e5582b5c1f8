#include <doctest.h>

#include <set>

#include "ijord/params.hpp"

using namespace ijord;

namespace {

EndoRegistry reg() { return EndoRegistry::synthetic(11, 40); }

IrrepDescriptor quad_char(QuadChar c, const EndoRegistry& r) {
    for (const auto* s : r.irreps_for_orbit(r.trivial_orbit_label()))
        if (s->dim == 1 && s->det == c) return *s;
    throw std::runtime_error("missing quadratic character");
}

} // namespace

TEST_CASE("klein four-group of quadratic characters") {
    CHECK(quad_mul(QuadChar::Wnr, QuadChar::Wnr) == QuadChar::One);
    CHECK(quad_mul(QuadChar::Wnr, QuadChar::Wram1) == QuadChar::Wram2);
    CHECK(quad_mul(QuadChar::Wram1, QuadChar::Wram2) == QuadChar::Wnr);
    QuadChar all = quad_mul(quad_mul(QuadChar::Wnr, QuadChar::Wram1), QuadChar::Wram2);
    CHECK(all == QuadChar::One);
}

TEST_CASE("endo-parameter degree arithmetic") {
    EndoRegistry r = reg();
    auto sd = r.self_dual_class_labels();
    REQUIRE(sd.size() >= 3);

    std::string deg2;
    for (const auto& label : sd)
        if (r.cls(label).degree == 2) {
            deg2 = label;
            break;
        }
    REQUIRE(!deg2.empty());

    EndoParameter single = endoparam_make(r, {{deg2, 1}});
    CHECK(endoparam_degree(r, single) == 2);
    CHECK(endoparam_degree(r, EndoParameter{}) == 0);
    EndoParameter mixed = endoparam_make(r, {{deg2, 2}, {r.trivial_class_label(), 1}});
    CHECK(endoparam_degree(r, mixed) == 5);

    CHECK_THROWS_WITH_AS(endoparam_make(r, {{"nonsense", 1}}), doctest::Contains("UnknownLabel"),
                         Error);
}

TEST_CASE("squaring and iota") {
    EndoRegistry r = reg();
    EndoParameter triv = endoparam_make(r, {{r.trivial_class_label(), 3}});
    CHECK(endoparam_square(r, triv).terms == triv.terms);

    for (const auto& label : r.self_dual_class_labels()) {
        EndoParameter ep = endoparam_make(r, {{label, 2}});
        CHECK(endoparam_degree(r, endoparam_square(r, ep)) == endoparam_degree(r, ep));
        CHECK(endoparam_unsquare(r, endoparam_square(r, ep)).terms == ep.terms);
    }

    EndoParameter empty;
    EndoParameter up = iota_2n(r, empty);
    CHECK(endoparam_degree(r, up) == 1);
    CHECK(up.terms.at(r.trivial_class_label()) == 1);

    std::string deg2;
    for (const auto& label : r.self_dual_class_labels())
        if (r.cls(label).degree == 2) deg2 = label;
    EndoParameter ep = endoparam_make(r, {{deg2, 1}});
    EndoParameter up2 = iota_2n(r, ep);
    CHECK(endoparam_degree(r, up2) == 3);
    CHECK(up2.terms.count(r.trivial_class_label()) == 1);

    // errors
    std::string non_sd;
    for (const auto& label : r.class_labels())
        if (!r.cls(label).self_dual()) non_sd = label;
    REQUIRE(!non_sd.empty());
    CHECK_THROWS_WITH_AS(iota_2n(r, endoparam_make(r, {{non_sd, 2}})),
                         doctest::Contains("NotSelfDual"), Error);
    CHECK_THROWS_WITH_AS(iota_2n(r, endoparam_make(r, {{r.trivial_class_label(), 1}})),
                         doctest::Contains("OddDegree"), Error);
}

TEST_CASE("ramification bijections") {
    EndoRegistry r = reg();
    EndoParameter triv = endoparam_make(r, {{r.trivial_class_label(), 4}});
    WildParameter wt = ramification_gl(r, triv);
    CHECK(wt.terms.size() == 1);
    CHECK(wt.terms.at(r.trivial_orbit_label()) == 4);

    for (const auto& label : r.self_dual_class_labels()) {
        EndoParameter ep = endoparam_make(r, {{label, 3}});
        WildParameter wp = ramification_gl(r, ep);
        CHECK(wild_dim(r, wp) == endoparam_degree(r, ep));
        CHECK(ramification_gl_inverse(r, wp).terms == ep.terms);
    }

    // sp: squared labels, one extra trivial orbit, odd dimension
    std::string deg2;
    for (const auto& label : r.self_dual_class_labels())
        if (r.cls(label).degree == 2) deg2 = label;
    EndoParameter ep = endoparam_make(r, {{deg2, 2}});
    WildParameter wp = ramification_sp(r, ep);
    CHECK(wild_dim(r, wp) == 5);
    CHECK(wild_discrete_self_dual(r, wp));
    CHECK(wp.terms.at(r.trivial_orbit_label()) == 1);
    CHECK(wp.terms.at(r.orbit_of_endo(r.square_of(deg2)).label) == 2);
}

TEST_CASE("ramification_sp is onto the small discrete self-dual parameters") {
    EndoRegistry r = reg();
    // every discrete self-dual wild parameter of odd dim <= 9 over a couple
    // of orbits arises from a self-dual endo-parameter
    std::vector<const WildOrbit*> orbits = r.self_dual_orbits();
    std::vector<const WildOrbit*> small;
    for (const auto* o : orbits)
        if (o->label != r.trivial_orbit_label() && o->dim <= 4) small.push_back(o);
    std::sort(small.begin(), small.end(),
              [](const WildOrbit* a, const WildOrbit* b) { return a->label < b->label; });
    small.resize(2);
    for (long long m0 = 1; m0 <= 9; m0 += 2)
        for (long long m1 = 0; m0 + m1 * small[0]->dim <= 9; ++m1)
            for (long long m2 = 0; m0 + m1 * small[0]->dim + m2 * small[1]->dim <= 9; ++m2) {
                WildParameter wp;
                wp.terms[r.trivial_orbit_label()] = m0;
                if (m1) wp.terms[small[0]->label] = m1;
                if (m2) wp.terms[small[1]->label] = m2;
                // peel off the added trivial copy, pull back, unsquare
                WildParameter reduced = wp;
                if (--reduced.terms[r.trivial_orbit_label()] == 0)
                    reduced.terms.erase(r.trivial_orbit_label());
                EndoParameter ep =
                    endoparam_unsquare(r, ramification_gl_inverse(r, reduced));
                CHECK(endoparam_self_dual(r, ep));
                CHECK(ramification_sp(r, ep).terms == wp.terms);
            }
}

TEST_CASE("validate_discrete") {
    EndoRegistry r = reg();
    IrrepDescriptor one = quad_char(QuadChar::One, r);
    IrrepDescriptor wnr = quad_char(QuadChar::Wnr, r);
    IrrepDescriptor wr1 = quad_char(QuadChar::Wram1, r);
    IrrepDescriptor wr2 = quad_char(QuadChar::Wram2, r);

    // the quadratic-character triple with product one
    LParamShape sl2{{{wnr, 1}, {wr1, 1}, {wr2, 1}}};
    CHECK(validate_discrete(sl2, 1).ok);

    // {1, w_nr, w_nr (x) St_3}: dims 1+1+3 = 5, determinant w_nr * w_nr^3 = 1
    LParamShape sp4{{{one, 1}, {wnr, 1}, {wnr, 3}}};
    CHECK(validate_discrete(sp4, 2).ok);
    CHECK(is_cuspidal(sp4));

    LParamShape wrong_det{{{one, 1}, {wnr, 1}, {wr1, 1}}};
    auto rep = validate_discrete(wrong_det, 1);
    CHECK_FALSE(rep.ok);

    LParamShape repeat{{{one, 1}, {one, 1}}};
    CHECK_FALSE(validate_discrete(repeat, 1).ok);

    LParamShape parity{{{one, 2}}};
    CHECK_FALSE(validate_discrete(parity, 1).ok); // even m on an orthogonal sigma
}

TEST_CASE("cuspidality is the no-holes condition") {
    EndoRegistry r = reg();
    IrrepDescriptor one = quad_char(QuadChar::One, r);
    IrrepDescriptor wnr = quad_char(QuadChar::Wnr, r);
    LParamShape holes{{{one, 1}, {wnr, 3}}};
    CHECK_FALSE(is_cuspidal(holes));
    LParamShape ladder{{{one, 1}, {wnr, 1}, {wnr, 3}}};
    CHECK(is_cuspidal(ladder));
    LParamShape all_one{{{one, 1}, {wnr, 1}}};
    CHECK(is_cuspidal(all_one));
}

TEST_CASE("packet counts") {
    EndoRegistry r = reg();
    IrrepDescriptor one = quad_char(QuadChar::One, r);
    IrrepDescriptor wnr = quad_char(QuadChar::Wnr, r);
    IrrepDescriptor wr1 = quad_char(QuadChar::Wram1, r);

    LParamShape three_orth{{{one, 1}, {wnr, 1}, {wr1, 1}}};
    auto c1 = packet_counts(three_orth);
    CHECK(c1.packet_size == 4);
    CHECK(*c1.cuspidal_count == 4);

    // symplectic block: counted in the packet, not in the cuspidal fibre
    IrrepDescriptor sympl;
    for (const auto& s : r.irreps())
        if (s.parity == Parity::Symplectic && s.dim == 2) sympl = s;
    LParamShape mixed{{{one, 1}, {wnr, 1}, {sympl, 2}}};
    auto c2 = packet_counts(mixed);
    CHECK(c2.packet_size == 4);
    CHECK(*c2.cuspidal_count == 2);

    LParamShape single{{{one, 1}}};
    auto c3 = packet_counts(single);
    CHECK(c3.packet_size == 1);
    CHECK(*c3.cuspidal_count == 1);

    // repeated sigma in a ladder: equality fails exactly off the regular case
    LParamShape ladder{{{one, 1}, {wnr, 1}, {wnr, 3}}};
    auto c4 = packet_counts(ladder);
    CHECK(c4.packet_size == 4);
    CHECK(*c4.cuspidal_count == 2);
    CHECK_FALSE(is_regular(ladder));
}

TEST_CASE("shape enumeration") {
    EndoRegistry r = reg();
    std::vector<IrrepDescriptor> chars;
    for (const auto* s : r.irreps_for_orbit(r.trivial_orbit_label()))
        if (s->dim == 1) chars.push_back(*s);
    REQUIRE(chars.size() == 4);

    auto n0 = enumerate_cuspidal_shapes(0, chars);
    REQUIRE(n0.size() == 1);
    CHECK(n0[0].blocks.size() == 1);
    CHECK(n0[0].blocks[0].sigma.det == QuadChar::One);

    auto n1 = enumerate_cuspidal_shapes(1, chars);
    REQUIRE(n1.size() == 1);
    CHECK(n1[0].blocks.size() == 3);
    for (const auto& blk : n1[0].blocks) {
        CHECK(blk.m == 1);
        CHECK(blk.sigma.det != QuadChar::One);
    }

    CHECK_THROWS_WITH_AS(enumerate_cuspidal_shapes(6, r.irreps(), 50),
                         doctest::Contains("TooLarge"), Error);

    // N = 2 over the characters: exactly the three shapes 1 + s + s St_3
    auto n2 = enumerate_cuspidal_shapes(2, chars);
    REQUIRE(n2.size() == 3);
    for (const auto& shape : n2) {
        REQUIRE(shape.blocks.size() == 3);
        CHECK(is_cuspidal(shape));
        std::set<long long> ms;
        QuadChar ladder_char = QuadChar::One;
        for (const auto& blk : shape.blocks) {
            ms.insert(blk.m);
            if (blk.m == 3) ladder_char = blk.sigma.det;
        }
        CHECK(ms == std::set<long long>{1, 3});
        CHECK(ladder_char != QuadChar::One);
        CHECK_FALSE(is_regular(shape));
    }
}

TEST_CASE("four squares shapes") {
    EndoRegistry r = reg();

    // m0 = 1: a single quadratic-character block
    WildParameter w1;
    w1.terms[r.trivial_orbit_label()] = 1;
    LParamShape s1 = four_squares_shape(r, w1);
    REQUIRE(s1.blocks.size() == 1);
    CHECK(s1.blocks[0].m == 1);
    CHECK(s1.blocks[0].sigma.det == QuadChar::One);

    // m0 = 3: 3 = 0+1+1+1 -> three characters with one block each
    WildParameter w3;
    w3.terms[r.trivial_orbit_label()] = 3;
    LParamShape s3 = four_squares_shape(r, w3);
    CHECK(s3.blocks.size() == 3);
    for (const auto& blk : s3.blocks) CHECK(blk.m == 1);
    CHECK(validate_discrete(s3, 1).ok);

    // nontrivial orbit with multiplicity 1: 6 = 4+0+1+1 -> one orthogonal block
    std::string orbit2;
    for (const auto* o : r.self_dual_orbits())
        if (o->dim == 2) orbit2 = o->label;
    REQUIRE(!orbit2.empty());
    WildParameter wg;
    wg.terms[r.trivial_orbit_label()] = 1;
    wg.terms[orbit2] = 1;
    LParamShape sg = four_squares_shape(r, wg);
    CHECK(validate_discrete(sg, 1).ok);
    CHECK(shape_wild_restriction(r, sg).terms == wg.terms);
    long long orbit_blocks = 0;
    for (const auto& blk : sg.blocks)
        if (blk.sigma.orbit_label == orbit2) {
            ++orbit_blocks;
            CHECK(blk.m == 1);
            CHECK(blk.sigma.parity == Parity::Orthogonal);
        }
    CHECK(orbit_blocks == 1);

    // multiplicity 2 is pinned to (0,0,3,1): symplectic ladder St_2 and a St_2-free pair
    WildParameter w2;
    w2.terms[r.trivial_orbit_label()] = 1;
    w2.terms[orbit2] = 2;
    LParamShape sh2 = four_squares_shape(r, w2);
    CHECK(validate_discrete(sh2, (wild_dim(r, w2) - 1) / 2).ok);
    CHECK(shape_wild_restriction(r, sh2).terms == w2.terms);
    bool has_st2 = false;
    for (const auto& blk : sh2.blocks)
        if (blk.sigma.orbit_label == orbit2 && blk.m == 2) has_st2 = true;
    CHECK(has_st2);

    WildParameter even;
    even.terms[r.trivial_orbit_label()] = 2;
    CHECK_THROWS_WITH_AS(four_squares_shape(r, even), doctest::Contains("OddDegree"), Error);
}

TEST_CASE("parity decision") {
    CHECK_FALSE(parity_decision({true, 1, true, true}).same_parity);
    auto sympl = parity_decision({false, 1, true, true});
    CHECK(sympl.same_parity);
    CHECK(*sympl.parity == Parity::Symplectic);
    auto orth = parity_decision({false, 1, true, false});
    CHECK(orth.same_parity);
    CHECK(*orth.parity == Parity::Orthogonal);
    CHECK_FALSE(parity_decision({false, 2, true, true}).same_parity);
    CHECK_FALSE(parity_decision({false, 1, false, true}).same_parity);
}

TEST_CASE("existence table") {
    CHECK_FALSE(existence_table(SelfDualType::UnramifiedQuadratic, 2));
    CHECK(existence_table(SelfDualType::UnramifiedQuadratic, 3));
    CHECK(existence_table(SelfDualType::RamifiedQuadratic, 1));
    CHECK(existence_table(SelfDualType::RamifiedQuadratic, 4));
    CHECK_FALSE(existence_table(SelfDualType::RamifiedQuadratic, 3));
    CHECK(existence_table(SelfDualType::TrivialClass, 1)); // the quadratic characters
    CHECK(existence_table(SelfDualType::TrivialClass, 2));
    CHECK_FALSE(existence_table(SelfDualType::TrivialClass, 3));
}

TEST_CASE("registry validation catches broken pairings") {
    EndoRegistry r;
    r.add_orbit(WildOrbit{"w:1", 1, true, "1"});
    r.add_class(EndoClassInvariants{"1", 1, 1, 1, SelfDualType::TrivialClass}, "1", "w:1");
    // an endo-class whose orbit is missing
    r.add_class(EndoClassInvariants{"a", 2, 1, 2, SelfDualType::UnramifiedQuadratic}, "a",
                "w:absent");
    CHECK_THROWS_WITH_AS(r.validate(), doctest::Contains("UnpairedLabel"), Error);
}

TEST_CASE("four squares needs the registry quadruple") {
    // registry with a self-dual orbit but no irreps over it
    EndoRegistry r;
    r.add_orbit(WildOrbit{"w:1", 1, true, "1"});
    r.add_class(EndoClassInvariants{"1", 1, 1, 1, SelfDualType::TrivialClass}, "1", "w:1");
    r.add_orbit(WildOrbit{"w:a", 2, true, "a"});
    r.add_class(EndoClassInvariants{"a", 2, 1, 2, SelfDualType::UnramifiedQuadratic}, "a", "w:a");
    for (QuadChar c : {QuadChar::One, QuadChar::Wnr, QuadChar::Wram1, QuadChar::Wram2})
        r.add_irrep(IrrepDescriptor{std::string("char.") + quad_char_name(c), 1, Parity::Orthogonal,
                                    c, "w:1"});
    r.validate();
    WildParameter wp;
    wp.terms["w:1"] = 1;
    wp.terms["w:a"] = 1;
    CHECK_THROWS_WITH_AS(four_squares_shape(r, wp), doctest::Contains("RegistryMissing"), Error);
}
