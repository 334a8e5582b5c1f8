// Acceptance suite: each criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "ijord/corpus.hpp"
#include "ijord/oracles.hpp"
#include "ijord/params.hpp"
#include "ijord/verify.hpp"

using namespace ijord;

namespace {

struct Criterion {
    int id;
    std::string summary;
    double limit_seconds; // 0 = no stated limit
    std::function<void(std::ostream&)> run;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

// ---------------------------------------------------------------------------

void criterion_golden(std::ostream& os) {
    long long cases = 0;
    // unramified type: r_a in {3f, f}, r_b = f; real parts {1, 1/2} or {1/2, 0}
    for (long long f : {1LL, 2LL}) {
        DualityContext ctx(FiniteField(3, static_cast<int>(2 * f)), 2);
        auto deg1 = enumerate_self_dual_irreducible(ctx, 1);
        CuspidalDatum empty = datum_validate(GroupType(GroupKind::Unitary, ctx), 0, {});
        for (const auto& q0 : deg1) {
            PolyMap amap;
            amap.emplace(q0.poly(), 1);
            CuspidalDatum one = datum_validate(GroupType(GroupKind::Unitary, ctx), 1, amap);
            for (const auto& qw : deg1) {
                Rational ra = hecke_parameter(qw, one, Involution::Identity, 2 * f);
                Rational rb = hecke_parameter(qw, empty, Involution::Identity, 2 * f);
                require(rb == Rational(f), "unramified r_b != f");
                require(ra == ((qw == q0) ? Rational(3 * f) : Rational(f)),
                        "unramified r_a not in {3f, f}");
                auto [s1, s2] = reducibility_real_parts(ra, rb, 2 * f);
                if (qw == q0)
                    require(s1 == Rational(1) && s2 == Rational(1, 2),
                            "unramified real parts != {1, 1/2}");
                else
                    require(s1 == Rational(1, 2) && s2 == Rational(0),
                            "unramified real parts != {1/2, 0}");
                ++cases;
            }
        }
    }
    // ramified type: r_a in {f, 0}, r_b = f; real parts {1, 0} or {1/2, 1/2}
    for (long long f : {1LL, 2LL}) {
        DualityContext ctx(FiniteField(3, static_cast<int>(f)), 1);
        const FiniteField& F = ctx.field();
        PolyMap sp_map;
        sp_map.emplace(x_minus_one(F), 1);
        CuspidalDatum sp = datum_validate(GroupType(GroupKind::Symplectic, ctx), 1, sp_map);
        CuspidalDatum so = datum_validate(GroupType(GroupKind::OddSpecialOrthogonal, ctx), 0, {});
        for (bool plus : {true, false}) {
            SelfDualPoly qw = SelfDualPoly::make(plus ? x_minus_one(F) : x_plus_one(F), ctx);
            Rational ra = hecke_parameter(qw, sp, Involution::Identity, f);
            Rational rb = hecke_parameter(qw, so, Involution::Identity, f);
            require(rb == Rational(f), "ramified r_b != f");
            require(ra == (plus ? Rational(f) : Rational(0)), "ramified r_a not in {f, 0}");
            auto [s1, s2] = reducibility_real_parts(ra, rb, f);
            if (plus)
                require(s1 == Rational(1) && s2 == Rational(0), "ramified real parts != {1, 0}");
            else
                require(s1 == Rational(1, 2) && s2 == Rational(1, 2),
                        "ramified real parts != {1/2, 1/2}");
            ++cases;
        }
    }
    os << cases << " configurations, exact equality";
}

const std::vector<SimpleCuspidalDescriptor>& corpus() {
    static std::vector<SimpleCuspidalDescriptor> c = generate_corpus(CorpusOptions{});
    return c;
}

const std::vector<IJordReport>& corpus_reports() {
    static std::vector<IJordReport> r = ijord_batch(corpus());
    return r;
}

void criterion_identity(std::ostream& os) {
    const auto& descs = corpus();
    require(descs.size() >= 500, "corpus smaller than 500 descriptors");
    const auto& reports = corpus_reports();
    long long failures = 0;
    for (std::size_t i = 0; i < descs.size(); ++i) {
        const auto& rep = reports[i];
        long long expected =
            (*descs[i].endo.dual_type == SelfDualType::TrivialClass) ? 2 * descs[i].N + 1
                                                                     : 2 * descs[i].N;
        if (!rep.identity_ok || rep.total != expected || rep.expected != expected) ++failures;
    }
    require(failures == 0, std::to_string(failures) + " identity failures");
    os << descs.size() << " descriptors, 0 failures";
}

void criterion_contribution(std::ostream& os) {
    const auto& descs = corpus();
    const auto& reports = corpus_reports();
    long long rows = 0;
    for (std::size_t i = 0; i < descs.size(); ++i) {
        long long f = descs[i].endo.f;
        for (const auto& row : reports[i].rows) {
            long long sum = 0;
            for (long long b : row.blocks_plus) sum += b;
            for (long long b : row.blocks_minus) sum += b;
            require(inertial_contribution(row.r0, row.r1, row.m * f) == sum,
                    "contribution formula disagrees with the block ladders");
            ++rows;
        }
    }
    os << rows << " rows, 0 failures";
}

void criterion_poly_oracle(std::ostream& os) {
    std::vector<DualityContext> ctxs;
    for (long long q : {3LL, 5LL, 7LL}) ctxs.emplace_back(FiniteField(q, 1), 1);
    ctxs.emplace_back(FiniteField(3, 2), 1);
    ctxs.emplace_back(FiniteField(3, 2), 2);
    long long sets = 0, polys = 0;
    for (const auto& ctx : ctxs)
        for (int m = 1; m <= 3; ++m) {
            auto listed = enumerate_self_dual_irreducible(ctx, m);
            auto by_roots = oracles::self_dual_irreducible_by_roots(ctx, m);
            require(listed.size() == by_roots.size(), "oracle count mismatch");
            for (std::size_t i = 0; i < listed.size(); ++i) {
                require(listed[i].poly() == by_roots[i], "oracle set mismatch");
                // dual fixes the set elementwise; negation permutes it
                require(poly_dual(listed[i].poly(), ctx) == listed[i].poly(), "dual not fixed");
                SelfDualPoly neg = apply_involution(Involution::NegateVariable, listed[i]);
                require(apply_involution(Involution::NegateVariable, neg) == listed[i],
                        "negation not involutive");
                bool found = false;
                for (const auto& other : listed)
                    if (other.poly() == neg.poly()) found = true;
                require(found, "negation left the self-dual set");
                ++polys;
            }
            ++sets;
        }
    os << sets << " (q, m) sets, " << polys << " polynomials, exact equality";
}

void criterion_signature_oracle(std::ostream& os) {
    std::vector<FiniteField> fields;
    for (long long q : {3LL, 5LL, 7LL}) fields.emplace_back(q, 1);
    fields.emplace_back(3, 2);
    long long checked = 0;
    for (const auto& F : fields) {
        for (FiniteField::Elt d = 1; d < F.q(); ++d) {
            require(oracles::permutation_signature(F, {{d}}) == signature_char(d, F),
                    "1x1 signature mismatch");
            ++checked;
        }
        long long q = F.q();
        for (long long n = 0; n < q * q * q * q; ++n) {
            long long t = n;
            FiniteField::Elt a = static_cast<FiniteField::Elt>(t % q);
            t /= q;
            FiniteField::Elt b = static_cast<FiniteField::Elt>(t % q);
            t /= q;
            FiniteField::Elt c = static_cast<FiniteField::Elt>(t % q);
            t /= q;
            FiniteField::Elt d = static_cast<FiniteField::Elt>(t % q);
            FiniteField::Elt det = F.sub(F.mul(a, d), F.mul(b, c));
            if (det == F.zero()) continue;
            require(oracles::permutation_signature(F, {{a, b}, {c, d}}) == signature_char(det, F),
                    "2x2 signature mismatch");
            ++checked;
        }
    }
    os << checked << " invertible matrices, 0 failures";
}

void criterion_jump_oracle(std::ostream& os) {
    long long checked = 0;
    for (long long e = 1; e <= 12; ++e)
        for (long long sw = 1; sw <= e; ++sw) {
            if (e % sw) continue;
            for (long long sy = 1; sy <= e; ++sy) {
                if (e % sy) continue;
                for (long long dw = 1; dw <= 3; ++dw)
                    for (long long dy = 1; dy <= 3; ++dy) {
                        LatticeSeqSpec lw{e, 0, sw, dw}, ly{e, 0, sy, dy};
                        if (!oracles::modelable(lw) || !oracles::modelable(ly)) continue;
                        for (long long aw = 0; aw < sw; ++aw)
                            for (long long ay = 0; ay < sy; ++ay) {
                                lw.a = aw;
                                ly.a = ay;
                                JumpResult jr = hom_lattice_jumps(ly, lw);
                                auto model = oracles::hom_jumps_by_filtration(ly, lw);
                                require(model.equal_quotients, "unequal model quotients");
                                require(model.quotient_dim == jr.c, "quotient dimension mismatch");
                                std::set<long long> expect;
                                for (long long t = jr.coset_rep; t < e; t += jr.coset_mod)
                                    expect.insert(t);
                                require(expect == std::set<long long>(model.jumps.begin(),
                                                                      model.jumps.end()),
                                        "jump coset mismatch");
                                ++checked;
                            }
                    }
            }
        }
    os << checked << " parameter combinations, 0 failures";
}

void criterion_ramification(std::ostream& os) {
    EndoRegistry regy = EndoRegistry::synthetic(2024, 60);
    require(regy.size() >= 50, "registry smaller than 50 classes");
    auto sd = regy.self_dual_class_labels();
    std::vector<EndoParameter> eps;
    for (std::size_t i = 0; i < sd.size(); ++i) {
        EndoParameter ep;
        ep.terms[sd[i]] = 1 + static_cast<long long>(i % 3);
        if (endoparam_degree(regy, ep) % 2 != 0) ep.terms[sd[i]] *= 2;
        eps.push_back(ep);
        for (std::size_t j = i + 1; j < sd.size(); j += 7) {
            EndoParameter two = ep;
            two.terms[sd[j]] += 2;
            if (endoparam_degree(regy, two) % 2 == 0) eps.push_back(two);
        }
    }
    std::set<std::string> images;
    for (const auto& ep : eps) {
        long long deg = endoparam_degree(regy, ep);
        EndoParameter up = iota_2n(regy, ep);
        require(endoparam_degree(regy, up) == deg + 1, "iota degree off");
        std::ostringstream key;
        for (const auto& [l, m] : up.terms) key << l << ":" << m << ";";
        require(images.insert(key.str()).second, "iota not injective");

        WildParameter via_sp = ramification_sp(regy, ep);
        WildParameter steps = ramification_gl(regy, endoparam_square(regy, ep));
        steps.terms[regy.trivial_orbit_label()] += 1;
        require(via_sp.terms == steps.terms, "sp != increment o gl o square");
        require(wild_dim(regy, via_sp) == deg + 1, "sp dimension off");
        require(wild_discrete_self_dual(regy, via_sp), "sp image not discrete self-dual");
    }
    os << regy.size() << " classes, " << eps.size() << " endo-parameters, 0 failures";
}

void criterion_shapes(std::ostream& os) {
    EndoRegistry regy = EndoRegistry::synthetic(2024, 60);

    // N = 1 over the quadratic-character inventory: exactly the
    // determinant-one triple of nontrivial characters
    std::vector<IrrepDescriptor> chars;
    for (const auto* s : regy.irreps_for_orbit(regy.trivial_orbit_label()))
        if (s->dim == 1) chars.push_back(*s);
    auto n1 = enumerate_cuspidal_shapes(1, chars);
    require(n1.size() == 1 && n1[0].blocks.size() == 3, "N=1 enumeration wrong");
    QuadChar det = QuadChar::One;
    for (const auto& blk : n1[0].blocks) {
        require(blk.m == 1 && blk.sigma.det != QuadChar::One, "N=1 triple wrong");
        det = quad_mul(det, blk.sigma.det);
    }
    require(det == QuadChar::One, "N=1 determinant not one");

    // four-squares shapes over every wild parameter of dim <= 15 built from
    // orbits of dim <= 4
    std::vector<const WildOrbit*> small;
    for (const auto* o : regy.self_dual_orbits())
        if (o->dim <= 4 && o->label != regy.trivial_orbit_label()) small.push_back(o);
    std::sort(small.begin(), small.end(),
              [](const WildOrbit* a, const WildOrbit* b) { return a->label < b->label; });
    small.resize(std::min<std::size_t>(small.size(), 4));

    std::vector<WildParameter> wps;
    std::function<void(std::size_t, WildParameter, long long)> build =
        [&](std::size_t i, WildParameter wp, long long dim) {
            if (i == small.size()) {
                for (long long m0 = 1; dim + m0 <= 15; m0 += 2) {
                    WildParameter full = wp;
                    full.terms[regy.trivial_orbit_label()] = m0;
                    wps.push_back(full);
                }
                return;
            }
            build(i + 1, wp, dim);
            for (long long m = 1; dim + m * small[i]->dim <= 14; ++m) {
                WildParameter next = wp;
                next.terms[small[i]->label] = m;
                build(i + 1, next, dim + m * small[i]->dim);
            }
        };
    build(0, {}, 0);

    long long equal_cases = 0, regular_cases = 0;
    for (const auto& wp : wps) {
        long long dim = wild_dim(regy, wp);
        LParamShape shape = four_squares_shape(regy, wp);
        require(validate_discrete(shape, (dim - 1) / 2).ok, "four-squares shape not discrete");
        require(shape_wild_restriction(regy, shape).terms == wp.terms,
                "four-squares restriction mismatch");
        auto counts = packet_counts(shape);
        require(!counts.cuspidal_count || *counts.cuspidal_count <= counts.packet_size,
                "cuspidal count exceeds packet size");
        if (counts.cuspidal_count && *counts.cuspidal_count == counts.packet_size) ++equal_cases;
        if (is_regular(shape)) ++regular_cases;
        if (counts.cuspidal_count)
            require((*counts.cuspidal_count == counts.packet_size) == is_regular(shape),
                    "packet equality not the regular case");
    }
    require(equal_cases == regular_cases, "equality/regular bookkeeping off");
    os << wps.size() << " wild parameters, N=1 triple exact, 0 failures";
}

void criterion_composition(std::ostream& os) {
    auto comps = generate_compositions(corpus(), 120, 2024);
    require(comps.size() >= 100, "fewer than 100 compositions");
    for (const auto& parts : comps) {
        IJordGeneralReport rep = ijord_general_report(parts);
        long long two_n = 0;
        for (const auto& part : parts) two_n += 2 * part.desc.N;
        require(rep.identity_ok && rep.total == two_n + 1, "composition identity failed");
    }
    os << comps.size() << " compositions, 0 failures";
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "worked-example golden set (both ramification types)", 1.0, criterion_golden},
        {2, "counting identity over the descriptor corpus", 60.0, criterion_identity},
        {3, "contribution formula equals the block ladders", 0.0, criterion_contribution},
        {4, "self-dual polynomial enumeration vs root-orbit oracle", 0.0, criterion_poly_oracle},
        {5, "signature character vs cycle decomposition", 30.0, criterion_signature_oracle},
        {6, "hom-lattice jumps vs filtration model", 0.0, criterion_jump_oracle},
        {7, "ramification algebra over a synthetic registry", 0.0, criterion_ramification},
        {8, "parameter shapes: N=1 triples, four squares, packets", 0.0, criterion_shapes},
        {9, "multi-part composition identity", 0.0, criterion_composition},
    };

    long long failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::ostringstream detail;
        bool ok = true;
        std::string why;
        try {
            c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
            ok = false;
            why = "exceeded the " + std::to_string(c.limit_seconds) + "s budget";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.summary << " ["
             << (ok ? detail.str() : why) << "] (" << secs << "s)";
        std::cout << line.str() << "\n";
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 9 acceptance criteria passed\n";
    return 0;
}
