#include "ijord/jordan.hpp"

#include "ijord/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

namespace ijord {

const char* self_dual_type_name(SelfDualType t) {
    switch (t) {
        case SelfDualType::TrivialClass: return "trivial";
        case SelfDualType::UnramifiedQuadratic: return "unramified";
        case SelfDualType::RamifiedQuadratic: return "ramified";
    }
    return "?";
}

void EndoClassInvariants::check() const {
    if (label.empty()) throw Error(Errc::InvalidArgument, "endo-class label must be non-empty");
    if (degree < 1 || e < 1 || f < 1)
        throw Error(Errc::InvalidArgument, "endo-class degree, e, f must be >= 1");
    if (degree != e * f)
        throw Error(Errc::InvalidArgument, "endo-class degree " + std::to_string(degree) +
                                               " != e*f = " + std::to_string(e * f));
    if (!dual_type) return;
    switch (*dual_type) {
        case SelfDualType::TrivialClass:
            if (degree != 1)
                throw Error(Errc::InvalidArgument, "the trivial endo-class has degree 1");
            break;
        case SelfDualType::UnramifiedQuadratic:
            if (degree % 2 != 0 || f % 2 != 0)
                throw Error(Errc::InvalidArgument,
                            "unramified-quadratic classes need even degree and even f");
            break;
        case SelfDualType::RamifiedQuadratic:
            if (degree % 2 != 0 || e % 2 != 0)
                throw Error(Errc::InvalidArgument,
                            "ramified-quadratic classes need even degree and even e");
            break;
    }
}

std::string EndoClassInvariants::squared_label() const {
    if (dual_type && *dual_type == SelfDualType::TrivialClass) return label;
    return label + "^2";
}

EndoClassInvariants EndoClassInvariants::squared() const {
    EndoClassInvariants out = *this;
    out.label = squared_label();
    return out;
}

long long SimpleCuspidalDescriptor::dim_e_v() const { return 2 * N / endo.degree; }

DualityContext SimpleCuspidalDescriptor::context() const {
    // factor q = p^a, then k_E = F_{q^f}
    long long p = 0;
    for (long long d = 3; d * d <= q; d += 2)
        if (q % d == 0) { p = d; break; }
    if (p == 0) p = q;
    int a = 0;
    long long t = q;
    while (t > 1) {
        if (t % p != 0) throw Error(Errc::InvalidArgument, "q must be an odd prime power");
        t /= p;
        ++a;
    }
    int index = (endo.dual_type && *endo.dual_type == SelfDualType::UnramifiedQuadratic) ? 2 : 1;
    return DualityContext(FiniteField(p, a * static_cast<int>(endo.f)), index);
}

Involution SimpleCuspidalDescriptor::involution(int t, int m) const {
    auto it = involutions.find({t, m});
    return it == involutions.end() ? Involution::Identity : it->second;
}

void SimpleCuspidalDescriptor::validate() const {
    if (q < 3 || q % 2 == 0) throw Error(Errc::InvalidArgument, "q must be an odd prime power >= 3");
    endo.check();
    if (!endo.self_dual())
        throw Error(Errc::NotSelfDual, "descriptor endo-class must be self-dual");
    if (N < 0) throw Error(Errc::InvalidArgument, "N must be non-negative");
    if ((2 * N) % endo.degree != 0)
        throw Error(Errc::DimensionMismatch, "deg(Theta) = " + std::to_string(endo.degree) +
                                                 " does not divide 2N = " + std::to_string(2 * N));
    if (data.size() != 2) throw Error(Errc::InvalidArgument, "exactly two cuspidal data required");

    DualityContext ctx = context();
    for (const auto& d : data)
        if (d.gtype().ctx() != ctx)
            throw Error(Errc::ContextMismatch,
                        "cuspidal datum context does not match (q^f, duality type)");

    GroupKind k0 = data[0].gtype().kind(), k1 = data[1].gtype().kind();
    auto is_orth = [](GroupKind k) {
        return k == GroupKind::OddSpecialOrthogonal || k == GroupKind::EvenSpecialOrthogonal;
    };
    switch (*endo.dual_type) {
        case SelfDualType::UnramifiedQuadratic:
            if (k0 != GroupKind::Unitary || k1 != GroupKind::Unitary)
                throw Error(Errc::InvalidArgument,
                            "unramified-quadratic descriptors have two unitary factors");
            break;
        case SelfDualType::RamifiedQuadratic:
            if (!((k0 == GroupKind::Symplectic && is_orth(k1)) ||
                  (k1 == GroupKind::Symplectic && is_orth(k0))))
                throw Error(Errc::InvalidArgument,
                            "ramified-quadratic descriptors split into one symplectic and one "
                            "special orthogonal factor");
            break;
        case SelfDualType::TrivialClass:
            // Depth zero: the maximal parahoric quotients of Sp_2N are products
            // of two finite symplectic groups.
            if (k0 != GroupKind::Symplectic || k1 != GroupKind::Symplectic)
                throw Error(Errc::InvalidArgument,
                            "depth-zero descriptors have two symplectic factors");
            break;
    }

    long long space = data[0].space_dim() + data[1].space_dim();
    if (space != dim_e_v())
        throw Error(Errc::DimensionMismatch,
                    "factor space dimensions sum to " + std::to_string(space) + ", expected " +
                        std::to_string(dim_e_v()));

    // Depth zero has no beta-extension comparison, so the two degree-1
    // twisting involutions must agree; a mismatch silently drops one X+-1
    // block from the count.
    if (*endo.dual_type == SelfDualType::TrivialClass && involution(0, 1) != involution(1, 1))
        throw Error(Errc::InvalidArgument,
                    "depth-zero descriptors need matching degree-1 involutions for t = 0, 1");

    for (const auto& [key, sig] : involutions) {
        (void)sig;
        if (key.first != 0 && key.first != 1)
            throw Error(Errc::InvalidArgument, "involution index t must be 0 or 1");
        if (key.second < 1) throw Error(Errc::InvalidArgument, "involution degree m must be >= 1");
    }
}

long long IJordMultiset::total_m_deg() const {
    long long total = 0;
    for (const auto& e : entries) total += e.m * e.deg_rho;
    return total;
}

std::vector<long long> jordan_blocks_from_real_part(const Rational& s) {
    if (s < Rational(0)) throw Error(Errc::InvalidArgument, "real part must be non-negative");
    if (!is_half_integral(s))
        throw Error(Errc::NonHalfInteger, "real part " + rat_to_string(s) + " is not a half-integer");
    std::vector<long long> blocks;
    if (s < Rational(1)) return blocks;
    long long top = as_integer(Rational(2) * s - 1);
    for (long long m = top; m >= 1; m -= 2) blocks.push_back(m);
    return blocks;
}

long long inertial_contribution(const Rational& r0, const Rational& r1, long long t_rho) {
    if (t_rho < 1) throw Error(Errc::InvalidArgument, "t(rho) must be >= 1");
    Rational num = r0 * r0 + r1 * r1;
    return floor_rat(num / Rational(2 * t_rho * t_rho));
}

namespace {

std::string breakdown_text(const IJordReport& rep) {
    std::ostringstream os;
    for (const auto& row : rep.rows) {
        os << "  Q=" << row.q_poly.to_string() << " m=" << row.m << " r0=" << rat_to_string(row.r0)
           << " r1=" << rat_to_string(row.r1) << " real parts {" << rat_to_string(row.s_plus)
           << ", " << rat_to_string(row.s_minus) << "} contribution=" << row.contribution << "\n";
    }
    os << "  total=" << rep.total << " expected=" << rep.expected;
    return os.str();
}

} // namespace

IJordReport ijord_simple_report(const SimpleCuspidalDescriptor& desc) {
    desc.validate();
    DualityContext ctx = desc.context();
    long long f = desc.endo.f;
    std::string label2 = desc.endo.squared_label();

    // Q-set: involution images of the characteristic-polynomial divisors of
    // both data, merged as a set.
    std::set<MonicPoly, MonicPolyLess> qset;
    for (int t = 0; t < 2; ++t)
        for (const auto& [p, a] : desc.data[static_cast<std::size_t>(t)].a_map()) {
            (void)a;
            qset.insert(apply_involution(desc.involution(t, p.degree()), p));
        }

    IJordReport rep;
    for (const MonicPoly& qp : qset) {
        int m = qp.degree();
        SelfDualPoly q = SelfDualPoly::make(qp, ctx);
        Rational r0 = hecke_parameter(q, desc.data[0], desc.involution(0, m), f, m);
        Rational r1 = hecke_parameter(q, desc.data[1], desc.involution(1, m), f, m);
        if (!is_integral(r0) || !is_integral(r1))
            throw Error(Errc::NonHalfInteger,
                        "non-integral Hecke parameter at " + qp.to_string() +
                            " (inconsistent descriptor)");
        long long t_rho = m * f;
        auto [s_plus, s_minus] = reducibility_real_parts(r0, r1, t_rho);
        auto blocks_plus = jordan_blocks_from_real_part(s_plus);
        auto blocks_minus = jordan_blocks_from_real_part(s_minus);
        long long block_sum = 0;
        for (long long b : blocks_plus) block_sum += b;
        for (long long b : blocks_minus) block_sum += b;
        long long contrib = inertial_contribution(r0, r1, t_rho);
        if (contrib != block_sum)
            throw Error(Errc::IdentityViolation,
                        "contribution formula disagrees with the block ladders at " + qp.to_string());
        long long deg_rho = m * desc.endo.degree;
        for (long long mb : blocks_plus)
            rep.multiset.entries.push_back({label2, qp, false, mb, deg_rho});
        for (long long mb : blocks_minus)
            rep.multiset.entries.push_back({label2, qp, false, mb, deg_rho});
        rep.rows.push_back({qp, m, r0, r1, s_plus, s_minus, blocks_plus, blocks_minus, contrib});
    }

    rep.total = rep.multiset.total_m_deg();
    rep.expected =
        (*desc.endo.dual_type == SelfDualType::TrivialClass) ? 2 * desc.N + 1 : 2 * desc.N;
    rep.identity_ok = rep.total == rep.expected;
    return rep;
}

IJordMultiset ijord_simple(const SimpleCuspidalDescriptor& desc) {
    IJordReport rep = ijord_simple_report(desc);
    if (!rep.identity_ok)
        throw Error(Errc::IdentityViolation, "counting identity failed:\n" + breakdown_text(rep));
    return rep.multiset;
}

IJordReport identity_check(const SimpleCuspidalDescriptor& desc, const IJordMultiset& ij) {
    IJordReport rep = ijord_simple_report(desc);
    long long given = ij.total_m_deg();
    if (given != rep.expected || !rep.identity_ok) {
        rep.total = given;
        rep.identity_ok = false;
        throw Error(Errc::IdentityViolation,
                    "sum m deg(rho) = " + std::to_string(given) + ", expected " +
                        std::to_string(rep.expected) + "\n" + breakdown_text(rep));
    }
    return rep;
}

namespace {

SimpleCuspidalDescriptor degenerate_depth_zero(long long q) {
    SimpleCuspidalDescriptor d;
    d.q = q;
    d.endo = EndoClassInvariants{"1", 1, 1, 1, SelfDualType::TrivialClass};
    d.N = 0;
    DualityContext ctx = d.context();
    PolyMap amap;
    amap.emplace(x_minus_one(ctx.field()), 1);
    CuspidalDatum sp0 = CuspidalDatum::validate(GroupType(GroupKind::Symplectic, ctx), 1, amap);
    d.data = {sp0, sp0};
    return d;
}

} // namespace

IJordGeneralReport ijord_general_report(const std::vector<GeneralPart>& parts) {
    if (parts.empty()) throw Error(Errc::InvalidArgument, "at least one part required");

    std::set<std::string> labels;
    int depth_zero_count = 0;
    long long q = parts.front().desc.q;
    long long ambient_2n = 0;
    for (const auto& part : parts) {
        part.desc.validate();
        if (part.desc.q != q)
            throw Error(Errc::ContextMismatch, "all parts must share the base field cardinality");
        if (!labels.insert(part.desc.endo.label).second)
            throw Error(Errc::DuplicateEndoClass,
                        "endo-class label '" + part.desc.endo.label + "' appears twice");
        if (*part.desc.endo.dual_type == SelfDualType::TrivialClass) ++depth_zero_count;
        ambient_2n += 2 * part.desc.N;
    }
    if (depth_zero_count > 1)
        throw Error(Errc::DuplicateEndoClass, "at most one depth-zero part is allowed");

    std::vector<GeneralPart> work(parts);
    if (depth_zero_count == 0) work.push_back({degenerate_depth_zero(q), false});

    IJordGeneralReport rep;
    for (const auto& part : work) {
        IJordReport r = ijord_simple_report(part.desc);
        if (!r.identity_ok)
            throw Error(Errc::IdentityViolation,
                        "part '" + part.desc.endo.label + "' fails its counting identity:\n" +
                            breakdown_text(r));
        for (IJordEntry e : r.multiset.entries) {
            if (part.chi) {
                e.poly = apply_involution(Involution::NegateVariable, e.poly);
                e.chi_twist = true;
            }
            rep.multiset.entries.push_back(std::move(e));
        }
        rep.part_reports.push_back(std::move(r));
    }
    rep.total = rep.multiset.total_m_deg();
    rep.expected = ambient_2n + 1;
    rep.identity_ok = rep.total == rep.expected;
    return rep;
}

IJordMultiset ijord_general(const std::vector<GeneralPart>& parts) {
    IJordGeneralReport rep = ijord_general_report(parts);
    if (!rep.identity_ok)
        throw Error(Errc::IdentityViolation, "general counting identity failed: total " +
                                                 std::to_string(rep.total) + " != " +
                                                 std::to_string(rep.expected));
    return rep.multiset;
}

void derive_involutions(
    SimpleCuspidalDescriptor& desc,
    const std::map<std::pair<int, int>, std::vector<std::array<long long, 3>>>& terms) {
    for (const auto& [key, term_list] : terms)
        desc.involutions[key] = epsilon_involution_hint(term_list);
}

std::vector<IJordReport> ijord_batch(const std::vector<SimpleCuspidalDescriptor>& descs,
                                     unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, 16);
    std::vector<IJordReport> out(descs.size());
    if (descs.empty()) return out;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(descs.size()));

    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < descs.size(); i += threads)
                    out[i] = ijord_simple_report(descs[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace ijord
