#include "ijord/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace ijord {

namespace {

struct EndoShape {
    const char* tag;
    long long e, f;
    SelfDualType dual;
};

// a-values admissible per key and group kind, for b <= max_b
std::vector<long long> allowed_a(GroupKind kind, int index, const MonicPoly& p, long long max_b) {
    std::vector<long long> out;
    bool xm = is_x_minus_one(p), xp = is_x_plus_one(p);
    if (index == 2 || (!xm && !xp)) {
        for (long long b = 1; b <= max_b; ++b) out.push_back(b * (b + 1) / 2);
        return out;
    }
    switch (kind) {
        case GroupKind::OddSpecialOrthogonal:
            for (long long b = 1; b <= max_b; ++b) out.push_back(2 * b * (b + 1));
            break;
        case GroupKind::Symplectic:
            if (xm) {
                for (long long b = 0; b <= max_b; ++b) out.push_back(2 * b * (b + 1) + 1);
            } else {
                for (long long b = 1; b <= max_b; ++b) out.push_back(2 * b * b);
            }
            break;
        case GroupKind::EvenSpecialOrthogonal:
            for (long long b = 1; b <= max_b; ++b) out.push_back(2 * b * b);
            break;
        case GroupKind::Unitary: break;
    }
    return out;
}

std::vector<CuspidalDatum> enumerate_data(const GroupType& gtype, long long dual_dim,
                                          const std::vector<MonicPoly>& inventory, long long max_b,
                                          int cap) {
    std::vector<CuspidalDatum> out;
    PolyMap current;
    bool symplectic = gtype.kind() == GroupKind::Symplectic;
    const FiniteField& field = gtype.ctx().field();

    std::function<void(std::size_t, long long)> dfs = [&](std::size_t i, long long used) {
        if (static_cast<int>(out.size()) >= cap) return;
        if (used > dual_dim) return;
        if (i == inventory.size()) {
            if (used != dual_dim) return;
            if (symplectic && !current.count(x_minus_one(field))) return;
            out.push_back(CuspidalDatum::validate(gtype, dual_dim, current));
            return;
        }
        const MonicPoly& p = inventory[i];
        bool mandatory = symplectic && is_x_minus_one(p);
        if (!mandatory) dfs(i + 1, used); // a_P = 0
        for (long long a : allowed_a(gtype.kind(), gtype.ctx().index(), p, max_b)) {
            if (used + a * p.degree() > dual_dim) continue;
            current.emplace(p, a);
            dfs(i + 1, used + a * p.degree());
            current.erase(p);
        }
    };
    dfs(0, 0);
    return out;
}

std::vector<MonicPoly> small_inventory(const DualityContext& ctx, int max_per_degree,
                                       long long max_dim) {
    std::vector<MonicPoly> inv;
    long long q = ctx.field().q();
    for (int m = 1; m <= 3 && m <= max_dim; ++m) {
        long long cost = 1;
        for (int i = 0; i < m; ++i) cost *= q;
        if (m > 1 && cost > 1000) break; // keep enumeration desk-scale
        auto polys = enumerate_self_dual_irreducible(ctx, m);
        int keep = (m == 1) ? (ctx.index() == 2 ? 4 : 2) : max_per_degree;
        for (int i = 0; i < static_cast<int>(polys.size()) && i < keep; ++i)
            inv.push_back(polys[static_cast<std::size_t>(i)].poly());
    }
    return inv;
}

} // namespace

std::vector<SimpleCuspidalDescriptor> generate_corpus(const CorpusOptions& opts) {
    std::vector<SimpleCuspidalDescriptor> corpus;

    const std::vector<EndoShape> shapes = {
        {"t", 1, 1, SelfDualType::TrivialClass},
        {"u", 1, 2, SelfDualType::UnramifiedQuadratic},
        {"u", 2, 2, SelfDualType::UnramifiedQuadratic},
        {"u", 1, 4, SelfDualType::UnramifiedQuadratic},
        {"r", 2, 1, SelfDualType::RamifiedQuadratic},
        {"r", 2, 2, SelfDualType::RamifiedQuadratic},
        {"r", 4, 1, SelfDualType::RamifiedQuadratic},
    };

    const std::vector<std::pair<Involution, Involution>> sig_choices =
        opts.vary_involutions
            ? std::vector<std::pair<Involution, Involution>>{
                  {Involution::Identity, Involution::Identity},
                  {Involution::Identity, Involution::NegateVariable},
                  {Involution::NegateVariable, Involution::Identity},
                  {Involution::NegateVariable, Involution::NegateVariable}}
            : std::vector<std::pair<Involution, Involution>>{
                  {Involution::Identity, Involution::Identity}};

    for (long long q : opts.qs) {
        for (const auto& shape : shapes) {
            long long degree = shape.e * shape.f;
            if (degree > opts.max_endo_degree) continue;
            EndoClassInvariants endo;
            endo.label = shape.dual == SelfDualType::TrivialClass
                             ? "1"
                             : std::string(shape.tag) + std::to_string(shape.e) + "." +
                                   std::to_string(shape.f);
            endo.degree = degree;
            endo.e = shape.e;
            endo.f = shape.f;
            endo.dual_type = shape.dual;

            for (long long n = 0; n <= opts.max_n; ++n) {
                if ((2 * n) % degree != 0) continue;
                SimpleCuspidalDescriptor proto;
                proto.q = q;
                proto.endo = endo;
                proto.N = n;
                DualityContext ctx = proto.context();
                long long dim_v = proto.dim_e_v();
                auto inventory = small_inventory(ctx, opts.max_polys_per_degree, dim_v + 1);

                struct Split {
                    GroupKind k0, k1;
                    long long dual0, dual1;
                };
                std::vector<Split> splits;
                switch (shape.dual) {
                    case SelfDualType::UnramifiedQuadratic:
                        for (long long n0 = 0; n0 <= dim_v; ++n0)
                            splits.push_back({GroupKind::Unitary, GroupKind::Unitary, n0, dim_v - n0});
                        break;
                    case SelfDualType::TrivialClass:
                        for (long long n0 = 0; n0 <= dim_v; n0 += 2)
                            splits.push_back({GroupKind::Symplectic, GroupKind::Symplectic, n0 + 1,
                                              dim_v - n0 + 1});
                        break;
                    case SelfDualType::RamifiedQuadratic:
                        for (long long nsp = 0; nsp <= dim_v; nsp += 2) {
                            long long nso = dim_v - nsp;
                            GroupKind so = (nso % 2 == 0) ? GroupKind::EvenSpecialOrthogonal
                                                          : GroupKind::OddSpecialOrthogonal;
                            long long dual_so = (nso % 2 == 0) ? nso : nso - 1;
                            splits.push_back({GroupKind::Symplectic, so, nsp + 1, dual_so});
                            splits.push_back({so, GroupKind::Symplectic, dual_so, nsp + 1});
                        }
                        break;
                }

                for (const auto& split : splits) {
                    auto data0 = enumerate_data(GroupType(split.k0, ctx), split.dual0, inventory,
                                                opts.max_b, opts.max_data_per_factor);
                    auto data1 = enumerate_data(GroupType(split.k1, ctx), split.dual1, inventory,
                                                opts.max_b, opts.max_data_per_factor);
                    for (const auto& d0 : data0)
                        for (const auto& d1 : data1)
                            for (const auto& sigs : sig_choices) {
                                // depth zero: only matched involutions are valid
                                if (shape.dual == SelfDualType::TrivialClass &&
                                    sigs.first != sigs.second)
                                    continue;
                                SimpleCuspidalDescriptor desc = proto;
                                desc.data = {d0, d1};
                                for (int m = 1; m <= dim_v + 1; ++m) {
                                    if (sigs.first != Involution::Identity)
                                        desc.involutions[{0, m}] = sigs.first;
                                    if (sigs.second != Involution::Identity)
                                        desc.involutions[{1, m}] = sigs.second;
                                }
                                desc.validate();
                                corpus.push_back(std::move(desc));
                            }
                }
            }
        }
    }
    return corpus;
}

std::vector<std::vector<GeneralPart>> generate_compositions(
    const std::vector<SimpleCuspidalDescriptor>& corpus, int count, unsigned long long seed) {
    // pools per q: depth-zero and positive-depth descriptors
    std::map<long long, std::vector<const SimpleCuspidalDescriptor*>> depth_zero, positive;
    for (const auto& d : corpus) {
        if (*d.endo.dual_type == SelfDualType::TrivialClass)
            depth_zero[d.q].push_back(&d);
        else
            positive[d.q].push_back(&d);
    }

    std::mt19937_64 rng(seed);
    std::vector<std::vector<GeneralPart>> out;
    std::vector<long long> qs;
    for (const auto& [q, pool] : positive)
        if (!pool.empty()) qs.push_back(q);
    if (qs.empty()) return out;

    for (int i = 0; i < count; ++i) {
        long long q = qs[rng() % qs.size()];
        const auto& pos_pool = positive[q];
        const auto& dz_pool = depth_zero[q];

        std::vector<GeneralPart> parts;
        bool with_depth_zero = !dz_pool.empty() && (rng() % 4 != 0);
        if (with_depth_zero) {
            GeneralPart part{*dz_pool[rng() % dz_pool.size()], false};
            parts.push_back(std::move(part));
        }
        int n_pos = 1 + static_cast<int>(rng() % 2);
        for (int j = 0; j < n_pos; ++j) {
            GeneralPart part{*pos_pool[rng() % pos_pool.size()], rng() % 2 == 0};
            part.desc.endo.label = "p" + std::to_string(j) + "." + part.desc.endo.label;
            parts.push_back(std::move(part));
        }
        out.push_back(std::move(parts));
    }
    return out;
}

} // namespace ijord
