#include "ijord/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ijord::oracles {

namespace {

using Elt = FiniteField::Elt;

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

std::vector<MonicPoly> self_dual_irreducible_by_roots(const DualityContext& ctx, int m) {
    const FiniteField& F = ctx.field();
    FiniteField big(F.p(), F.k() * m, ipow(F.p(), F.k() * m));

    // Embed F into big: send the residue-class generator to a root of F's
    // modulus found by scanning big.
    Elt ghat = 0;
    bool found = false;
    for (long long x = 0; x < big.q(); ++x) {
        Elt acc = big.zero();
        for (int i = F.k(); i >= 0; --i) {
            acc = big.mul(acc, static_cast<Elt>(x));
            acc = big.add(acc, big.from_int(F.modulus()[static_cast<std::size_t>(i)]));
        }
        if (acc == big.zero()) {
            ghat = static_cast<Elt>(x);
            found = true;
            break;
        }
    }
    if (!found) throw Error(Errc::InvalidArgument, "no root of the base modulus (unreachable)");

    std::vector<Elt> embed(static_cast<std::size_t>(F.q()));
    std::map<Elt, Elt> unembed;
    for (long long a = 0; a < F.q(); ++a) {
        // digits of a, base p, evaluated at ghat
        Elt acc = big.zero();
        Elt power = big.one();
        long long t = a;
        for (int i = 0; i < F.k(); ++i) {
            acc = big.add(acc, big.mul(big.from_int(t % F.p()), power));
            power = big.mul(power, ghat);
            t /= F.p();
        }
        embed[static_cast<std::size_t>(a)] = acc;
        unembed[acc] = static_cast<Elt>(a);
    }

    // a -> bar(a)^{-1} on the big field; bar is trivial (index 1) or the
    // power p^{k/2} extended from F.
    long long bar_exp = ctx.index() == 2 ? ipow(F.p(), F.k() / 2) : 1;

    std::vector<MonicPoly> out;
    std::vector<bool> visited(static_cast<std::size_t>(big.q()), false);
    for (long long a0 = 1; a0 < big.q(); ++a0) {
        if (visited[static_cast<std::size_t>(a0)]) continue;
        std::vector<Elt> orbit;
        Elt x = static_cast<Elt>(a0);
        do {
            orbit.push_back(x);
            visited[x] = true;
            x = big.pow(x, F.q());
        } while (x != a0);
        if (static_cast<int>(orbit.size()) != m) continue;

        std::set<Elt> orbit_set(orbit.begin(), orbit.end());
        Elt dual_root = big.pow(big.inv(orbit[0]), bar_exp);
        if (!orbit_set.count(dual_root)) continue;

        // minimal polynomial: prod over the orbit of (X - root), ascending
        std::vector<Elt> poly{big.one()};
        for (Elt root : orbit) {
            std::vector<Elt> next(poly.size() + 1, big.zero());
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = big.add(next[i + 1], poly[i]);
                next[i] = big.sub(next[i], big.mul(poly[i], root));
            }
            poly = std::move(next);
        }
        std::vector<Elt> coeffs;
        for (Elt c : poly) {
            auto it = unembed.find(c);
            if (it == unembed.end())
                throw Error(Errc::InvalidArgument, "minimal polynomial left the base field");
            coeffs.push_back(it->second);
        }
        out.emplace_back(F, std::move(coeffs));
    }
    std::sort(out.begin(), out.end(), MonicPolyLess{});
    return out;
}

int permutation_signature(const FiniteField& field,
                          const std::vector<std::vector<Elt>>& matrix) {
    std::size_t n = matrix.size();
    long long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= field.q();

    auto apply = [&](long long idx) {
        std::vector<Elt> v(n);
        long long t = idx;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<Elt>(t % field.q());
            t /= field.q();
        }
        long long out_idx = 0;
        for (std::size_t i = n; i-- > 0;) {
            Elt acc = field.zero();
            for (std::size_t j = 0; j < n; ++j) acc = field.add(acc, field.mul(matrix[i][j], v[j]));
            out_idx = out_idx * field.q() + acc;
        }
        return out_idx;
    };

    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    int sign = 1;
    for (long long s = 0; s < total; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        long long len = 0, x = s;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            x = apply(x);
            ++len;
        } while (x != s);
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

bool modelable(const LatticeSeqSpec& spec) {
    return (spec.dim * spec.s) % spec.e == 0;
}

ModelJumps hom_jumps_by_filtration(const LatticeSeqSpec& ly, const LatticeSeqSpec& lw) {
    ly.check();
    lw.check();
    if (ly.e != lw.e) throw Error(Errc::PeriodMismatch, "periods differ");
    if (!modelable(ly) || !modelable(lw))
        throw Error(Errc::NonIntegralDimension, "spec does not admit the principal model");
    long long e = ly.e;

    auto offsets = [&](const LatticeSeqSpec& spec) {
        long long per_jump = spec.dim * spec.s / spec.e; // basis vectors per jump
        std::vector<long long> delta;
        for (long long j = 0; j < spec.e / spec.s; ++j)
            for (long long i = 0; i < per_jump; ++i) delta.push_back(spec.a + spec.s * j);
        return delta;
    };
    std::vector<long long> dw = offsets(lw), dy = offsets(ly);

    auto ceil_div = [](long long a, long long b) {
        return a >= 0 ? (a + b - 1) / b : -((-a) / b);
    };
    // required valuation of the (u, v) entry of C(t)
    auto req = [&](long long delta_w, long long delta_y, long long t) {
        long long best = -(1LL << 40);
        for (long long i = 0; i < e; ++i)
            best = std::max(best, ceil_div(i + t - delta_w, e) - ceil_div(i - delta_y, e));
        return best;
    };

    ModelJumps out;
    std::vector<long long> dims;
    for (long long t = 0; t < e; ++t) {
        long long inc = 0;
        for (long long u = 0; u < lw.dim; ++u)
            for (long long v = 0; v < ly.dim; ++v)
                inc += req(dw[static_cast<std::size_t>(u)], dy[static_cast<std::size_t>(v)], t + 1) -
                       req(dw[static_cast<std::size_t>(u)], dy[static_cast<std::size_t>(v)], t);
        if (inc > 0) {
            out.jumps.push_back(t);
            dims.push_back(inc);
        }
    }
    if (!dims.empty()) {
        out.quotient_dim = dims.front();
        for (long long d : dims)
            if (d != dims.front()) out.equal_quotients = false;
    }
    return out;
}

} // namespace ijord::oracles
