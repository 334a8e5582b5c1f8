#include "ijord/ffpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ijord {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// -- dense polynomial arithmetic over the prime field (int digits mod p) --
// Used only for the canonical-modulus search, before any FiniteField exists.

using IPoly = std::vector<int>; // ascending degree, no trailing-zero guarantee

int ipoly_deg(const IPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// a mod b over F_p, b monic of degree >= 1.
IPoly ipoly_mod(IPoly a, const IPoly& b, long long p) {
    int db = ipoly_deg(b);
    for (int i = ipoly_deg(a); i >= db; --i) {
        long long c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            long long v = a[static_cast<std::size_t>(i - db + j)] - c * b[static_cast<std::size_t>(j)];
            v %= p;
            if (v < 0) v += p;
            a[static_cast<std::size_t>(i - db + j)] = static_cast<int>(v);
        }
    }
    return a;
}

bool ipoly_irreducible(const IPoly& f, long long p) {
    int d = ipoly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (int e = 1; 2 * e <= d; ++e) {
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long n = 0; n < count; ++n) {
            IPoly g(static_cast<std::size_t>(e) + 1, 0);
            long long t = n;
            for (int i = 0; i < e; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(t % p);
                t /= p;
            }
            g[static_cast<std::size_t>(e)] = 1;
            if (ipoly_deg(ipoly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

} // namespace

FiniteField::FiniteField(long long p, int k, long long bound) : p_(p), k_(k) {
    if (!is_prime(p)) throw Error(Errc::NonPrime, "p=" + std::to_string(p) + " is not prime");
    if (p == 2)
        throw Error(Errc::EvenCharacteristic, "characteristic must be odd, got p=" + std::to_string(p));
    if (k < 1) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > bound)
            throw Error(Errc::TooLarge, "p^k exceeds the cardinality bound " + std::to_string(bound));
    }
    // Coefficient-lexicographically smallest monic irreducible of degree k,
    // constant term most significant in the comparison.
    long long count = q_;
    for (long long n = 0; n < count; ++n) {
        IPoly f(static_cast<std::size_t>(k) + 1, 0);
        long long t = n;
        for (int i = k - 1; i >= 0; --i) { // c_0 is the most significant digit of n
            f[static_cast<std::size_t>(i)] = static_cast<int>(t % p);
            t /= p;
        }
        f[static_cast<std::size_t>(k)] = 1;
        if (ipoly_irreducible(f, p)) {
            modulus_ = f;
            return;
        }
    }
    throw Error(Errc::InvalidArgument, "no irreducible modulus found (unreachable)");
}

std::vector<int> FiniteField::decode(Elt a) const {
    std::vector<int> digits(static_cast<std::size_t>(k_), 0);
    long long t = a;
    for (int i = 0; i < k_; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(t % p_);
        t /= p_;
    }
    return digits;
}

FiniteField::Elt FiniteField::encode(const std::vector<int>& digits) const {
    long long v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + digits[static_cast<std::size_t>(i)];
    return static_cast<Elt>(v);
}

FiniteField::Elt FiniteField::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
}

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
    auto da = decode(a), db = decode(b);
    for (int i = 0; i < k_; ++i) {
        da[static_cast<std::size_t>(i)] =
            static_cast<int>((da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_);
    }
    return encode(da);
}

FiniteField::Elt FiniteField::neg(Elt a) const {
    auto da = decode(a);
    for (int i = 0; i < k_; ++i) {
        da[static_cast<std::size_t>(i)] =
            static_cast<int>((p_ - da[static_cast<std::size_t>(i)]) % p_);
    }
    return encode(da);
}

FiniteField::Elt FiniteField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

FiniteField::Elt FiniteField::mul(Elt a, Elt b) const {
    auto da = decode(a), db = decode(b);
    std::vector<long long> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
    for (int i = 0; i < k_; ++i) {
        if (da[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < k_; ++j)
            prod[static_cast<std::size_t>(i + j)] +=
                static_cast<long long>(da[static_cast<std::size_t>(i)]) * db[static_cast<std::size_t>(j)];
    }
    // reduce mod modulus (monic)
    for (int i = 2 * k_ - 2; i >= k_; --i) {
        long long c = prod[static_cast<std::size_t>(i)] % p_;
        if (c == 0) continue;
        for (int j = 0; j <= k_; ++j) {
            prod[static_cast<std::size_t>(i - k_ + j)] -= c * modulus_[static_cast<std::size_t>(j)];
        }
    }
    std::vector<int> digits(static_cast<std::size_t>(k_), 0);
    for (int i = 0; i < k_; ++i) {
        long long v = prod[static_cast<std::size_t>(i)] % p_;
        if (v < 0) v += p_;
        digits[static_cast<std::size_t>(i)] = static_cast<int>(v);
    }
    return encode(digits);
}

FiniteField::Elt FiniteField::pow(Elt a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    Elt result = one(), base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FiniteField::Elt FiniteField::inv(Elt a) const {
    if (a == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
    return pow(a, q_ - 2);
}

FiniteField::Elt FiniteField::frobenius(Elt a, int power) const {
    long long pe = 1;
    for (int i = 0; i < power; ++i) pe *= p_;
    return pow(a, pe);
}

std::string FiniteField::to_string(Elt a) const { return std::to_string(a); }

FiniteField field_make(long long p, int k, long long bound) { return FiniteField(p, k, bound); }

DualityContext::DualityContext(FiniteField field, int fixed_subfield_index)
    : field_(std::move(field)), index_(fixed_subfield_index) {
    if (index_ != 1 && index_ != 2)
        throw Error(Errc::InvalidArgument, "fixed_subfield_index must be 1 or 2");
    if (index_ == 2 && field_.k() % 2 != 0)
        throw Error(Errc::InvalidArgument,
                    "index-2 duality needs an even extension degree, got k=" + std::to_string(field_.k()));
}

FiniteField::Elt DualityContext::bar(FiniteField::Elt a) const {
    if (index_ == 1) return a;
    return field_.frobenius(a, field_.k() / 2);
}

MonicPoly::MonicPoly(FiniteField field, std::vector<FiniteField::Elt> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw Error(Errc::InvalidArgument, "monic polynomial needs degree >= 1");
    if (coeffs_.back() != field_.one())
        throw Error(Errc::InvalidArgument, "leading coefficient must be 1");
    for (auto c : coeffs_)
        if (c >= field_.q()) throw Error(Errc::InvalidArgument, "coefficient index out of range");
}

FiniteField::Elt MonicPoly::eval(FiniteField::Elt x) const {
    FiniteField::Elt acc = field_.zero();
    for (int i = degree(); i >= 0; --i) acc = field_.add(field_.mul(acc, x), coeff(i));
    return acc;
}

std::string MonicPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FiniteField::Elt c = coeff(i);
        if (c == 0 && i > 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool MonicPoly::operator==(const MonicPoly& other) const {
    return field_ == other.field_ && coeffs_ == other.coeffs_;
}

bool MonicPolyLess::operator()(const MonicPoly& a, const MonicPoly& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // constant term first
    return a.coeffs() < b.coeffs();
}

MonicPoly x_minus_one(const FiniteField& field) {
    return MonicPoly(field, {field.neg(field.one()), field.one()});
}

MonicPoly x_plus_one(const FiniteField& field) {
    return MonicPoly(field, {field.one(), field.one()});
}

bool is_x_minus_one(const MonicPoly& q) {
    return q.degree() == 1 && q.coeff(0) == q.field().neg(q.field().one());
}

bool is_x_plus_one(const MonicPoly& q) {
    return q.degree() == 1 && q.coeff(0) == q.field().one();
}

MonicPoly poly_dual(const MonicPoly& q, const DualityContext& ctx) {
    if (q.field() != ctx.field())
        throw Error(Errc::ContextMismatch, "polynomial and duality context live over different fields");
    const FiniteField& F = ctx.field();
    if (q.coeff(0) == F.zero())
        throw Error(Errc::ZeroConstantTerm, "poly_dual needs Q(0) != 0");
    int d = q.degree();
    FiniteField::Elt c0inv = F.inv(ctx.bar(q.coeff(0)));
    std::vector<FiniteField::Elt> out(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j)
        out[static_cast<std::size_t>(j)] = F.mul(c0inv, ctx.bar(q.coeff(d - j)));
    return MonicPoly(F, std::move(out));
}

namespace {

// dense helpers over a FiniteField (ascending degree, trailing zeros allowed)
using EPoly = std::vector<FiniteField::Elt>;

int epoly_deg(const EPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

EPoly epoly_mod(const FiniteField& F, EPoly a, const EPoly& b) {
    int db = epoly_deg(b);
    FiniteField::Elt lead_inv = F.inv(b[static_cast<std::size_t>(db)]);
    for (int i = epoly_deg(a); i >= db; --i) {
        FiniteField::Elt c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        FiniteField::Elt fac = F.mul(c, lead_inv);
        for (int j = 0; j <= db; ++j) {
            auto& t = a[static_cast<std::size_t>(i - db + j)];
            t = F.sub(t, F.mul(fac, b[static_cast<std::size_t>(j)]));
        }
    }
    return a;
}

EPoly epoly_mulmod(const FiniteField& F, const EPoly& a, const EPoly& b, const EPoly& m) {
    EPoly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
    return epoly_mod(F, std::move(prod), m);
}

EPoly epoly_powmod_x(const FiniteField& F, long long e, const EPoly& m) {
    // X^e mod m by square and multiply
    EPoly result{F.one()};
    EPoly base{F.zero(), F.one()};
    while (e > 0) {
        if (e & 1) result = epoly_mulmod(F, result, base, m);
        base = epoly_mulmod(F, base, base, m);
        e >>= 1;
    }
    return result;
}

EPoly epoly_gcd(const FiniteField& F, EPoly a, EPoly b) {
    while (epoly_deg(b) >= 0) {
        EPoly r = epoly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

EPoly epoly_sub(const FiniteField& F, EPoly a, const EPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    return a;
}

long long ipow(long long base, int e) {
    long long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

} // namespace

bool is_irreducible(const MonicPoly& q) {
    const FiniteField& F = q.field();
    int d = q.degree();
    if (d == 1) return true;
    for (int e = 1; 2 * e <= d; ++e) {
        long long count = ipow(F.q(), e);
        for (long long n = 0; n < count; ++n) {
            EPoly g(static_cast<std::size_t>(e) + 1, 0);
            long long t = n;
            for (int i = 0; i < e; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<FiniteField::Elt>(t % F.q());
                t /= F.q();
            }
            g[static_cast<std::size_t>(e)] = F.one();
            EPoly r = epoly_mod(F, q.coeffs(), g);
            if (epoly_deg(r) < 0) return false;
        }
    }
    return true;
}

bool is_irreducible_rabin(const MonicPoly& q) {
    const FiniteField& F = q.field();
    int d = q.degree();
    if (d == 1) return true;
    const EPoly& m = q.coeffs();
    const EPoly x{F.zero(), F.one()};

    // X^{q^d} == X mod Q
    EPoly xq = epoly_powmod_x(F, ipow(F.q(), d), m);
    if (epoly_deg(epoly_sub(F, xq, x)) >= 0) return false;

    std::vector<int> primes;
    int dd = d;
    for (int l = 2; l <= dd; ++l) {
        if (dd % l == 0) {
            primes.push_back(l);
            while (dd % l == 0) dd /= l;
        }
    }
    for (int l : primes) {
        EPoly xe = epoly_powmod_x(F, ipow(F.q(), d / l), m);
        EPoly g = epoly_gcd(F, epoly_sub(F, xe, x), m);
        if (epoly_deg(g) != 0) return false;
    }
    return true;
}

MonicPoly apply_involution(Involution sig, const MonicPoly& q) {
    if (sig == Involution::Identity) return q;
    const FiniteField& F = q.field();
    int d = q.degree();
    std::vector<FiniteField::Elt> out(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        // (-1)^d Q(-X): coefficient i picks up (-1)^{d-i}
        FiniteField::Elt c = q.coeff(i);
        out[static_cast<std::size_t>(i)] = ((d - i) % 2 == 0) ? c : F.neg(c);
    }
    return MonicPoly(F, std::move(out));
}

SelfDualPoly apply_involution(Involution sig, const SelfDualPoly& q) {
    if (sig == Involution::Identity) return q;
    return SelfDualPoly::make(apply_involution(sig, q.poly()), q.ctx());
}

SelfDualPoly SelfDualPoly::make(MonicPoly poly, DualityContext ctx) {
    if (poly.field() != ctx.field())
        throw Error(Errc::ContextMismatch, "polynomial field does not match the duality context");
    if (poly.coeff(0) == ctx.field().zero())
        throw Error(Errc::ZeroConstantTerm, "self-dual polynomials have nonzero constant term");
    if (poly_dual(poly, ctx) != poly)
        throw Error(Errc::NotSelfDualPoly, poly.to_string() + " is not self-dual");
    if (!is_irreducible(poly))
        throw Error(Errc::NotIrreducible, poly.to_string() + " is reducible");
    return SelfDualPoly(std::move(poly), std::move(ctx));
}

std::vector<SelfDualPoly> enumerate_self_dual_irreducible(const DualityContext& ctx, int m,
                                                          long long bound) {
    if (m < 1) throw Error(Errc::InvalidArgument, "degree must be >= 1");
    const FiniteField& F = ctx.field();
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= F.q();
        if (total > bound)
            throw Error(Errc::TooLarge, "q^m exceeds the enumeration bound " + std::to_string(bound));
    }
    std::vector<MonicPoly> hits;
    for (long long n = 0; n < total; ++n) {
        std::vector<FiniteField::Elt> coeffs(static_cast<std::size_t>(m) + 1);
        long long t = n;
        for (int i = 0; i < m; ++i) {
            coeffs[static_cast<std::size_t>(i)] = static_cast<FiniteField::Elt>(t % F.q());
            t /= F.q();
        }
        coeffs[static_cast<std::size_t>(m)] = F.one();
        MonicPoly q(F, std::move(coeffs));
        if (q.coeff(0) == F.zero()) continue;
        if (poly_dual(q, ctx) != q) continue;
        if (!is_irreducible(q)) continue;
        hits.push_back(std::move(q));
    }
    std::sort(hits.begin(), hits.end(), MonicPolyLess{});
    std::vector<SelfDualPoly> out;
    out.reserve(hits.size());
    for (auto& h : hits) out.push_back(SelfDualPoly::make(std::move(h), ctx));
    return out;
}

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::EvenCharacteristic: return "EvenCharacteristic";
        case Errc::TooLarge: return "TooLarge";
        case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotSelfDualPoly: return "NotSelfDualPoly";
        case Errc::NonTriangular: return "NonTriangular";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::EigenTypeMismatch: return "EigenTypeMismatch";
        case Errc::MissingSymplecticPlus: return "MissingSymplecticPlus";
        case Errc::ContextMismatch: return "ContextMismatch";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::NonHalfInteger: return "NonHalfInteger";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::PeriodMismatch: return "PeriodMismatch";
        case Errc::NonIntegralDimension: return "NonIntegralDimension";
        case Errc::NotDivisor: return "NotDivisor";
        case Errc::NonIntegral: return "NonIntegral";
        case Errc::ZeroDeterminant: return "ZeroDeterminant";
        case Errc::IdentityViolation: return "IdentityViolation";
        case Errc::DuplicateEndoClass: return "DuplicateEndoClass";
        case Errc::NotSelfDual: return "NotSelfDual";
        case Errc::OddDegree: return "OddDegree";
        case Errc::UnpairedLabel: return "UnpairedLabel";
        case Errc::UnknownLabel: return "UnknownLabel";
        case Errc::NoSolution: return "NoSolution";
        case Errc::RegistryMissing: return "RegistryMissing";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::SchemaError: return "SchemaError";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace ijord
