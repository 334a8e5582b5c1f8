#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ijord/errors.hpp"

namespace ijord {

// Finite field F_{p^k} of odd characteristic, with deterministic element
// encodings: an element is the index sum c_i * p^i of its coordinate vector
// (c_0..c_{k-1}, ascending degree) with respect to the canonical modulus.
// The modulus is the coefficient-lexicographically smallest (constant term
// first) monic irreducible of degree k over the prime field, so two fields
// built from the same (p, k) agree element by element.
class FiniteField {
public:
    using Elt = std::uint32_t;

    static constexpr long long kDefaultBound = 1'000'000;

    FiniteField(long long p, int k, long long bound = kDefaultBound);

    long long p() const { return p_; }
    int k() const { return k_; }
    long long q() const { return q_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    Elt from_int(long long n) const; // prime-subfield embedding of n mod p

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt pow(Elt a, long long e) const;
    Elt frobenius(Elt a, int power) const; // a^(p^power)

    // Modulus coefficients over the prime field, ascending degree, length k+1.
    const std::vector<int>& modulus() const { return modulus_; }

    std::string to_string(Elt a) const;

    bool operator==(const FiniteField& other) const { return p_ == other.p_ && k_ == other.k_; }
    bool operator!=(const FiniteField& other) const { return !(*this == other); }

private:
    std::vector<int> decode(Elt a) const;
    Elt encode(const std::vector<int>& digits) const;

    long long p_;
    int k_;
    long long q_;
    std::vector<int> modulus_;
};

FiniteField field_make(long long p, int k, long long bound = FiniteField::kDefaultBound);

// k_E together with the duality twist: index 1 leaves coefficients alone,
// index 2 applies the Frobenius x -> x^sqrt(q) whose fixed field is the
// index-2 subfield.
class DualityContext {
public:
    DualityContext(FiniteField field, int fixed_subfield_index);

    const FiniteField& field() const { return field_; }
    int index() const { return index_; }
    FiniteField::Elt bar(FiniteField::Elt a) const;

    bool operator==(const DualityContext& other) const {
        return field_ == other.field_ && index_ == other.index_;
    }
    bool operator!=(const DualityContext& other) const { return !(*this == other); }

private:
    FiniteField field_;
    int index_;
};

// Monic polynomial of degree >= 1 with coefficients in a fixed field,
// stored ascending degree (leading coefficient always 1).
class MonicPoly {
public:
    MonicPoly(FiniteField field, std::vector<FiniteField::Elt> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    FiniteField::Elt coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<FiniteField::Elt>& coeffs() const { return coeffs_; }
    const FiniteField& field() const { return field_; }

    FiniteField::Elt eval(FiniteField::Elt x) const;
    std::string to_string() const; // e.g. "X^2+2X+1" with elements as indices

    bool operator==(const MonicPoly& other) const;
    bool operator!=(const MonicPoly& other) const { return !(*this == other); }

private:
    FiniteField field_;
    std::vector<FiniteField::Elt> coeffs_;
};

// Canonical order: degree first, then coefficient vectors lexicographically
// with the constant term most significant.  Fixes every list and map output.
struct MonicPolyLess {
    bool operator()(const MonicPoly& a, const MonicPoly& b) const;
};

MonicPoly x_minus_one(const FiniteField& field);
MonicPoly x_plus_one(const FiniteField& field);
bool is_x_minus_one(const MonicPoly& q);
bool is_x_plus_one(const MonicPoly& q);

// (bar Q(0))^{-1} X^deg(Q) barQ(1/X); an involution on monic polynomials
// with nonzero constant term.
MonicPoly poly_dual(const MonicPoly& q, const DualityContext& ctx);

// Exhaustive trial division by monic polynomials of degree <= deg/2.
bool is_irreducible(const MonicPoly& q);

// Second, independent route (Rabin): X^{q^d} == X mod Q and
// gcd(X^{q^{d/l}} - X, Q) = 1 for every prime l dividing d.  The test suite
// checks the two routes agree.
bool is_irreducible_rabin(const MonicPoly& q);

enum class Involution { Identity, NegateVariable };

// Identity, or Q(X) -> (-1)^deg(Q) Q(-X).
MonicPoly apply_involution(Involution sig, const MonicPoly& q);

// Irreducible monic Q with poly_dual(Q) = Q and Q(0) != 0.
class SelfDualPoly {
public:
    static SelfDualPoly make(MonicPoly poly, DualityContext ctx);

    const MonicPoly& poly() const { return poly_; }
    const DualityContext& ctx() const { return ctx_; }
    int degree() const { return poly_.degree(); }

    bool operator==(const SelfDualPoly& other) const {
        return ctx_ == other.ctx_ && poly_ == other.poly_;
    }

private:
    SelfDualPoly(MonicPoly poly, DualityContext ctx)
        : poly_(std::move(poly)), ctx_(std::move(ctx)) {}

    MonicPoly poly_;
    DualityContext ctx_;
};

SelfDualPoly apply_involution(Involution sig, const SelfDualPoly& q);

// All irreducible self-dual monic polynomials of degree m over ctx, in
// canonical order.  Degrees with none (e.g. even m in the index-2 case)
// give an empty list.
std::vector<SelfDualPoly> enumerate_self_dual_irreducible(
    const DualityContext& ctx, int m, long long bound = FiniteField::kDefaultBound);

} // namespace ijord
