#pragma once

#include <compare>
#include <cstdint>
#include <vector>

// Exact arithmetic in the tower F_p <= F_q <= F_{q^2}, q = p^e odd.
//
// Elements are stored packed into a single machine word: an element of F_q
// with coordinate vector (c_0, ..., c_{e-1}) over F_p is the integer
// sum c_i p^i. For e = 1 this is just the residue. Packing keeps elements
// trivially copyable and polynomial coefficient arrays flat; q is capped at
// 2^31 - 1 so that q^2 - 1 (the group order of F_{q^2}*) and all products of
// reduced residues stay inside unsigned 64-bit arithmetic.

namespace cyclofactor {

struct FqElem {
    std::uint64_t v = 0;
    friend constexpr bool operator==(FqElem, FqElem) = default;
    friend constexpr auto operator<=>(FqElem a, FqElem b) { return a.v <=> b.v; }
};

/// a + b*w with w^2 equal to the chosen nonsquare of F_q.
struct Fq2Elem {
    FqElem a;
    FqElem b;
    friend constexpr bool operator==(Fq2Elem, Fq2Elem) = default;
    friend constexpr auto operator<=>(const Fq2Elem&, const Fq2Elem&) = default;
};

class Fq {
public:
    using Elem = FqElem;

    /// modulus: monic irreducible polynomial of degree e over F_p, ascending
    /// coefficients (size e+1). For e = 1 pass {0, 1}.
    Fq(std::uint64_t p, std::uint64_t e, std::vector<std::uint32_t> modulus);

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t ext_degree() const { return e_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FqElem zero() const { return {}; }
    FqElem one() const { return {1}; }

    /// Element with packed index i in [0, q).
    FqElem from_uint(std::uint64_t i) const;
    /// Embedding of an integer through the prime subfield (reduces mod p).
    FqElem from_int(std::int64_t x) const;
    std::uint64_t to_uint(FqElem x) const { return x.v; }
    /// Coordinates over F_p, ascending powers, length e.
    std::vector<std::uint64_t> coords(FqElem x) const;
    FqElem from_coords(const std::vector<std::uint64_t>& c) const;

    bool is_zero(FqElem x) const { return x.v == 0; }

    FqElem add(FqElem x, FqElem y) const;
    FqElem sub(FqElem x, FqElem y) const;
    FqElem neg(FqElem x) const;
    FqElem mul(FqElem x, FqElem y) const;
    FqElem inv(FqElem x) const;
    FqElem pow(FqElem x, std::uint64_t n) const;
    /// Negative exponents go through the inverse.
    FqElem pow_signed(FqElem x, std::int64_t n) const;

private:
    std::uint64_t p_, e_, q_;
    std::vector<std::uint32_t> modulus_;

    void unpack(std::uint64_t v, std::uint64_t* d) const;
    std::uint64_t pack(const std::uint64_t* d) const;
    FqElem mul_ext(FqElem x, FqElem y) const;
};

class Fq2 {
public:
    using Elem = Fq2Elem;

    Fq2(Fq base, FqElem nonsquare);

    const Fq& base() const { return base_; }
    FqElem nonsquare() const { return nonsquare_; }
    std::uint64_t order() const { return q2_; }

    Fq2Elem zero() const { return {}; }
    Fq2Elem one() const { return {base_.one(), {}}; }
    Fq2Elem make(FqElem a, FqElem b) const { return {a, b}; }
    Fq2Elem from_base(FqElem a) const { return {a, {}}; }
    Fq2Elem from_int(std::int64_t x) const { return {base_.from_int(x), {}}; }
    Fq2Elem from_uint(std::uint64_t i) const;

    bool is_zero(Fq2Elem x) const { return x == Fq2Elem{}; }
    bool in_base(Fq2Elem x) const { return x.b.v == 0; }

    Fq2Elem add(Fq2Elem x, Fq2Elem y) const;
    Fq2Elem sub(Fq2Elem x, Fq2Elem y) const;
    Fq2Elem neg(Fq2Elem x) const;
    Fq2Elem mul(Fq2Elem x, Fq2Elem y) const;
    Fq2Elem inv(Fq2Elem x) const;
    Fq2Elem pow(Fq2Elem x, std::uint64_t n) const;
    Fq2Elem pow_signed(Fq2Elem x, std::int64_t n) const;

    /// x^q: the conjugate a - b*w. Fixes exactly the base field.
    Fq2Elem frobenius(Fq2Elem x) const { return {x.a, base_.neg(x.b)}; }
    /// Norm into F_q: x * x^q = a^2 - nonsquare * b^2.
    FqElem norm(Fq2Elem x) const;

private:
    Fq base_;
    FqElem nonsquare_;
    std::uint64_t q2_;
};

/// Immutable description of the tower F_p <= F_q <= F_{q^2} with
/// deterministic generators and nonsquare. Value type, freely copyable.
struct FieldCtx {
    std::uint64_t p = 0;
    std::uint64_t e = 0;
    std::uint64_t q = 0;
    unsigned s = 0;  // v2(q - 1)
    unsigned m = 0;  // v2(q^2 - 1)
    std::vector<std::uint32_t> modulus;
    FqElem nonsquare;
    FqElem gen_q;
    Fq2Elem gen_q2;
    Fq fq;
    Fq2 fq2;
};

/// Builds the deterministic context for q = p^e:
///   - modulus: lexicographically smallest monic irreducible of degree e over
///     F_p, scanning with the constant term most significant;
///   - nonsquare: first element of packed index 2, 3, ... failing Euler's
///     criterion;
///   - gen_q / gen_q2: smallest-index elements of full multiplicative order.
/// Throws std::invalid_argument for bad (p, e), std::overflow_error when
/// p^e exceeds 2^31 - 1.
FieldCtx make_field_ctx(std::uint64_t p, std::uint64_t e = 1);

/// Euler criterion: c^((q-1)/2) = 1. Rejects c = 0.
bool is_square(const Fq& fq, FqElem c);

enum class Ambient { Fq, Fq2 };

/// Deterministic primitive root of the given order: gen^(group order / order).
/// The order must divide q - 1 (ambient Fq) resp. q^2 - 1 (ambient Fq2).
FqElem root_of_unity_fq(const FieldCtx& ctx, std::uint64_t order);
Fq2Elem root_of_unity_fq2(const FieldCtx& ctx, std::uint64_t order);

inline Fq2Elem frobenius(const FieldCtx& ctx, Fq2Elem x) { return ctx.fq2.frobenius(x); }

}  // namespace cyclofactor
