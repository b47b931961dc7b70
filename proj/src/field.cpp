#include "cyclofactor/field.hpp"

#include <stdexcept>
#include <string>

#include "cyclofactor/numtheory.hpp"
#include "cyclofactor/oracle.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor {

namespace {
constexpr std::uint64_t kMaxQ = 0x7fffffffULL;  // q^2 - 1 must fit u64 arithmetic
constexpr std::size_t kMaxExt = 20;
}  // namespace

Fq::Fq(std::uint64_t p, std::uint64_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (e_ == 0) throw std::invalid_argument("Fq: extension degree must be >= 1");
    if (e_ >= kMaxExt) throw std::overflow_error("Fq: extension degree too large for the word contract");
    if (modulus_.size() != e_ + 1 || modulus_.back() != 1)
        throw std::invalid_argument("Fq: modulus must be monic of degree e");
    q_ = 1;
    for (std::uint64_t i = 0; i < e_; ++i) {
        if (q_ > kMaxQ / p_) throw std::overflow_error("Fq: p^e exceeds the 31-bit field-size limit");
        q_ *= p_;
    }
}

void Fq::unpack(std::uint64_t v, std::uint64_t* d) const {
    for (std::uint64_t i = 0; i < e_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
}

std::uint64_t Fq::pack(const std::uint64_t* d) const {
    std::uint64_t v = 0;
    for (std::uint64_t i = e_; i-- > 0;) v = v * p_ + d[i];
    return v;
}

FqElem Fq::from_uint(std::uint64_t i) const {
    if (i >= q_) throw std::invalid_argument("Fq::from_uint: index out of range");
    return {i};
}

FqElem Fq::from_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint64_t>(r)};
}

std::vector<std::uint64_t> Fq::coords(FqElem x) const {
    std::vector<std::uint64_t> d(e_);
    unpack(x.v, d.data());
    return d;
}

FqElem Fq::from_coords(const std::vector<std::uint64_t>& c) const {
    if (c.size() != e_) throw std::invalid_argument("Fq::from_coords: wrong coordinate count");
    std::uint64_t d[kMaxExt];
    for (std::uint64_t i = 0; i < e_; ++i) d[i] = c[i] % p_;
    return {pack(d)};
}

FqElem Fq::add(FqElem x, FqElem y) const {
    if (e_ == 1) {
        std::uint64_t v = x.v + y.v;
        if (v >= p_) v -= p_;
        return {v};
    }
    std::uint64_t a[kMaxExt], b[kMaxExt];
    unpack(x.v, a);
    unpack(y.v, b);
    for (std::uint64_t i = 0; i < e_; ++i) {
        a[i] += b[i];
        if (a[i] >= p_) a[i] -= p_;
    }
    return {pack(a)};
}

FqElem Fq::sub(FqElem x, FqElem y) const {
    if (e_ == 1) {
        std::uint64_t v = x.v + p_ - y.v;
        if (v >= p_) v -= p_;
        return {v};
    }
    std::uint64_t a[kMaxExt], b[kMaxExt];
    unpack(x.v, a);
    unpack(y.v, b);
    for (std::uint64_t i = 0; i < e_; ++i) {
        a[i] += p_ - b[i];
        if (a[i] >= p_) a[i] -= p_;
    }
    return {pack(a)};
}

FqElem Fq::neg(FqElem x) const { return sub(zero(), x); }

FqElem Fq::mul(FqElem x, FqElem y) const {
    if (e_ == 1) return {(x.v * y.v) % p_};
    return mul_ext(x, y);
}

FqElem Fq::mul_ext(FqElem x, FqElem y) const {
    // For e >= 2 the characteristic is below 2^16, so digit products
    // accumulate safely in 64 bits.
    std::uint64_t a[kMaxExt], b[kMaxExt], prod[2 * kMaxExt] = {};
    unpack(x.v, a);
    unpack(y.v, b);
    for (std::uint64_t i = 0; i < e_; ++i) {
        if (!a[i]) continue;
        for (std::uint64_t j = 0; j < e_; ++j) prod[i + j] += a[i] * b[j];
    }
    for (std::uint64_t i = 0; i < 2 * e_ - 1; ++i) prod[i] %= p_;
    for (std::uint64_t i = 2 * e_ - 2; i >= e_; --i) {
        const std::uint64_t c = prod[i];
        if (c) {
            prod[i] = 0;
            for (std::uint64_t j = 0; j < e_; ++j) {
                prod[i - e_ + j] = (prod[i - e_ + j] + c * (p_ - modulus_[j])) % p_;
            }
        }
    }
    return {pack(prod)};
}

FqElem Fq::pow(FqElem x, std::uint64_t n) const {
    FqElem r = one();
    while (n) {
        if (n & 1) r = mul(r, x);
        x = mul(x, x);
        n >>= 1;
    }
    return r;
}

FqElem Fq::pow_signed(FqElem x, std::int64_t n) const {
    if (n >= 0) return pow(x, static_cast<std::uint64_t>(n));
    return pow(inv(x), static_cast<std::uint64_t>(-n));
}

FqElem Fq::inv(FqElem x) const {
    if (x.v == 0) throw std::invalid_argument("Fq::inv: inversion of zero");
    return pow(x, q_ - 2);
}

// ---------------------------------------------------------------------------

Fq2::Fq2(Fq base, FqElem nonsquare) : base_(std::move(base)), nonsquare_(nonsquare) {
    q2_ = base_.order() * base_.order();
}

Fq2Elem Fq2::from_uint(std::uint64_t i) const {
    const std::uint64_t q = base_.order();
    if (i >= q2_) throw std::invalid_argument("Fq2::from_uint: index out of range");
    return {base_.from_uint(i % q), base_.from_uint(i / q)};
}

Fq2Elem Fq2::add(Fq2Elem x, Fq2Elem y) const { return {base_.add(x.a, y.a), base_.add(x.b, y.b)}; }
Fq2Elem Fq2::sub(Fq2Elem x, Fq2Elem y) const { return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)}; }
Fq2Elem Fq2::neg(Fq2Elem x) const { return {base_.neg(x.a), base_.neg(x.b)}; }

Fq2Elem Fq2::mul(Fq2Elem x, Fq2Elem y) const {
    // (a + bw)(c + dw) = (ac + ns*bd) + (ad + bc) w
    const FqElem ac = base_.mul(x.a, y.a);
    const FqElem bd = base_.mul(x.b, y.b);
    const FqElem ad = base_.mul(x.a, y.b);
    const FqElem bc = base_.mul(x.b, y.a);
    return {base_.add(ac, base_.mul(nonsquare_, bd)), base_.add(ad, bc)};
}

FqElem Fq2::norm(Fq2Elem x) const {
    return base_.sub(base_.mul(x.a, x.a), base_.mul(nonsquare_, base_.mul(x.b, x.b)));
}

Fq2Elem Fq2::inv(Fq2Elem x) const {
    if (is_zero(x)) throw std::invalid_argument("Fq2::inv: inversion of zero");
    const FqElem n_inv = base_.inv(norm(x));
    return {base_.mul(x.a, n_inv), base_.neg(base_.mul(x.b, n_inv))};
}

Fq2Elem Fq2::pow(Fq2Elem x, std::uint64_t n) const {
    Fq2Elem r = one();
    while (n) {
        if (n & 1) r = mul(r, x);
        x = mul(x, x);
        n >>= 1;
    }
    return r;
}

Fq2Elem Fq2::pow_signed(Fq2Elem x, std::int64_t n) const {
    if (n >= 0) return pow(x, static_cast<std::uint64_t>(n));
    return pow(inv(x), static_cast<std::uint64_t>(-n));
}

// ---------------------------------------------------------------------------
// Prime-field polynomial kernels (declared in poly.hpp)

namespace detail {

Poly<Fq> poly_mul_prime(const Fq& k, const Poly<Fq>& x, const Poly<Fq>& y) {
    const std::uint64_t p = k.characteristic();
    Poly<Fq> r;
    r.c.assign(x.c.size() + y.c.size() - 1, FqElem{});
    if (p < (1ULL << 21) && x.c.size() < (1ULL << 21)) {
        std::vector<std::uint64_t> acc(r.c.size(), 0);
        for (std::size_t i = 0; i < x.c.size(); ++i) {
            const std::uint64_t xi = x.c[i].v;
            if (!xi) continue;
            std::uint64_t* row = acc.data() + i;
            for (std::size_t j = 0; j < y.c.size(); ++j) row[j] += xi * y.c[j].v;
        }
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i].v = acc[i] % p;
    } else {
        for (std::size_t i = 0; i < x.c.size(); ++i) {
            const std::uint64_t xi = x.c[i].v;
            if (!xi) continue;
            for (std::size_t j = 0; j < y.c.size(); ++j) {
                r.c[i + j].v = (r.c[i + j].v + xi * y.c[j].v) % p;
            }
        }
    }
    r.trim();
    return r;
}

void poly_divrem_prime(const Fq& k, std::vector<FqElem>& rem, const Poly<Fq>& divisor,
                       Poly<Fq>& quot) {
    const std::uint64_t p = k.characteristic();
    const std::size_t dy = divisor.c.size() - 1;
    const std::uint64_t lead_inv = k.inv(divisor.c.back()).v;
    std::vector<std::uint64_t> neg(dy);
    for (std::size_t j = 0; j < dy; ++j) neg[j] = (p - divisor.c[j].v) % p;
    if (p < (1ULL << 20) && rem.size() < (1ULL << 22)) {
        // Lazy reduction: cells accumulate at most 2^22 products below 2^40,
        // so a single final reduction suffices.
        for (std::size_t i = rem.size(); i-- > dy;) {
            const std::uint64_t t = (rem[i].v % p) * lead_inv % p;
            quot.c[i - dy].v = t;
            if (!t) continue;
            FqElem* row = rem.data() + (i - dy);
            for (std::size_t j = 0; j < dy; ++j) row[j].v += t * neg[j];
        }
        rem.resize(dy);
        for (auto& c : rem) c.v %= p;
    } else {
        for (std::size_t i = rem.size(); i-- > dy;) {
            const std::uint64_t t = (rem[i].v * lead_inv) % p;
            quot.c[i - dy].v = t;
            rem[i].v = 0;
            if (!t) continue;
            FqElem* row = rem.data() + (i - dy);
            for (std::size_t j = 0; j < dy; ++j) row[j].v = (row[j].v + t * neg[j]) % p;
        }
    }
    while (!rem.empty() && rem.back().v == 0) rem.pop_back();
}

Poly<Fq> poly_sqr_prime(const Fq& k, const Poly<Fq>& x) {
    const std::uint64_t p = k.characteristic();
    const std::size_t n = x.c.size();
    if (p >= (1ULL << 21) || n >= (1ULL << 20)) return poly_mul_prime(k, x, x);
    Poly<Fq> r;
    r.c.assign(2 * n - 1, FqElem{});
    std::vector<std::uint64_t> acc(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t xi = x.c[i].v;
        if (!xi) continue;
        acc[2 * i] += xi * xi;
        const std::uint64_t two_xi = 2 * xi;
        std::uint64_t* row = acc.data() + i;
        for (std::size_t j = i + 1; j < n; ++j) row[j] += two_xi * x.c[j].v;
    }
    for (std::size_t i = 0; i < acc.size(); ++i) r.c[i].v = acc[i] % p;
    r.trim();
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Deterministic context construction

bool is_square(const Fq& fq, FqElem c) {
    if (fq.is_zero(c)) throw std::invalid_argument("is_square: zero input");
    return fq.pow(c, (fq.order() - 1) / 2) == fq.one();
}

namespace {

// Lexicographically smallest monic irreducible of degree e over F_p, the
// scan comparing the constant term first.
std::vector<std::uint32_t> find_modulus(std::uint64_t p, std::uint64_t e) {
    if (e == 1) return {0, 1};
    const Fq fp(p, 1, {0, 1});
    std::vector<std::uint64_t> digits(e, 0);  // digits[0] = constant term
    for (;;) {
        Poly<Fq> cand;
        cand.c.resize(e + 1);
        for (std::uint64_t i = 0; i < e; ++i) cand.c[i] = {digits[i]};
        cand.c[e] = fp.one();
        if (is_irreducible(fp, cand)) {
            std::vector<std::uint32_t> out(e + 1);
            for (std::uint64_t i = 0; i < e; ++i) out[i] = static_cast<std::uint32_t>(digits[i]);
            out[e] = 1;
            return out;
        }
        std::size_t pos = e;
        while (pos-- > 0) {
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            if (pos == 0) throw std::logic_error("find_modulus: no irreducible polynomial found");
        }
    }
}

FqElem find_nonsquare(const Fq& fq) {
    for (std::uint64_t i = 2; i < fq.order(); ++i) {
        const FqElem c = fq.from_uint(i);
        if (!is_square(fq, c)) return c;
    }
    throw std::logic_error("find_nonsquare: no nonsquare found");
}

FqElem find_generator_fq(const Fq& fq) {
    const std::uint64_t n = fq.order() - 1;
    const auto pf = prime_factors(n);
    for (std::uint64_t i = 2; i < fq.order(); ++i) {
        const FqElem g = fq.from_uint(i);
        bool full = true;
        for (std::uint64_t r : pf) {
            if (fq.pow(g, n / r) == fq.one()) {
                full = false;
                break;
            }
        }
        if (full) return g;
    }
    throw std::logic_error("find_generator_fq: no generator found");
}

Fq2Elem find_generator_fq2(const Fq2& fq2) {
    const std::uint64_t q = fq2.base().order();
    const std::uint64_t n = fq2.order() - 1;
    // q - 1 and q + 1 are factored separately; their union covers q^2 - 1.
    auto pf = prime_factors(q - 1);
    for (std::uint64_t r : prime_factors(q + 1)) pf.push_back(r);
    std::sort(pf.begin(), pf.end());
    pf.erase(std::unique(pf.begin(), pf.end()), pf.end());
    // Elements with b = 0 lie in F_q and cannot have order q^2 - 1; neither
    // can anything in the a = 0 column (its square lies in F_q), so scan with
    // b outermost to reach mixed elements immediately.
    for (std::uint64_t bi = 1; bi < q; ++bi) {
        for (std::uint64_t ai = 0; ai < q; ++ai) {
            const Fq2Elem g = fq2.make(fq2.base().from_uint(ai), fq2.base().from_uint(bi));
            bool full = true;
            for (std::uint64_t r : pf) {
                if (fq2.pow(g, n / r) == fq2.one()) {
                    full = false;
                    break;
                }
            }
            if (full) return g;
        }
    }
    throw std::logic_error("find_generator_fq2: no generator found");
}

}  // namespace

FieldCtx make_field_ctx(std::uint64_t p, std::uint64_t e) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("make_field_ctx: p must be an odd prime");
    if (e < 1) throw std::invalid_argument("make_field_ctx: e must be >= 1");
    if (e >= kMaxExt) throw std::overflow_error("make_field_ctx: p^e exceeds the 31-bit field-size limit");
    std::uint64_t q_check = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (q_check > kMaxQ / p)
            throw std::overflow_error("make_field_ctx: p^e exceeds the 31-bit field-size limit");
        q_check *= p;
    }
    auto modulus = find_modulus(p, e);
    Fq fq(p, e, modulus);
    const FqElem nonsquare = find_nonsquare(fq);
    const FqElem gen_q = find_generator_fq(fq);
    Fq2 fq2(fq, nonsquare);
    const Fq2Elem gen_q2 = find_generator_fq2(fq2);
    const std::uint64_t q = fq.order();
    FieldCtx ctx{p,      e,     q,        v2(q - 1), v2(q * q - 1), std::move(modulus),
                 nonsquare, gen_q, gen_q2, std::move(fq), std::move(fq2)};
    return ctx;
}

FqElem root_of_unity_fq(const FieldCtx& ctx, std::uint64_t order) {
    if (order == 0 || (ctx.q - 1) % order != 0)
        throw std::invalid_argument("root_of_unity: order must divide q-1");
    return ctx.fq.pow(ctx.gen_q, (ctx.q - 1) / order);
}

Fq2Elem root_of_unity_fq2(const FieldCtx& ctx, std::uint64_t order) {
    const std::uint64_t n = ctx.q * ctx.q - 1;
    if (order == 0 || n % order != 0)
        throw std::invalid_argument("root_of_unity: order must divide q^2-1");
    return ctx.fq2.pow(ctx.gen_q2, n / order);
}

}  // namespace cyclofactor
