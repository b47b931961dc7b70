#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclofactor/poly.hpp"

// Generic factorization machinery used to validate the closed-form output:
// squarefree split via gcd(f, f'), distinct-degree via iterated Frobenius,
// equal-degree by seeded Cantor-Zassenhaus splitting. Nothing in here knows
// about the explicit construction; independence is the point.

namespace cyclofactor {

namespace detail {

/// x^(order^j) mod f computed by one more round of raising to the field order.
template <class F>
Poly<F> frobenius_step(const F& k, const Poly<F>& h, const Poly<F>& f) {
    return poly_powmod(k, h, k.order(), f);
}

/// p-th root of a coefficient: a^(q/p), inverse of the Frobenius x -> x^p.
inline FqElem coeff_pth_root(const Fq& k, FqElem a) {
    std::uint64_t exp = 1;
    for (std::uint64_t i = 1; i < k.ext_degree(); ++i) exp *= k.characteristic();
    return k.pow(a, exp);
}

inline Fq2Elem coeff_pth_root(const Fq2& k, Fq2Elem a) {
    std::uint64_t p = k.base().characteristic();
    std::uint64_t exp = 1;
    for (std::uint64_t i = 1; i < 2 * k.base().ext_degree(); ++i) exp *= p;
    return k.pow(a, exp);
}

}  // namespace detail

/// Rabin criterion with early exit: f (deg n) is irreducible iff
/// x^(q^n) = x mod f and no x^(q^j) - x shares a factor with f for j <= n/2.
template <class F>
bool is_irreducible(const F& k, const Poly<F>& f) {
    const std::int64_t n = f.degree();
    if (n < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
    if (n == 1) return true;
    const Poly<F> g = poly_make_monic(k, f);
    const Poly<F> x = poly_x(k);
    Poly<F> h = x;
    for (std::int64_t j = 1; j <= n; ++j) {
        h = detail::frobenius_step(k, h, g);
        if (2 * j <= n) {
            if (poly_gcd(k, poly_sub(k, h, x), g).degree() > 0) return false;
        }
    }
    return h == poly_divrem(k, x, g).second;
}

namespace detail {

/// Squarefree decomposition in odd characteristic, including the f' = 0 case
/// where f = u(x^p).
template <class F>
std::vector<std::pair<Poly<F>, std::uint64_t>> squarefree_decompose(const F& k, Poly<F> f,
                                                                    std::uint64_t outer_mult) {
    std::vector<std::pair<Poly<F>, std::uint64_t>> out;
    const std::uint64_t p = [&] {
        if constexpr (std::is_same_v<F, Fq>) return k.characteristic();
        else return k.base().characteristic();
    }();
    Poly<F> fp = poly_derivative(k, f);
    if (fp.is_zero()) {
        // f = u(x^p): take the p-th root coefficientwise.
        Poly<F> u;
        u.c.resize((f.c.size() - 1) / p + 1);
        for (std::size_t i = 0; i < u.c.size(); ++i) u.c[i] = coeff_pth_root(k, f.c[i * p]);
        return squarefree_decompose(k, std::move(u), outer_mult * p);
    }
    Poly<F> c = poly_gcd(k, f, fp);
    Poly<F> w = poly_divexact(k, f, c);
    std::uint64_t i = 1;
    while (w.degree() > 0) {
        Poly<F> y = poly_gcd(k, w, c);
        Poly<F> z = poly_divexact(k, w, y);
        if (z.degree() > 0) out.emplace_back(std::move(z), i * outer_mult);
        ++i;
        w = std::move(y);
        c = poly_divexact(k, c, w);
    }
    if (c.degree() > 0) {
        // The residue is a p-th power, so its derivative vanishes and the
        // recursion takes the p-th root (and applies the factor p) on entry.
        auto deeper = squarefree_decompose(k, std::move(c), outer_mult);
        out.insert(out.end(), deeper.begin(), deeper.end());
    }
    return out;
}

/// Distinct-degree split of a squarefree monic g: list of (product, degree).
/// Steps are batched: one gcd per block of accumulated (x^(q^i) - x) values,
/// resolved stepwise only when the block actually contains factors.
template <class F>
std::vector<std::pair<Poly<F>, std::int64_t>> distinct_degree(const F& k, Poly<F> g) {
    constexpr int kBlock = 16;
    std::vector<std::pair<Poly<F>, std::int64_t>> out;
    const Poly<F> x = poly_x(k);
    Poly<F> h = poly_divrem(k, x, g).second;
    std::int64_t i = 0;
    std::vector<Poly<F>> block;
    block.reserve(kBlock);
    while (g.degree() >= 2 * (i + 1)) {
        block.clear();
        Poly<F> acc = poly_one(k);
        while (block.size() < kBlock &&
               g.degree() >= 2 * (i + static_cast<std::int64_t>(block.size()) + 1)) {
            h = frobenius_step(k, h, g);
            block.push_back(h);
            acc = poly_divrem(k, poly_mul(k, acc, poly_sub(k, h, x)), g).second;
        }
        if (block.empty()) break;
        if (poly_gcd(k, acc, g).degree() > 0) {
            for (std::size_t t = 0; t < block.size(); ++t) {
                Poly<F> gi = poly_gcd(k, poly_sub(k, block[t], x), g);
                if (gi.degree() > 0) {
                    out.emplace_back(gi, i + static_cast<std::int64_t>(t) + 1);
                    g = poly_divexact(k, g, gi);
                }
            }
            h = poly_divrem(k, h, g).second;
        }
        i += static_cast<std::int64_t>(block.size());
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

template <class F>
Poly<F> random_poly_below(const F& k, std::int64_t deg_bound, std::mt19937_64& rng) {
    Poly<F> h;
    h.c.resize(static_cast<std::size_t>(deg_bound));
    for (auto& e : h.c) e = k.from_uint(rng() % k.order());
    h.trim();
    return h;
}

/// Cantor-Zassenhaus equal-degree splitting: u is a squarefree monic product
/// of irreducibles all of degree d. The splitting exponent (order^d - 1)/2 is
/// taken as norm(h)^((order-1)/2), which avoids big-integer exponents.
template <class F>
void equal_degree(const F& k, Poly<F> u, std::int64_t d, std::mt19937_64& rng,
                  std::vector<Poly<F>>& out) {
    if (u.degree() == d) {
        out.push_back(std::move(u));
        return;
    }
    const Poly<F> one = poly_one(k);
    for (;;) {
        Poly<F> h = random_poly_below(k, u.degree(), rng);
        if (h.degree() < 1) continue;
        Poly<F> g = poly_gcd(k, h, u);
        if (g.degree() == 0) {
            Poly<F> t = h;
            Poly<F> acc = h;
            for (std::int64_t j = 1; j < d; ++j) {
                t = frobenius_step(k, t, u);
                acc = poly_divrem(k, poly_mul(k, acc, t), u).second;
            }
            Poly<F> w = poly_powmod(k, acc, (k.order() - 1) / 2, u);
            g = poly_gcd(k, poly_sub(k, w, one), u);
        }
        if (g.degree() > 0 && g.degree() < u.degree()) {
            equal_degree(k, poly_divexact(k, u, g), d, rng, out);
            equal_degree(k, std::move(g), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Complete monic irreducible factorization, deterministic for a given seed.
/// A nonzero constant input factors into nothing. The unit (leading
/// coefficient) is dropped; the returned factors are monic.
template <class F>
FactorList<F> full_factor(const F& k, const Poly<F>& f, std::uint64_t seed = 0) {
    if (f.is_zero()) throw std::invalid_argument("full_factor: zero polynomial");
    FactorList<F> out;
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Poly<F> g = poly_make_monic(k, f);
    for (auto& [part, mult] : detail::squarefree_decompose(k, std::move(g), 1)) {
        for (auto& [prod, deg] : detail::distinct_degree(k, std::move(part))) {
            std::vector<Poly<F>> irred;
            detail::equal_degree(k, std::move(prod), deg, rng, irred);
            for (auto& h : irred) out.push(std::move(h), mult, "oracle");
        }
    }
    canonical_sort(out);
    return out;
}

}  // namespace cyclofactor
