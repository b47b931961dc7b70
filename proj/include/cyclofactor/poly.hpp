#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclofactor/field.hpp"

// Dense univariate polynomials over a field F (Fq or Fq2), ascending
// coefficients, no trailing zeros. The zero polynomial is the empty vector.
// Operations are free functions taking the owning field; distinct coefficient
// fields are distinct types, so mixed-field arithmetic cannot compile.

namespace cyclofactor {

template <class F>
struct Poly {
    using Elem = typename F::Elem;
    std::vector<Elem> c;

    bool is_zero() const { return c.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(c.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : Elem{}; }

    void trim() {
        while (!c.empty() && c.back() == Elem{}) c.pop_back();
    }

    friend bool operator==(const Poly& x, const Poly& y) = default;
    friend auto operator<=>(const Poly& x, const Poly& y) {
        if (auto cmp = x.c.size() <=> y.c.size(); cmp != 0) return cmp;
        for (std::size_t i = x.c.size(); i-- > 0;) {
            if (auto cmp = x.c[i] <=> y.c[i]; cmp != 0) return cmp;
        }
        return std::strong_ordering::equal;
    }
};

template <class F>
Poly<F> poly_zero(const F&) {
    return {};
}

template <class F>
Poly<F> poly_constant(const F&, typename F::Elem e) {
    Poly<F> r;
    if (!(e == typename F::Elem{})) r.c.push_back(e);
    return r;
}

template <class F>
Poly<F> poly_one(const F& k) {
    return poly_constant(k, k.one());
}

template <class F>
Poly<F> poly_x(const F& k) {
    return {{typename F::Elem{}, k.one()}};
}

/// Convenience constructor from small integers (reduced through the prime
/// subfield), ascending coefficients.
template <class F>
Poly<F> poly_from_ints(const F& k, std::initializer_list<std::int64_t> coeffs) {
    Poly<F> r;
    r.c.reserve(coeffs.size());
    for (auto v : coeffs) r.c.push_back(k.from_int(v));
    r.trim();
    return r;
}

/// x^n + c as a dense vector (n >= 1).
template <class F>
Poly<F> poly_binomial(const F& k, std::size_t n, typename F::Elem c) {
    Poly<F> r;
    r.c.assign(n + 1, typename F::Elem{});
    r.c[0] = c;
    r.c[n] = k.one();
    return r;
}

/// x^hi + c_mid x^mid + c0 (hi > mid > 0).
template <class F>
Poly<F> poly_trinomial(const F& k, std::size_t hi, std::size_t mid, typename F::Elem c_mid,
                       typename F::Elem c0) {
    Poly<F> r;
    r.c.assign(hi + 1, typename F::Elem{});
    r.c[0] = c0;
    r.c[mid] = c_mid;
    r.c[hi] = k.one();
    return r;
}

template <class F>
Poly<F> poly_add(const F& k, const Poly<F>& x, const Poly<F>& y) {
    Poly<F> r = x;
    if (r.c.size() < y.c.size()) r.c.resize(y.c.size());
    for (std::size_t i = 0; i < y.c.size(); ++i) r.c[i] = k.add(r.c[i], y.c[i]);
    r.trim();
    return r;
}

template <class F>
Poly<F> poly_sub(const F& k, const Poly<F>& x, const Poly<F>& y) {
    Poly<F> r = x;
    if (r.c.size() < y.c.size()) r.c.resize(y.c.size());
    for (std::size_t i = 0; i < y.c.size(); ++i) r.c[i] = k.sub(r.c[i], y.c[i]);
    r.trim();
    return r;
}

template <class F>
Poly<F> poly_neg(const F& k, const Poly<F>& x) {
    Poly<F> r = x;
    for (auto& e : r.c) e = k.neg(e);
    return r;
}

template <class F>
Poly<F> poly_scale(const F& k, const Poly<F>& x, typename F::Elem s) {
    Poly<F> r = x;
    for (auto& e : r.c) e = k.mul(e, s);
    r.trim();
    return r;
}

namespace detail {

template <class F>
Poly<F> poly_mul_generic(const F& k, const Poly<F>& x, const Poly<F>& y) {
    if (x.is_zero() || y.is_zero()) return {};
    Poly<F> r;
    r.c.assign(x.c.size() + y.c.size() - 1, typename F::Elem{});
    for (std::size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i] == typename F::Elem{}) continue;
        for (std::size_t j = 0; j < y.c.size(); ++j) {
            r.c[i + j] = k.add(r.c[i + j], k.mul(x.c[i], y.c[j]));
        }
    }
    r.trim();
    return r;
}

// Schoolbook over a prime field, coefficients as raw residues. With p below
// 2^21 the row products are accumulated unreduced (they fit: 2^42 per term,
// at most 2^21 terms); otherwise each row is reduced on the fly.
Poly<Fq> poly_mul_prime(const Fq& k, const Poly<Fq>& x, const Poly<Fq>& y);
Poly<Fq> poly_sqr_prime(const Fq& k, const Poly<Fq>& x);
void poly_divrem_prime(const Fq& k, std::vector<FqElem>& rem, const Poly<Fq>& divisor,
                       Poly<Fq>& quot);

}  // namespace detail

template <class F>
Poly<F> poly_mul(const F& k, const Poly<F>& x, const Poly<F>& y) {
    return detail::poly_mul_generic(k, x, y);
}

template <>
inline Poly<Fq> poly_mul<Fq>(const Fq& k, const Poly<Fq>& x, const Poly<Fq>& y) {
    if (k.ext_degree() == 1 && !x.is_zero() && !y.is_zero()) return detail::poly_mul_prime(k, x, y);
    return detail::poly_mul_generic(k, x, y);
}

template <class F>
Poly<F> poly_sqr(const F& k, const Poly<F>& x) {
    return poly_mul(k, x, x);
}

template <>
inline Poly<Fq> poly_sqr<Fq>(const Fq& k, const Poly<Fq>& x) {
    if (k.ext_degree() == 1 && !x.is_zero()) return detail::poly_sqr_prime(k, x);
    return detail::poly_mul_generic(k, x, x);
}

/// (quotient, remainder) with deg rem < deg divisor. Divisor must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divrem(const F& k, const Poly<F>& x, const Poly<F>& y) {
    if (y.is_zero()) throw std::invalid_argument("poly_divrem: division by zero polynomial");
    if (x.c.size() < y.c.size()) return {Poly<F>{}, x};
    Poly<F> quot;
    quot.c.assign(x.c.size() - y.c.size() + 1, typename F::Elem{});
    if constexpr (std::is_same_v<F, Fq>) {
        if (k.ext_degree() == 1) {
            std::vector<FqElem> rem = x.c;
            detail::poly_divrem_prime(k, rem, y, quot);
            Poly<F> r{std::move(rem)};
            r.trim();
            quot.trim();
            return {std::move(quot), std::move(r)};
        }
    }
    Poly<F> rem = x;
    const auto lead_inv = k.inv(y.c.back());
    const std::size_t dy = y.c.size() - 1;
    for (std::size_t i = rem.c.size(); i-- > dy;) {
        const auto t = k.mul(rem.c[i], lead_inv);
        if (t == typename F::Elem{}) continue;
        quot.c[i - dy] = t;
        for (std::size_t j = 0; j <= dy; ++j) {
            rem.c[i - dy + j] = k.sub(rem.c[i - dy + j], k.mul(t, y.c[j]));
        }
    }
    rem.trim();
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

/// Exact division; throws std::logic_error on a nonzero remainder.
template <class F>
Poly<F> poly_divexact(const F& k, const Poly<F>& x, const Poly<F>& y) {
    auto [q, r] = poly_divrem(k, x, y);
    if (!r.is_zero()) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

template <class F>
Poly<F> poly_make_monic(const F& k, Poly<F> x) {
    if (x.is_zero()) return x;
    if (x.c.back() == k.one()) return x;
    return poly_scale(k, x, k.inv(x.c.back()));
}

/// Monic gcd.
template <class F>
Poly<F> poly_gcd(const F& k, Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divrem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(k, std::move(a));
}

template <class F>
typename F::Elem poly_eval(const F& k, const Poly<F>& f, typename F::Elem x) {
    typename F::Elem acc{};
    for (std::size_t i = f.c.size(); i-- > 0;) acc = k.add(k.mul(acc, x), f.c[i]);
    return acc;
}

template <class F>
Poly<F> poly_derivative(const F& k, const Poly<F>& f) {
    if (f.c.size() < 2) return {};
    Poly<F> r;
    r.c.resize(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i) {
        r.c[i - 1] = k.mul(f.c[i], k.from_int(static_cast<std::int64_t>(i)));
    }
    r.trim();
    return r;
}

/// f(x^t): coefficient i lands at index i*t (t >= 1).
template <class F>
Poly<F> substitute_power(const F&, const Poly<F>& f, std::uint64_t t) {
    if (t == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
    if (f.is_zero() || t == 1) return f;
    Poly<F> r;
    r.c.assign((f.c.size() - 1) * t + 1, typename F::Elem{});
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i * t] = f.c[i];
    return r;
}

/// f(-x).
template <class F>
Poly<F> substitute_neg(const F& k, const Poly<F>& f) {
    Poly<F> r = f;
    for (std::size_t i = 1; i < r.c.size(); i += 2) r.c[i] = k.neg(r.c[i]);
    return r;
}

/// base^exp mod modulus by square and multiply. Modulus degree must be >= 1.
template <class F>
Poly<F> poly_powmod(const F& k, Poly<F> base, std::uint64_t exp, const Poly<F>& modulus) {
    if (modulus.degree() < 1) throw std::invalid_argument("poly_powmod: modulus degree must be >= 1");
    base = poly_divrem(k, base, modulus).second;
    Poly<F> r = poly_divrem(k, poly_one(k), modulus).second;
    while (exp) {
        if (exp & 1) r = poly_divrem(k, poly_mul(k, r, base), modulus).second;
        exp >>= 1;
        if (exp) base = poly_divrem(k, poly_sqr(k, base), modulus).second;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Factor lists

template <class F>
struct FactorEntry {
    Poly<F> factor;
    std::uint64_t multiplicity = 1;
    std::string provenance;
};

/// Multiset of monic factors with multiplicities and provenance labels.
template <class F>
struct FactorList {
    std::vector<FactorEntry<F>> entries;

    void push(Poly<F> f, std::uint64_t mult, std::string prov) {
        entries.push_back({std::move(f), mult, std::move(prov)});
    }
    std::uint64_t total_count() const {
        std::uint64_t n = 0;
        for (const auto& e : entries) n += e.multiplicity;
        return n;
    }
    std::size_t size() const { return entries.size(); }
};

template <class F>
Poly<F> product(const F& k, const FactorList<F>& fl) {
    Poly<F> r = poly_one(k);
    for (const auto& e : fl.entries) {
        for (std::uint64_t i = 0; i < e.multiplicity; ++i) r = poly_mul(k, r, e.factor);
    }
    return r;
}

/// Sort by (degree, coefficients); provenance is not part of the order.
template <class F>
void canonical_sort(FactorList<F>& fl) {
    std::sort(fl.entries.begin(), fl.entries.end(),
              [](const FactorEntry<F>& x, const FactorEntry<F>& y) {
                  if (x.factor != y.factor) return x.factor < y.factor;
                  return x.multiplicity < y.multiplicity;
              });
}

/// Multiset equality on (monic polynomial, multiplicity), ignoring order and
/// provenance.
template <class F>
bool compare_factorizations(const F&, FactorList<F> a, FactorList<F> b) {
    canonical_sort(a);
    canonical_sort(b);
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i].factor != b.entries[i].factor) return false;
        if (a.entries[i].multiplicity != b.entries[i].multiplicity) return false;
    }
    return true;
}

/// True when all entries are pairwise distinct as polynomials.
template <class F>
bool all_distinct(FactorList<F> fl) {
    canonical_sort(fl);
    for (std::size_t i = 1; i < fl.entries.size(); ++i) {
        if (fl.entries[i].factor == fl.entries[i - 1].factor) return false;
    }
    return true;
}

/// x^n - 1.
template <class F>
Poly<F> poly_xn_minus_1(const F& k, std::size_t n) {
    return poly_binomial(k, n, k.neg(k.one()));
}

}  // namespace cyclofactor
