#include "cyclofactor/cyclotomic.hpp"

#include <stdexcept>

#include "cyclofactor/numtheory.hpp"

namespace cyclofactor {

Poly<Fq> cyclotomic_poly(const Fq& fq, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    if (gcd_u64(n, fq.order()) != 1)
        throw std::invalid_argument("cyclotomic_poly: n must be coprime to q");
    Poly<Fq> num = poly_one(fq);
    Poly<Fq> den = poly_one(fq);
    for (std::uint64_t k : divisors(n)) {
        const int mu = moebius(k);
        if (mu == 0) continue;
        const Poly<Fq> term = poly_xn_minus_1(fq, n / k);
        if (mu > 0) num = poly_mul(fq, num, term);
        else den = poly_mul(fq, den, term);
    }
    auto [quot, rem] = poly_divrem(fq, num, den);
    if (!rem.is_zero()) throw std::logic_error("cyclotomic_poly: Moebius division left a remainder");
    if (quot.degree() != static_cast<std::int64_t>(euler_phi(n)))
        throw std::logic_error("cyclotomic_poly: degree disagrees with phi(n)");
    return quot;
}

FactorProfile factor_profile(const Fq& fq, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor_profile: n must be positive");
    if (gcd_u64(n, fq.order()) != 1)
        throw std::invalid_argument("factor_profile: n must be coprime to q");
    const std::uint64_t e = multiplicative_order(fq.order(), n);
    return {e, euler_phi(n) / e};
}

bool cyclotomic_identities_check(const Fq& fq, std::uint64_t n, std::uint64_t p, std::uint64_t k) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("cyclotomic_identities_check: p must be an odd prime");
    if (gcd_u64(2 * p, fq.order()) != 1)
        throw std::invalid_argument("cyclotomic_identities_check: gcd(2p, q) must be 1");
    if (n == 0 || k == 0)
        throw std::invalid_argument("cyclotomic_identities_check: n and k must be positive");

    // (i) Phi_2n(x) = Phi_n(-x) for odd n >= 3
    if (n >= 3 && n % 2 == 1) {
        if (cyclotomic_poly(fq, 2 * n) != substitute_neg(fq, cyclotomic_poly(fq, n))) return false;
    }
    // (ii) Phi_{n p^k}(x) = Phi_{np}(x^(p^(k-1)))
    {
        const std::uint64_t pk = checked_pow_u64(p, k);
        const Poly<Fq> lhs = cyclotomic_poly(fq, n * pk);
        const Poly<Fq> rhs = substitute_power(fq, cyclotomic_poly(fq, n * p), pk / p);
        if (lhs != rhs) return false;
    }
    const Poly<Fq> phi_n_xp = substitute_power(fq, cyclotomic_poly(fq, n), p);
    if (n % p == 0) {
        // (iii)
        if (cyclotomic_poly(fq, n * p) != phi_n_xp) return false;
    } else {
        // (iv)
        if (cyclotomic_poly(fq, n * p) != poly_divexact(fq, phi_n_xp, cyclotomic_poly(fq, n)))
            return false;
    }
    return true;
}

}  // namespace cyclofactor
