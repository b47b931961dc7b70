#pragma once

#include <cstdint>

#include "cyclofactor/field.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor {

/// The n-th cyclotomic polynomial reduced into F_q[x], degree phi(n),
/// computed by the Moebius product of (x^(n/k) - 1)^mu(k) with exact
/// division of the mu = -1 part. Requires gcd(n, q) = 1.
Poly<Fq> cyclotomic_poly(const Fq& fq, std::uint64_t n);

struct FactorProfile {
    std::uint64_t factor_degree;  // multiplicative order of q mod n
    std::uint64_t factor_count;   // phi(n) / factor_degree
};

/// Degree and count of the irreducible factors of Phi_n over F_q.
FactorProfile factor_profile(const Fq& fq, std::uint64_t n);

/// Verifies the standard cyclotomic identities by explicit construction:
///   (i)   Phi_2n(x) = Phi_n(-x)            for odd n >= 3,
///   (ii)  Phi_{n p^k}(x) = Phi_{np}(x^(p^(k-1))),
///   (iii) Phi_{np}(x) = Phi_n(x^p)         when p | n,
///   (iv)  Phi_{np}(x) = Phi_n(x^p)/Phi_n(x) when p does not divide n,
/// for an odd prime p with gcd(2p, q) = 1. Returns true when every
/// applicable identity holds. Test-support operation.
bool cyclotomic_identities_check(const Fq& fq, std::uint64_t n, std::uint64_t p, std::uint64_t k);

}  // namespace cyclofactor
