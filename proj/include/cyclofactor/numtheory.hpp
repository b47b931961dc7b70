#pragma once

#include <cstdint>
#include <vector>

// Small-integer number theory helpers. Everything here works on 64-bit
// values and is sized for desk-scale inputs (trial division throughout).

namespace cyclofactor {

bool is_prime(std::uint64_t n);

/// Largest k with 2^k | n (n > 0).
unsigned v2(std::uint64_t n);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Moebius function: +1/-1 on squarefree n by parity of prime count, 0 otherwise.
int moebius(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1, n >= 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// a*b mod m without overflow for m < 2^63.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// base^exp as a plain integer; throws std::overflow_error past 2^63.
std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t exp);

}  // namespace cyclofactor
