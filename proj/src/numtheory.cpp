#include "cyclofactor/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclofactor {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0) return false;
    }
    return true;
}

unsigned v2(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("v2: argument must be positive");
    unsigned k = 0;
    while ((n & 1) == 0) {
        ++k;
        n >>= 1;
    }
    return k;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 1; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            if (f != n / f) out.push_back(n / f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p : prime_factors(n)) result -= result / p;
    return result;
}

int moebius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("moebius: argument must be positive");
    int parity = 1;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0) return 0;
            parity = -parity;
        }
    }
    if (n > 1) parity = -parity;
    return parity;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    if (gcd_u64(a % n, n) != 1) throw std::invalid_argument("multiplicative_order: arguments must be coprime");
    if (n == 1) return 1;
    std::uint64_t order = euler_phi(n);
    for (std::uint64_t p : prime_factors(order)) {
        while (order % p == 0 && powmod_u64(a, order / p, n) == 1) order /= p;
    }
    return order;
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    const std::uint64_t limit = std::uint64_t{1} << 63;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (limit - 1) / base)
            throw std::overflow_error("checked_pow_u64: result exceeds 63-bit range");
        r *= base;
    }
    return r;
}

}  // namespace cyclofactor
