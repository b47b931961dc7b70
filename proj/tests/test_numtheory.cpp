#include <doctest.h>

#include <stdexcept>

#include "cyclofactor/numtheory.hpp"

using namespace cyclofactor;

TEST_SUITE_BEGIN("numtheory");

TEST_CASE("primality by trial division") {
    CHECK(is_prime(2));
    CHECK(is_prime(29));
    CHECK(is_prime(59));
    CHECK(is_prime(2147483647));  // 2^31 - 1
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(15));
    CHECK_FALSE(is_prime(29 * 59));
}

TEST_CASE("2-adic valuation") {
    CHECK(v2(28) == 2);   // s for q = 29
    CHECK(v2(840) == 3);  // m for q = 29: v2(29^2 - 1)
    CHECK(v2(58) == 1);
    CHECK(v2(3480) == 3);  // v2(59^2 - 1)
    CHECK(v2(1) == 0);
    CHECK_THROWS_AS(v2(0), std::invalid_argument);
}

TEST_CASE("divisor and prime factor enumeration") {
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(prime_factors(60) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(prime_factors(1).empty());
    CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
}

TEST_CASE("euler phi and moebius") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(40) == 16);
    CHECK(euler_phi(15) == 8);
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(moebius(12) == 0);

    // phi(n) = sum over divisors of moebius-weighted n/k
    for (std::uint64_t n = 1; n <= 200; ++n) {
        std::int64_t acc = 0;
        for (std::uint64_t k : divisors(n)) acc += moebius(k) * static_cast<std::int64_t>(n / k);
        CHECK(acc == static_cast<std::int64_t>(euler_phi(n)));
    }
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(29, 40) == 2);  // factor degree of Phi_40 over F_29
    CHECK(multiplicative_order(5, 12) == 2);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(7, 1) == 1);
    CHECK_THROWS_AS(multiplicative_order(6, 9), std::invalid_argument);

    // order divides phi(n), and a^order = 1
    for (std::uint64_t n = 2; n <= 60; ++n) {
        for (std::uint64_t a = 1; a < n; ++a) {
            if (gcd_u64(a, n) != 1) continue;
            const std::uint64_t ord = multiplicative_order(a, n);
            CHECK(euler_phi(n) % ord == 0);
            CHECK(powmod_u64(a, ord, n) == 1 % n);
        }
    }
}

TEST_CASE("checked power overflow") {
    CHECK(checked_pow_u64(3, 19) == 1162261467);
    CHECK_THROWS_AS(checked_pow_u64(2, 64), std::overflow_error);
}

TEST_SUITE_END();
