#include <doctest.h>

#include <stdexcept>

#include "cyclofactor/cyclotomic.hpp"
#include "cyclofactor/field.hpp"
#include "cyclofactor/numtheory.hpp"
#include "cyclofactor/oracle.hpp"

using namespace cyclofactor;

TEST_SUITE_BEGIN("cyclotomic");

TEST_CASE("small cyclotomic polynomials") {
    const FieldCtx ctx = make_field_ctx(29);
    const Fq& k = ctx.fq;
    CHECK(cyclotomic_poly(k, 1) == poly_from_ints(k, {-1, 1}));
    CHECK(cyclotomic_poly(k, 2) == poly_from_ints(k, {1, 1}));
    CHECK(cyclotomic_poly(k, 8) == poly_from_ints(k, {1, 0, 0, 0, 1}));
    CHECK(cyclotomic_poly(k, 6) == poly_from_ints(k, {1, -1, 1}));
    CHECK_THROWS_AS(cyclotomic_poly(k, 58), std::invalid_argument);  // 29 | 58
}

TEST_CASE("Phi_40 over F_29 equals Phi_8(x^5)/Phi_8(x)") {
    const FieldCtx ctx = make_field_ctx(29);
    const Fq& k = ctx.fq;
    const Poly<Fq> phi8 = cyclotomic_poly(k, 8);
    const Poly<Fq> phi40 = cyclotomic_poly(k, 40);
    CHECK(phi40.degree() == 16);
    CHECK(phi40 == poly_divexact(k, substitute_power(k, phi8, 5), phi8));
}

TEST_CASE("degree equals phi(n) and divisor product recovers x^n - 1") {
    for (std::uint64_t p : {29ull, 5ull}) {
        const FieldCtx ctx = make_field_ctx(p);
        const Fq& k = ctx.fq;
        for (std::uint64_t n = 1; n <= 200; ++n) {
            if (gcd_u64(n, p) != 1) continue;
            Poly<Fq> prod = poly_one(k);
            for (std::uint64_t dv : divisors(n)) {
                const Poly<Fq> phi = cyclotomic_poly(k, dv);
                CHECK(phi.degree() == static_cast<std::int64_t>(euler_phi(dv)));
                prod = poly_mul(k, prod, phi);
            }
            CHECK(prod == poly_xn_minus_1(k, n));
        }
    }
}

TEST_CASE("Moebius construction equals iterative division") {
    const FieldCtx ctx = make_field_ctx(29);
    const Fq& k = ctx.fq;
    for (std::uint64_t n = 1; n <= 60; ++n) {
        if (gcd_u64(n, ctx.q) != 1) continue;
        Poly<Fq> iter = poly_xn_minus_1(k, n);
        for (std::uint64_t dv : divisors(n)) {
            if (dv != n) iter = poly_divexact(k, iter, cyclotomic_poly(k, dv));
        }
        CHECK(iter == cyclotomic_poly(k, n));
    }
}

TEST_CASE("factor profile") {
    const FieldCtx c29 = make_field_ctx(29);
    const FactorProfile pr = factor_profile(c29.fq, 40);
    CHECK(pr.factor_degree == 2);
    CHECK(pr.factor_count == 8);
    CHECK(factor_profile(c29.fq, 1).factor_degree == 1);
    CHECK(factor_profile(c29.fq, 1).factor_count == 1);

    const FieldCtx c5 = make_field_ctx(5);
    const FactorProfile pr5 = factor_profile(c5.fq, 12);
    CHECK(pr5.factor_degree == 2);
    CHECK(pr5.factor_count == 2);
    // cross-check by the oracle: Phi_12 over F_5 splits into 2 quadratics
    const FactorList<Fq> fl = full_factor(c5.fq, cyclotomic_poly(c5.fq, 12), 1);
    CHECK(fl.size() == 2);
    for (const auto& e : fl.entries) CHECK(e.factor.degree() == 2);
}

TEST_CASE("identity checker over F_29") {
    const FieldCtx ctx = make_field_ctx(29);
    const Fq& k = ctx.fq;
    CHECK(cyclotomic_identities_check(k, 5, 5, 2));   // covers (i),(ii),(iii)
    CHECK(cyclotomic_identities_check(k, 8, 5, 1));   // covers (ii),(iv)
    CHECK(cyclotomic_identities_check(k, 3, 7, 2));
    CHECK(cyclotomic_identities_check(k, 15, 3, 1));
    CHECK_THROWS_AS(cyclotomic_identities_check(k, 5, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_identities_check(k, 5, 29, 1), std::invalid_argument);
}

TEST_SUITE_END();
