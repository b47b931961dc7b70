// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria carry wall-clock budgets which are enforced here.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cyclofactor/cyclotomic.hpp"
#include "cyclofactor/factorizer.hpp"
#include "cyclofactor/field.hpp"
#include "cyclofactor/numtheory.hpp"
#include "cyclofactor/oracle.hpp"
#include "cyclofactor/sequences.hpp"

using namespace cyclofactor;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds, double budget) {
    const bool in_budget = seconds < budget;
    if (!ok || !in_budget) ++failures;
    std::cout << (ok && in_budget ? "PASS" : "FAIL") << "  criterion " << number << ": " << name
              << "  [" << seconds << "s / budget " << budget << "s]";
    if (!ok) std::cout << "  (check failed)";
    if (!in_budget) std::cout << "  (over budget)";
    std::cout << std::endl;
}

template <class Fn>
void criterion(int number, const std::string& name, double budget, Fn&& fn) {
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& err) {
        std::cout << "  exception: " << err.what() << std::endl;
        ok = false;
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report(number, name, ok, seconds, budget);
}

std::set<Poly<Fq>> factor_set(const FactorList<Fq>& fl) {
    std::set<Poly<Fq>> out;
    for (const auto& e : fl.entries) out.insert(e.factor);
    return out;
}

std::set<Poly<Fq>> polys(const Fq& k, const std::vector<std::vector<std::int64_t>>& cs) {
    std::set<Poly<Fq>> out;
    for (const auto& c : cs) {
        Poly<Fq> f;
        for (auto v : c) f.c.push_back(k.from_int(v));
        out.insert(f);
    }
    return out;
}

std::vector<std::uint64_t> odd_primes_upto(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 3; p <= bound; p += 2) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

std::vector<std::uint64_t> odd_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : divisors(n)) {
        if (d % 2 == 1) out.push_back(d);
    }
    return out;
}

// 1. Phi_8(x^5) over F_29 factors into the ten listed polynomials; the
//    eight trinomials among them multiply to Phi_40.
bool criterion_example_phi8x5() {
    const FieldCtx ctx = make_field_ctx(29);
    const Fq& k = ctx.fq;
    const DeltaThetaTable t5 = build_delta_theta(ctx, 5);
    const FactorList<Fq> fl = factor_phi2k_xd_q1_high(ctx, t5, 1);
    bool ok = fl.size() == 10;
    ok = ok && factor_set(fl) == polys(k, {{12, 0, 1},
                                           {17, 0, 1},
                                           {17, 6, 1},
                                           {17, -6, 1},
                                           {17, 7, 1},
                                           {17, -7, 1},
                                           {12, 14, 1},
                                           {12, -14, 1},
                                           {12, 3, 1},
                                           {12, -3, 1}});
    FactorList<Fq> trinomials;
    for (const auto& e : fl.entries) {
        if (!(e.factor.coeff(1) == k.zero())) trinomials.entries.push_back(e);
    }
    ok = ok && trinomials.size() == 8;
    ok = ok && product(k, trinomials) == cyclotomic_poly(k, 40);
    return ok;
}

// 2. q=29, d=15: delta recursion table; x^120 - 1 fully verified with 62
//    factors.
bool criterion_example_q29() {
    const FieldCtx ctx = make_field_ctx(29);
    // gamma = 2 + sqrt(3) expressed in the context basis
    Fq2Elem gamma{};
    bool found = false;
    for (std::uint64_t u = 0; u < ctx.q && !found; ++u) {
        const FqElem c = ctx.fq.from_uint(u);
        if (ctx.fq.mul(ctx.fq.mul(c, c), ctx.nonsquare) == ctx.fq.from_int(3)) {
            gamma = ctx.fq2.make(ctx.fq.from_int(2), c);
            found = true;
        }
    }
    if (!found) return false;
    const DeltaThetaTable t = build_delta_theta(ctx, 15, gamma);
    const std::uint64_t want[8] = {2, 4, 14, 23, 20, 28, 5, 21};
    for (int j = 0; j < 8; ++j) {
        if (t.delta[j].v != want[j]) return false;
    }

    FactorOptions opts;
    opts.verify = true;
    const FactorizationReport r = factor_x2nd_minus_1(ctx, 3, 15, opts);
    const std::uint64_t expected =
        (std::uint64_t{1} << (ctx.s - 1)) * ((3 - ctx.s + 1) * 15 + 1);  // 2 * 31 = 62
    return expected == 62 && r.factors.total_count() == 62 && r.predicted_count == 62 &&
           r.checks.all_passed() && r.checks.product_ok == true &&
           r.checks.all_irreducible == true && r.checks.oracle_match == true;
}

// 3. q=59, d=15, n=4: Delta set and the 91-factor factorization of x^240-1.
bool criterion_example_q59() {
    const FieldCtx ctx = make_field_ctx(59);
    const DeltaThetaTable t = build_delta_theta(ctx, 15);
    std::set<FqElem> want;
    for (std::int64_t v : {-10, -20, -26, -15, -1, 25, -13}) want.insert(ctx.fq.from_int(v));
    if (delta_set(ctx, t) != want) return false;

    FactorOptions opts;
    opts.verify = true;
    const FactorizationReport r = factor_x2nd_minus_1(ctx, 4, 15, opts);
    const std::uint64_t expected =
        (std::uint64_t{1} << (ctx.m - 2)) * 15 * (4 - ctx.m + 2) + 1;  // 2*15*3 + 1 = 91
    return expected == 91 && r.factors.total_count() == 91 && r.checks.all_passed() &&
           r.checks.product_ok == true && r.checks.oracle_match == true;
}

// 4. Count-formula sweep over q <= 200, odd d | q+1, 2^n d <= 4096.
bool criterion_count_sweep() {
    bool ok = true;
    std::uint64_t instances = 0;
    for (std::uint64_t q : odd_primes_upto(200)) {
        const FieldCtx ctx = make_field_ctx(q);
        for (std::uint64_t d : odd_divisors(q + 1)) {
            for (std::uint64_t n = 2; (d << n) <= 4096; ++n) {
                const FactorizationReport r = factor_x2nd_minus_1(ctx, n, d);
                const std::uint64_t formula = predicted_factor_count(ctx, n, d);
                if (r.factors.total_count() != formula || r.checks.count_ok != true ||
                    r.checks.product_ok != true) {
                    std::cout << "  count mismatch at q=" << q << " n=" << n << " d=" << d
                              << std::endl;
                    ok = false;
                }
                ++instances;
            }
        }
    }
    std::cout << "  (" << instances << " instances)" << std::endl;
    return ok && instances > 0;
}

// 5. Oracle equivalence sweep on the same grid restricted to 2^n d <= 1024.
bool criterion_oracle_sweep() {
    bool ok = true;
    std::uint64_t instances = 0;
    for (std::uint64_t q : odd_primes_upto(200)) {
        const FieldCtx ctx = make_field_ctx(q);
        for (std::uint64_t d : odd_divisors(q + 1)) {
            for (std::uint64_t n = 2; (d << n) <= 1024; ++n) {
                const FactorizationReport r = factor_x2nd_minus_1(ctx, n, d);
                const FactorList<Fq> oracle = full_factor(ctx.fq, r.target, q + n + d);
                if (!compare_factorizations(ctx.fq, r.factors, oracle)) {
                    std::cout << "  oracle mismatch at q=" << q << " n=" << n << " d=" << d
                              << std::endl;
                    ok = false;
                }
                ++instances;
            }
        }
    }
    std::cout << "  (" << instances << " instances)" << std::endl;
    return ok && instances > 0;
}

// 6. Lemma invariant suite for 25 randomized (q, d) pairs.
bool criterion_invariants() {
    std::mt19937_64 rng(2024);
    const auto primes = odd_primes_upto(200);
    bool ok = true;
    int done = 0;
    while (done < 25) {
        const std::uint64_t q = primes[rng() % primes.size()];
        const auto ds = odd_divisors(q + 1);
        const std::uint64_t d = ds[rng() % ds.size()];
        const FieldCtx ctx = make_field_ctx(q);
        // recursion vs direct powers is cross-checked inside build_delta_theta
        const DeltaThetaTable t = build_delta_theta(ctx, d);
        const std::uint64_t half = (d - 1) / 2;
        if (d > 1 && delta_set(ctx, t).size() != half) ok = false;
        std::set<std::uint64_t> image;
        for (std::uint64_t j = 1; j <= half; ++j) {
            image.insert(sigma_d(t, j));
            const FqElem lhs = ctx.fq.sub(ctx.fq.mul(t.delta[j], t.delta[j]), ctx.fq.from_int(2));
            const Fq2Elem rhs = ctx.fq2.add(ctx.fq2.mul(t.theta[j], t.theta[j]),
                                            ctx.fq2.from_int(2));
            if (!ctx.fq2.in_base(rhs) || !(rhs.a == lhs)) ok = false;
            if (!(t.delta[sigma_d(t, j)] == lhs)) ok = false;
        }
        if (image.size() != half) ok = false;
        for (std::uint64_t j = 0; j < d; ++j) {
            if (!(ctx.fq2.frobenius(t.theta[j]) == ctx.fq2.neg(t.theta[j]))) ok = false;
            if (!(ctx.fq2.frobenius(ctx.fq2.from_base(t.delta[j])) ==
                  ctx.fq2.from_base(t.delta[j]))) ok = false;
        }
        // embedded coefficients of one factorization are Frobenius-fixed by
        // construction; exercise an n >= 2 instance end to end
        std::uint64_t n = 2;
        while ((d << (n + 1)) <= 512 && (rng() & 1)) ++n;
        const FactorizationReport r = factor_x2nd_minus_1(ctx, n, d);
        if (r.checks.product_ok != true || r.checks.count_ok != true) ok = false;

        // Pi_{k|n} Phi_k = x^n - 1 for every n <= 200 coprime to q
        for (std::uint64_t nn = 1; nn <= 200; ++nn) {
            if (gcd_u64(nn, q) != 1) continue;
            Poly<Fq> prod = poly_one(ctx.fq);
            for (std::uint64_t dv : divisors(nn)) {
                prod = poly_mul(ctx.fq, prod, cyclotomic_poly(ctx.fq, dv));
            }
            if (!(prod == poly_xn_minus_1(ctx.fq, nn))) ok = false;
        }
        ++done;
    }
    return ok;
}

// 7. Negative paths and the irreducibility cross-check against exhaustive
//    trial division.
bool criterion_negative_and_trialdiv() {
    bool ok = true;
    const FieldCtx ctx = make_field_ctx(29);
    auto expect_message = [&ok](auto&& fn, const std::string& want) {
        try {
            fn();
            ok = false;
        } catch (const std::invalid_argument& err) {
            if (std::string(err.what()).find(want) == std::string::npos) {
                std::cout << "  wrong message: got '" << err.what() << "', want '" << want << "'"
                          << std::endl;
                ok = false;
            }
        }
    };
    expect_message([&] { factor_x2nd_minus_1(ctx, 2, 6); }, "d must be odd");
    expect_message([&] { factor_x2nd_minus_1(ctx, 2, 7); }, "d must divide q+1");
    expect_message([&] { build_delta_theta(ctx, 12); }, "d must be odd");
    expect_message([&] { build_delta_theta(ctx, 11); }, "d must divide q+1");
    const FieldCtx c3 = make_field_ctx(3);
    expect_message([&] { factor_x2nd_minus_1(c3, 2, 3); }, "d must divide q+1");  // gcd(d,q)=3

    // is_irreducible vs exhaustive trial division, q <= 9, deg <= 6.
    // Exhaustive polynomial enumeration for the small configurations,
    // seeded-random for the rest; trial division itself is exhaustive.
    const auto check_config = [&ok](const FieldCtx& fctx, std::int64_t deg, bool exhaustive,
                                    int samples) {
        const Fq& k = fctx.fq;
        const std::uint64_t q = k.order();
        std::uint64_t total = 1;
        for (std::int64_t i = 0; i < deg; ++i) total *= q;
        std::mt19937_64 rng(q * 100 + deg);
        const std::uint64_t limit = exhaustive ? total : static_cast<std::uint64_t>(samples);
        for (std::uint64_t t = 0; t < limit; ++t) {
            const std::uint64_t idx = exhaustive ? t : rng() % total;
            Poly<Fq> f;
            f.c.resize(deg + 1);
            std::uint64_t v = idx;
            for (std::int64_t i = 0; i < deg; ++i) {
                f.c[i] = k.from_uint(v % q);
                v /= q;
            }
            f.c[deg] = k.one();
            // trial division by every monic divisor of degree <= deg/2
            bool reducible = false;
            for (std::int64_t dd = 1; 2 * dd <= deg && !reducible; ++dd) {
                std::uint64_t dtotal = 1;
                for (std::int64_t i = 0; i < dd; ++i) dtotal *= q;
                for (std::uint64_t di = 0; di < dtotal && !reducible; ++di) {
                    Poly<Fq> divisor;
                    divisor.c.resize(dd + 1);
                    std::uint64_t u = di;
                    for (std::int64_t i = 0; i < dd; ++i) {
                        divisor.c[i] = k.from_uint(u % q);
                        u /= q;
                    }
                    divisor.c[dd] = k.one();
                    if (poly_divrem(k, f, divisor).second.is_zero()) reducible = true;
                }
            }
            if (is_irreducible(k, f) == reducible) {
                std::cout << "  irreducibility disagreement at q=" << q << " deg=" << deg
                          << " idx=" << idx << std::endl;
                ok = false;
            }
        }
    };
    const FieldCtx f3 = make_field_ctx(3);
    const FieldCtx f5 = make_field_ctx(5);
    const FieldCtx f7 = make_field_ctx(7);
    const FieldCtx f9 = make_field_ctx(3, 2);
    for (std::int64_t deg = 1; deg <= 6; ++deg) {
        check_config(f3, deg, true, 0);
        check_config(f5, deg, deg <= 4, 1500);
        check_config(f7, deg, deg <= 3, 1500);
        check_config(f9, deg, deg <= 2, 1000);
    }
    return ok;
}

}  // namespace

int main() {
    criterion(1, "Phi_8(x^5) over F_29 reproduces the ten listed factors", 1.0,
              criterion_example_phi8x5);
    criterion(2, "q=29 d=15 delta table and verified x^120-1 (62 factors)", 5.0,
              criterion_example_q29);
    criterion(3, "q=59 d=15 n=4 Delta set and verified x^240-1 (91 factors)", 10.0,
              criterion_example_q59);
    criterion(4, "count-formula sweep, q <= 200, 2^n d <= 4096", 300.0, criterion_count_sweep);
    criterion(5, "oracle equivalence sweep, 2^n d <= 1024", 300.0, criterion_oracle_sweep);
    criterion(6, "lemma invariant suite, 25 randomized (q, d) pairs", 120.0, criterion_invariants);
    criterion(7, "negative paths and trial-division agreement", 120.0,
              criterion_negative_and_trialdiv);
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
