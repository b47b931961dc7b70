#pragma once

#include <cstdint>
#include <optional>

#include "cyclofactor/field.hpp"
#include "cyclofactor/poly.hpp"
#include "cyclofactor/sequences.hpp"

// Closed-form factorizations of x^l - c, x^d +- 1, Phi_{2^k}(x^d) and the
// full assembly of x^(2^n d) - 1 over F_q, for d an odd divisor of q+1.
// Every root of unity used here (alpha_{2^k}, beta_{2^k}, default gamma) is a
// power of gen_q2, which makes the squaring tower coherent:
// beta_{2^(k+1)}^2 = beta_{2^k} and alpha_{2^k}^2 = alpha_{2^(k-1)}. The
// emitted factor sets do not depend on these choices (unique factorization).

namespace cyclofactor {

struct FactorChecks {
    std::optional<bool> product_ok;
    std::optional<bool> all_irreducible;
    std::optional<bool> count_ok;
    std::optional<bool> oracle_match;

    /// True when every performed check passed.
    bool all_passed() const {
        for (auto f : {product_ok, all_irreducible, count_ok, oracle_match}) {
            if (f && !*f) return false;
        }
        return true;
    }
};

struct FactorizationReport {
    std::uint64_t q = 0;
    std::uint64_t e = 1;
    std::uint64_t n = 0;
    std::uint64_t d = 1;
    Poly<Fq> target;  // x^(2^n d) - 1
    FactorList<Fq> factors;
    std::uint64_t predicted_count = 0;
    FactorChecks checks;
};

struct FactorOptions {
    /// Run the expensive checks (per-factor irreducibility, oracle multiset
    /// comparison). Product and count checks always run.
    bool verify = false;
    std::uint64_t seed = 0;
    std::optional<Fq2Elem> gamma;
};

/// x^l - c for c = a^l, l an odd divisor of q+1, a != 0:
/// (x - a) * prod_j (x^2 - a delta_j x + a^2).
FactorList<Fq> factor_xl_minus_c(const FieldCtx& ctx, std::uint64_t l, FqElem a);

/// sign=+1: x^d - 1 = (x - 1) prod (x^2 - delta_j x + 1);
/// sign=-1: x^d + 1 = (x + 1) prod (x^2 + delta_j x + 1).
FactorList<Fq> factor_xd_pm1(const FieldCtx& ctx, const DeltaThetaTable& table, int sign);
FactorList<Fq> factor_xd_pm1(const FieldCtx& ctx, std::uint64_t d, int sign);

/// Phi_{2^k} over F_{q^2} as 2^(k-1) linear factors (x +- beta_{2^k}^(d(2i-1))),
/// for 2 <= k <= m-1 and odd d coprime to q.
FactorList<Fq2> factor_phi2k_fq2(const FieldCtx& ctx, unsigned k, std::uint64_t d);

/// q = 1 (mod 4), 2 <= k <= s: Phi_{2^k}(x^d) as 2^(k-2)(d+1) factors
/// (x +- alpha_{2^k}^(2i-1)) and (x^2 +- alpha_{2^k}^(2i-1) delta_j x + alpha_{2^(k-1)}^(2i-1)).
FactorList<Fq> factor_phi2k_xd_q1(const FieldCtx& ctx, const DeltaThetaTable& table, unsigned k);

/// q = 1 (mod 4), r >= 1: Phi_{2^(s+r)}(x^d) as 2^(s-1) d factors
/// (x^(2^r) +- alpha_{2^s}^(2i-1)) and
/// (x^(2^r) +- alpha_4^l beta_{2^(s+1)}^(2i-1) theta_j x^(2^(r-1)) - alpha_2^l alpha_{2^s}^(2i-1)).
FactorList<Fq> factor_phi2k_xd_q1_high(const FieldCtx& ctx, const DeltaThetaTable& table,
                                       unsigned r);

/// q = 3 (mod 4), k >= 2: Phi_{2^k}(x^d); quadratics (x^2 - theta_{i,j,k} x + 1)
/// for k <= m-1, trinomials (x^(2^(k-m+1)) +- theta_{i,j} x^(2^(k-m)) - 1) for k >= m.
FactorList<Fq> factor_phi2k_xd_q3(const FieldCtx& ctx, const DeltaThetaTable& table, unsigned k);

/// The applicable closed-form factor count of x^(2^n d) - 1 for n >= 2:
///   q = 1 (4):  n <= s: 2^(n-1)(d+1);  n > s: 2^(s-1)((n-s+1)d + 1)
///   q = 3 (4):  n <= m-1: 2^(n-1)d + 1;  n >= m: 2^(m-2)d(n-m+2) + 1.
std::uint64_t predicted_factor_count(const FieldCtx& ctx, std::uint64_t n, std::uint64_t d);

/// Complete irreducible factorization of x^(2^n d) - 1 with verification
/// flags. Hypothesis violations throw std::invalid_argument naming the
/// offending hypothesis; structural failures throw std::logic_error naming
/// the offending factor.
FactorizationReport factor_x2nd_minus_1(const FieldCtx& ctx, std::uint64_t n, std::uint64_t d,
                                        const FactorOptions& opts = {});

}  // namespace cyclofactor
