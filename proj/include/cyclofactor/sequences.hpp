#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "cyclofactor/field.hpp"

namespace cyclofactor {

/// Coefficient sequences attached to a primitive d-th root of unity gamma in
/// F_{q^2} (d an odd divisor of q+1):
///   delta_j = gamma^j + gamma^(qj)  (lies in F_q),
///   theta_j = gamma^j - gamma^(qj),
/// indexed 0..d-1. Both satisfy the three-term recursion with multiplier
/// delta_1, and the symmetries delta_{d-j} = delta_j, theta_{d-j} = -theta_j.
struct DeltaThetaTable {
    std::uint64_t d = 1;
    Fq2Elem gamma;
    std::vector<FqElem> delta;
    std::vector<Fq2Elem> theta;
};

/// Fills the table by the recursion and cross-checks every entry against the
/// direct powers gamma^j + gamma^(qj); a mismatch throws std::logic_error.
/// gamma defaults to gen_q2^((q^2-1)/d); an override must be a primitive
/// d-th root of unity.
DeltaThetaTable build_delta_theta(const FieldCtx& ctx, std::uint64_t d,
                                  std::optional<Fq2Elem> gamma = std::nullopt);

/// Delta_d = {delta_j : 1 <= j <= (d-1)/2}; cardinality exactly (d-1)/2.
std::set<FqElem> delta_set(const FieldCtx& ctx, const DeltaThetaTable& table);

/// Index form of the squaring permutation on Delta_d: returns j' in
/// [1, (d-1)/2] with delta_{j'} = delta_j^2 - 2 (fold j' = d - 2j when 2j
/// falls outside the range).
std::uint64_t sigma_d(const DeltaThetaTable& table, std::uint64_t j);

/// theta_{i,j,k} = beta^(2i-1) gamma^j + beta^(q(2i-1)) gamma^(qj) with beta
/// the deterministic primitive 2^k-th root in F_{q^2}. Requires q = 3 mod 4,
/// 2 <= k <= m, 1 <= i <= 2^(k-2), 0 <= j < d. The two summands are computed
/// independently and the w-coordinate of the sum must vanish.
FqElem theta_ijk(const FieldCtx& ctx, const DeltaThetaTable& table, std::uint64_t i,
                 std::uint64_t j, unsigned k);

}  // namespace cyclofactor
