#include "cyclofactor/sequences.hpp"

#include <stdexcept>
#include <string>

#include "cyclofactor/numtheory.hpp"

namespace cyclofactor {

namespace {

void require_valid_d(const FieldCtx& ctx, std::uint64_t d) {
    if (d == 0 || d % 2 == 0) throw std::invalid_argument("d must be odd");
    if ((ctx.q + 1) % d != 0) throw std::invalid_argument("d must divide q+1");
    if (gcd_u64(d, ctx.q) != 1) throw std::invalid_argument("d must be coprime to q");
}

}  // namespace

DeltaThetaTable build_delta_theta(const FieldCtx& ctx, std::uint64_t d,
                                  std::optional<Fq2Elem> gamma_override) {
    require_valid_d(ctx, d);
    const Fq2& k2 = ctx.fq2;
    const Fq& k = ctx.fq;

    Fq2Elem gamma = gamma_override ? *gamma_override : root_of_unity_fq2(ctx, d);
    if (gamma_override) {
        if (!(k2.pow(gamma, d) == k2.one()))
            throw std::invalid_argument("gamma override must be a d-th root of unity");
        for (std::uint64_t r : prime_factors(d)) {
            if (k2.pow(gamma, d / r) == k2.one())
                throw std::invalid_argument("gamma override must have exact order d");
        }
    }

    DeltaThetaTable table;
    table.d = d;
    table.gamma = gamma;
    table.delta.resize(d);
    table.theta.resize(d);

    const Fq2Elem gamma_inv = k2.frobenius(gamma);  // gamma^q = gamma^{-1} since gamma^{q+1} = 1
    const Fq2Elem delta1_2 = k2.add(gamma, gamma_inv);
    const Fq2Elem theta1_2 = k2.sub(gamma, gamma_inv);
    if (!k2.in_base(delta1_2)) throw std::logic_error("delta_1 fell outside F_q");

    table.delta[0] = k.from_int(2);
    table.theta[0] = k2.zero();
    if (d > 1) {
        table.delta[1] = delta1_2.a;
        table.theta[1] = theta1_2;
    }
    const FqElem d1 = d > 1 ? table.delta[1] : FqElem{};
    for (std::uint64_t j = 2; j < d; ++j) {
        table.delta[j] = k.sub(k.mul(d1, table.delta[j - 1]), table.delta[j - 2]);
        table.theta[j] = k2.sub(k2.mul(k2.from_base(d1), table.theta[j - 1]), table.theta[j - 2]);
    }

    // Independent recomputation by direct powers.
    for (std::uint64_t j = 0; j < d; ++j) {
        const Fq2Elem gj = k2.pow(gamma, j);
        const Fq2Elem gqj = k2.frobenius(gj);
        const Fq2Elem sum = k2.add(gj, gqj);
        const Fq2Elem dif = k2.sub(gj, gqj);
        if (!k2.in_base(sum) || !(sum.a == table.delta[j]))
            throw std::logic_error("delta recursion disagrees with direct powers at j=" +
                                   std::to_string(j));
        if (!(dif == table.theta[j]))
            throw std::logic_error("theta recursion disagrees with direct powers at j=" +
                                   std::to_string(j));
    }
    return table;
}

std::set<FqElem> delta_set(const FieldCtx&, const DeltaThetaTable& table) {
    std::set<FqElem> out;
    for (std::uint64_t j = 1; j <= (table.d - 1) / 2; ++j) out.insert(table.delta[j]);
    if (out.size() != (table.d - 1) / 2)
        throw std::logic_error("delta_set: expected " + std::to_string((table.d - 1) / 2) +
                               " distinct elements");
    return out;
}

std::uint64_t sigma_d(const DeltaThetaTable& table, std::uint64_t j) {
    const std::uint64_t half = (table.d - 1) / 2;
    if (j < 1 || j > half) throw std::invalid_argument("sigma_d: index out of range");
    return 2 * j <= half ? 2 * j : table.d - 2 * j;
}

FqElem theta_ijk(const FieldCtx& ctx, const DeltaThetaTable& table, std::uint64_t i,
                 std::uint64_t j, unsigned k) {
    if (ctx.q % 4 != 3) throw std::invalid_argument("theta_ijk: requires q = 3 (mod 4)");
    if (k < 2 || k > ctx.m) throw std::invalid_argument("theta_ijk: level k out of range");
    if (i < 1 || i > (std::uint64_t{1} << (k - 2)))
        throw std::invalid_argument("theta_ijk: index i out of range");
    if (j >= table.d) throw std::invalid_argument("theta_ijk: index j out of range");
    const Fq2& k2 = ctx.fq2;
    const Fq2Elem beta = root_of_unity_fq2(ctx, std::uint64_t{1} << k);
    const Fq2Elem u = k2.mul(k2.pow(beta, 2 * i - 1), k2.pow(table.gamma, j));
    const Fq2Elem v = k2.mul(k2.pow(k2.frobenius(beta), 2 * i - 1),
                             k2.pow(k2.frobenius(table.gamma), j));
    const Fq2Elem sum = k2.add(u, v);
    if (!k2.in_base(sum))
        throw std::logic_error("theta_ijk: sum not fixed by Frobenius (parameter error)");
    return sum.a;
}

}  // namespace cyclofactor
