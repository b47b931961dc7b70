#include "cyclofactor/factorizer.hpp"

#include <stdexcept>
#include <string>

#include "cyclofactor/numtheory.hpp"
#include "cyclofactor/oracle.hpp"

namespace cyclofactor {

namespace {

void require_valid_d(const FieldCtx& ctx, std::uint64_t d) {
    if (d == 0 || d % 2 == 0) throw std::invalid_argument("d must be odd");
    if ((ctx.q + 1) % d != 0) throw std::invalid_argument("d must divide q+1");
    if (gcd_u64(d, ctx.q) != 1) throw std::invalid_argument("d must be coprime to q");
}

std::string idx(std::uint64_t v) { return std::to_string(v); }

}  // namespace

FactorList<Fq> factor_xl_minus_c(const FieldCtx& ctx, std::uint64_t l, FqElem a) {
    require_valid_d(ctx, l);
    if (ctx.fq.is_zero(a)) throw std::invalid_argument("a must be nonzero");
    const Fq& k = ctx.fq;
    const DeltaThetaTable table = build_delta_theta(ctx, l);
    FactorList<Fq> out;
    out.push(poly_binomial(k, 1, k.neg(a)), 1, "xl-minus-c:linear");
    const FqElem a2 = k.mul(a, a);
    for (std::uint64_t j = 1; j <= (l - 1) / 2; ++j) {
        out.push(poly_trinomial(k, 2, 1, k.neg(k.mul(a, table.delta[j])), a2), 1,
                 "xl-minus-c:quad:j=" + idx(j));
    }
    return out;
}

FactorList<Fq> factor_xd_pm1(const FieldCtx& ctx, const DeltaThetaTable& table, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const Fq& k = ctx.fq;
    const std::uint64_t d = table.d;
    const char* tag = sign > 0 ? "xd-minus-1" : "xd-plus-1";
    FactorList<Fq> out;
    out.push(poly_binomial(k, 1, k.from_int(-sign)), 1, std::string(tag) + ":linear");
    for (std::uint64_t j = 1; j <= (d - 1) / 2; ++j) {
        const FqElem mid = sign > 0 ? k.neg(table.delta[j]) : table.delta[j];
        out.push(poly_trinomial(k, 2, 1, mid, k.one()), 1, std::string(tag) + ":quad:j=" + idx(j));
    }
    return out;
}

FactorList<Fq> factor_xd_pm1(const FieldCtx& ctx, std::uint64_t d, int sign) {
    require_valid_d(ctx, d);
    return factor_xd_pm1(ctx, build_delta_theta(ctx, d), sign);
}

FactorList<Fq2> factor_phi2k_fq2(const FieldCtx& ctx, unsigned k, std::uint64_t d) {
    if (k < 2 || k > ctx.m) throw std::invalid_argument("k must satisfy 2 <= k <= m");
    if (d % 2 == 0 || gcd_u64(d, ctx.q) != 1)
        throw std::invalid_argument("d must be odd and coprime to q");
    const Fq2& k2 = ctx.fq2;
    const Fq2Elem beta = root_of_unity_fq2(ctx, std::uint64_t{1} << k);
    const Fq2Elem beta_d = k2.pow(beta, d % (std::uint64_t{1} << k));
    FactorList<Fq2> out;
    for (std::uint64_t i = 1; i <= (std::uint64_t{1} << (k - 2)); ++i) {
        const Fq2Elem b = k2.pow(beta_d, 2 * i - 1);
        out.push(Poly<Fq2>{{b, k2.one()}}, 1, "phi2k-fq2:i=" + idx(i) + ",sign=+");
        out.push(Poly<Fq2>{{k2.neg(b), k2.one()}}, 1, "phi2k-fq2:i=" + idx(i) + ",sign=-");
    }
    return out;
}

FactorList<Fq> factor_phi2k_xd_q1(const FieldCtx& ctx, const DeltaThetaTable& table, unsigned k) {
    if (ctx.q % 4 != 1) throw std::invalid_argument("requires q = 1 (mod 4)");
    if (k < 2 || k > ctx.s) throw std::invalid_argument("k must satisfy 2 <= k <= s");
    const Fq& kq = ctx.fq;
    const std::uint64_t d = table.d;
    const Fq2Elem alpha_k2 = root_of_unity_fq2(ctx, std::uint64_t{1} << k);
    const Fq2Elem alpha_k1_2 = root_of_unity_fq2(ctx, std::uint64_t{1} << (k - 1));
    if (!ctx.fq2.in_base(alpha_k2) || !ctx.fq2.in_base(alpha_k1_2))
        throw std::logic_error("alpha_{2^k} not in F_q");
    const FqElem alpha_k = alpha_k2.a;
    const FqElem alpha_k1 = alpha_k1_2.a;
    FactorList<Fq> out;
    for (std::uint64_t i = 1; i <= (std::uint64_t{1} << (k - 2)); ++i) {
        const FqElem ai = kq.pow(alpha_k, 2 * i - 1);
        const FqElem ahi = kq.pow(alpha_k1, 2 * i - 1);
        const std::string base = "phi2k:k=" + idx(k) + ",i=" + idx(i);
        out.push(poly_binomial(kq, 1, ai), 1, base + ":binomial,sign=+");
        out.push(poly_binomial(kq, 1, kq.neg(ai)), 1, base + ":binomial,sign=-");
        for (std::uint64_t j = 1; j <= (d - 1) / 2; ++j) {
            const FqElem mid = kq.mul(ai, table.delta[j]);
            out.push(poly_trinomial(kq, 2, 1, mid, ahi), 1, base + ":quad,j=" + idx(j) + ",sign=+");
            out.push(poly_trinomial(kq, 2, 1, kq.neg(mid), ahi), 1,
                     base + ":quad,j=" + idx(j) + ",sign=-");
        }
    }
    return out;
}

FactorList<Fq> factor_phi2k_xd_q1_high(const FieldCtx& ctx, const DeltaThetaTable& table,
                                       unsigned r) {
    if (ctx.q % 4 != 1) throw std::invalid_argument("requires q = 1 (mod 4)");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    const Fq& kq = ctx.fq;
    const Fq2& k2 = ctx.fq2;
    const std::uint64_t d = table.d;
    const unsigned s = ctx.s;
    const Fq2Elem alpha_s2 = root_of_unity_fq2(ctx, std::uint64_t{1} << s);
    const Fq2Elem alpha_4_2 = root_of_unity_fq2(ctx, 4);
    if (!k2.in_base(alpha_s2) || !k2.in_base(alpha_4_2))
        throw std::logic_error("alpha root not in F_q");
    const FqElem alpha_s = alpha_s2.a;
    const FqElem alpha_4 = alpha_4_2.a;
    const Fq2Elem beta_s1 = root_of_unity_fq2(ctx, std::uint64_t{1} << (s + 1));
    const std::size_t hi = std::size_t{1} << r;
    const std::size_t mid = std::size_t{1} << (r - 1);

    FactorList<Fq> out;
    for (std::uint64_t i = 1; i <= (std::uint64_t{1} << (s - 2)); ++i) {
        const FqElem ai = kq.pow(alpha_s, 2 * i - 1);
        const Fq2Elem bi = k2.pow(beta_s1, 2 * i - 1);
        const std::string base = "phi2k-high:r=" + idx(r) + ",i=" + idx(i);
        out.push(poly_binomial(kq, hi, ai), 1, base + ":binomial,sign=+");
        out.push(poly_binomial(kq, hi, kq.neg(ai)), 1, base + ":binomial,sign=-");
        for (std::uint64_t j = 1; j <= (d - 1) / 2; ++j) {
            // beta_{2^(s+1)}^(2i-1) theta_j is Frobenius-fixed (the proof's
            // argument); verify before embedding into F_q[x].
            const Fq2Elem bt = k2.mul(bi, table.theta[j]);
            if (!k2.in_base(bt))
                throw std::logic_error("middle coefficient not in F_q at " + base +
                                       ",j=" + idx(j));
            for (int l = 0; l <= 1; ++l) {
                const FqElem midc = l == 0 ? bt.a : kq.mul(alpha_4, bt.a);
                const FqElem cst = l == 0 ? kq.neg(ai) : ai;  // -alpha_2^l alpha_{2^s}^(2i-1)
                const std::string prov = base + ",j=" + idx(j) + ",l=" + idx(l);
                out.push(poly_trinomial(kq, hi, mid, midc, cst), 1, prov + ",sign=+");
                out.push(poly_trinomial(kq, hi, mid, kq.neg(midc), cst), 1, prov + ",sign=-");
            }
        }
    }
    return out;
}

FactorList<Fq> factor_phi2k_xd_q3(const FieldCtx& ctx, const DeltaThetaTable& table, unsigned k) {
    if (ctx.q % 4 != 3) throw std::invalid_argument("requires q = 3 (mod 4)");
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    const Fq& kq = ctx.fq;
    const std::uint64_t d = table.d;
    const unsigned m = ctx.m;
    FactorList<Fq> out;
    if (k <= m - 1) {
        for (std::uint64_t i = 1; i <= (std::uint64_t{1} << (k - 2)); ++i) {
            for (std::uint64_t j = 0; j < d; ++j) {
                const FqElem th = theta_ijk(ctx, table, i, j, k);
                out.push(poly_trinomial(kq, 2, 1, kq.neg(th), kq.one()), 1,
                         "phi2k-conj:k=" + idx(k) + ",i=" + idx(i) + ",j=" + idx(j));
            }
        }
    } else {
        const unsigned r = k - m;
        const std::size_t hi = std::size_t{1} << (r + 1);
        const std::size_t mid = std::size_t{1} << r;
        const FqElem minus1 = kq.from_int(-1);
        for (std::uint64_t i = 1; i <= (std::uint64_t{1} << (m - 3)); ++i) {
            for (std::uint64_t j = 0; j < d; ++j) {
                const FqElem th = theta_ijk(ctx, table, i, j, m);
                const std::string base =
                    "phi2k-conj:k=" + idx(k) + ",i=" + idx(i) + ",j=" + idx(j);
                out.push(poly_trinomial(kq, hi, mid, th, minus1), 1, base + ",sign=+");
                out.push(poly_trinomial(kq, hi, mid, kq.neg(th), minus1), 1, base + ",sign=-");
            }
        }
    }
    return out;
}

std::uint64_t predicted_factor_count(const FieldCtx& ctx, std::uint64_t n, std::uint64_t d) {
    require_valid_d(ctx, d);
    if (n < 2) throw std::invalid_argument("predicted_factor_count: requires n >= 2");
    if (ctx.q % 4 == 1) {
        if (n <= ctx.s) return (std::uint64_t{1} << (n - 1)) * (d + 1);
        return (std::uint64_t{1} << (ctx.s - 1)) * ((n - ctx.s + 1) * d + 1);
    }
    if (n <= ctx.m - 1) return (std::uint64_t{1} << (n - 1)) * d + 1;
    return (std::uint64_t{1} << (ctx.m - 2)) * d * (n - ctx.m + 2) + 1;
}

FactorizationReport factor_x2nd_minus_1(const FieldCtx& ctx, std::uint64_t n, std::uint64_t d,
                                        const FactorOptions& opts) {
    require_valid_d(ctx, d);
    if (n > 20 || (d << n) > (std::uint64_t{1} << 20))
        throw std::invalid_argument("degree 2^n d exceeds the supported budget (2^20)");
    const Fq& kq = ctx.fq;
    const std::uint64_t degree = d << n;

    const DeltaThetaTable table = build_delta_theta(ctx, d, opts.gamma);

    FactorizationReport report;
    report.q = ctx.q;
    report.e = ctx.e;
    report.n = n;
    report.d = d;
    report.target = poly_xn_minus_1(kq, degree);

    FactorList<Fq>& out = report.factors;
    auto append = [&out](FactorList<Fq>&& part) {
        for (auto& e : part.entries) out.entries.push_back(std::move(e));
    };

    append(factor_xd_pm1(ctx, table, +1));
    if (n >= 1) append(factor_xd_pm1(ctx, table, -1));
    if (n >= 2) {
        if (ctx.q % 4 == 1) {
            const unsigned top = static_cast<unsigned>(std::min<std::uint64_t>(n, ctx.s));
            for (unsigned k = 2; k <= top; ++k) append(factor_phi2k_xd_q1(ctx, table, k));
            for (unsigned r = 1; n > ctx.s && r <= n - ctx.s; ++r)
                append(factor_phi2k_xd_q1_high(ctx, table, r));
        } else {
            const unsigned top = static_cast<unsigned>(std::min<std::uint64_t>(n, ctx.m - 1));
            for (unsigned k = 2; k <= top; ++k) append(factor_phi2k_xd_q3(ctx, table, k));
            for (unsigned k = ctx.m; k <= n; ++k) append(factor_phi2k_xd_q3(ctx, table, k));
        }
    }

    report.predicted_count =
        n >= 2 ? predicted_factor_count(ctx, n, d) : (n == 1 ? d + 1 : (d + 1) / 2);

    if (!all_distinct(out)) throw std::logic_error("factor_x2nd_minus_1: duplicate factor emitted");

    report.checks.count_ok = out.total_count() == report.predicted_count;
    report.checks.product_ok = product(kq, out) == report.target;
    if (opts.verify) {
        bool irred = true;
        for (const auto& entry : out.entries) {
            if (!is_irreducible(kq, entry.factor)) {
                irred = false;
                break;
            }
        }
        report.checks.all_irreducible = irred;
        report.checks.oracle_match =
            compare_factorizations(kq, out, full_factor(kq, report.target, opts.seed));
    }
    return report;
}

}  // namespace cyclofactor
