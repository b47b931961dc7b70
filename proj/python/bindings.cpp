// Python bindings for the main operations: field-tower construction, the
// closed-form factorization of x^(2^n d) - 1, per-level Phi_{2^k}(x^d)
// factorization, cyclotomic polynomials, delta/theta tables and the generic
// oracle. Elements cross the boundary as integers (e = 1) or coordinate
// lists (e > 1), polynomials as ascending coefficient lists, mirroring the
// CLI's JSON conventions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "cyclofactor/cyclotomic.hpp"
#include "cyclofactor/factorizer.hpp"
#include "cyclofactor/field.hpp"
#include "cyclofactor/oracle.hpp"
#include "cyclofactor/sequences.hpp"

namespace py = pybind11;
using namespace cyclofactor;

namespace {

py::object elem_out(const Fq& fq, FqElem x) {
    if (fq.ext_degree() == 1) return py::int_(x.v);
    return py::cast(fq.coords(x));
}

FqElem elem_in(const Fq& fq, const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return fq.from_int(h.cast<std::int64_t>());
    return fq.from_coords(h.cast<std::vector<std::uint64_t>>());
}

py::list poly_out(const Fq& fq, const Poly<Fq>& f) {
    py::list out;
    for (const auto& c : f.c) out.append(elem_out(fq, c));
    return out;
}

Poly<Fq> poly_in(const Fq& fq, const py::sequence& seq) {
    Poly<Fq> f;
    for (const auto& h : seq) f.c.push_back(elem_in(fq, h));
    f.trim();
    return f;
}

py::list factors_out(const Fq& fq, const FactorList<Fq>& fl) {
    py::list out;
    for (const auto& e : fl.entries) {
        py::dict d;
        d["coeffs"] = poly_out(fq, e.factor);
        d["multiplicity"] = e.multiplicity;
        d["provenance"] = e.provenance;
        out.append(d);
    }
    return out;
}

std::optional<Fq2Elem> gamma_in(const FieldCtx& ctx, const py::object& gamma) {
    if (gamma.is_none()) return std::nullopt;
    auto pair = gamma.cast<py::tuple>();
    if (pair.size() != 2) throw std::invalid_argument("gamma must be a pair (a, b)");
    return ctx.fq2.make(elem_in(ctx.fq, pair[0]), elem_in(ctx.fq, pair[1]));
}

py::dict report_out(const FieldCtx& ctx, const FactorizationReport& r) {
    py::dict out;
    out["q"] = r.q;
    out["e"] = r.e;
    out["n"] = r.n;
    out["d"] = r.d;
    out["degree"] = r.target.degree();
    out["predicted_count"] = r.predicted_count;
    out["factors"] = factors_out(ctx.fq, r.factors);
    py::dict checks;
    auto flag = [](std::optional<bool> b) -> py::object {
        return b ? py::object(py::bool_(*b)) : py::none();
    };
    checks["product_ok"] = flag(r.checks.product_ok);
    checks["all_irreducible"] = flag(r.checks.all_irreducible);
    checks["count_ok"] = flag(r.checks.count_ok);
    checks["oracle_match"] = flag(r.checks.oracle_match);
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(cyclofactor, m) {
    m.doc() = "explicit factorization of x^(2^n d) - 1 over F_q for odd d | q+1";

    py::class_<FieldCtx>(m, "FieldCtx")
        .def_readonly("p", &FieldCtx::p)
        .def_readonly("e", &FieldCtx::e)
        .def_readonly("q", &FieldCtx::q)
        .def_readonly("s", &FieldCtx::s)
        .def_readonly("m", &FieldCtx::m)
        .def_property_readonly("nonsquare",
                               [](const FieldCtx& ctx) { return elem_out(ctx.fq, ctx.nonsquare); })
        .def_property_readonly("gen_q",
                               [](const FieldCtx& ctx) { return elem_out(ctx.fq, ctx.gen_q); })
        .def_property_readonly("modulus", [](const FieldCtx& ctx) { return ctx.modulus; })
        .def("__repr__", [](const FieldCtx& ctx) {
            return "FieldCtx(q=" + std::to_string(ctx.q) + ", e=" + std::to_string(ctx.e) + ")";
        });

    m.def("make_field_ctx", &make_field_ctx, py::arg("p"), py::arg("e") = 1);

    m.def(
        "factor_x2nd_minus_1",
        [](const FieldCtx& ctx, std::uint64_t n, std::uint64_t d, bool verify, std::uint64_t seed,
           const py::object& gamma) {
            FactorOptions opts;
            opts.verify = verify;
            opts.seed = seed;
            opts.gamma = gamma_in(ctx, gamma);
            return report_out(ctx, factor_x2nd_minus_1(ctx, n, d, opts));
        },
        py::arg("ctx"), py::arg("n"), py::arg("d"), py::arg("verify") = false,
        py::arg("seed") = 0, py::arg("gamma") = py::none());

    m.def(
        "phi2k_xd",
        [](const FieldCtx& ctx, unsigned k, std::uint64_t d) {
            const DeltaThetaTable table = build_delta_theta(ctx, d);
            FactorList<Fq> fl;
            if (ctx.q % 4 == 1) {
                fl = k <= ctx.s ? factor_phi2k_xd_q1(ctx, table, k)
                                : factor_phi2k_xd_q1_high(ctx, table, k - ctx.s);
            } else {
                fl = factor_phi2k_xd_q3(ctx, table, k);
            }
            return factors_out(ctx.fq, fl);
        },
        py::arg("ctx"), py::arg("k"), py::arg("d"));

    m.def(
        "cyclotomic_poly",
        [](const FieldCtx& ctx, std::uint64_t n) { return poly_out(ctx.fq, cyclotomic_poly(ctx.fq, n)); },
        py::arg("ctx"), py::arg("n"));

    m.def(
        "factor_profile",
        [](const FieldCtx& ctx, std::uint64_t n) {
            const FactorProfile pr = factor_profile(ctx.fq, n);
            return py::make_tuple(pr.factor_degree, pr.factor_count);
        },
        py::arg("ctx"), py::arg("n"));

    m.def(
        "delta_theta_table",
        [](const FieldCtx& ctx, std::uint64_t d, const py::object& gamma) {
            const DeltaThetaTable t = build_delta_theta(ctx, d, gamma_in(ctx, gamma));
            py::dict out;
            py::list delta, theta;
            for (const auto& v : t.delta) delta.append(elem_out(ctx.fq, v));
            for (const auto& v : t.theta)
                theta.append(py::make_tuple(elem_out(ctx.fq, v.a), elem_out(ctx.fq, v.b)));
            out["d"] = t.d;
            out["gamma"] = py::make_tuple(elem_out(ctx.fq, t.gamma.a), elem_out(ctx.fq, t.gamma.b));
            out["delta"] = delta;
            out["theta"] = theta;
            return out;
        },
        py::arg("ctx"), py::arg("d"), py::arg("gamma") = py::none());

    m.def(
        "predicted_factor_count",
        [](const FieldCtx& ctx, std::uint64_t n, std::uint64_t d) {
            return predicted_factor_count(ctx, n, d);
        },
        py::arg("ctx"), py::arg("n"), py::arg("d"));

    m.def(
        "oracle_factor",
        [](const FieldCtx& ctx, const py::sequence& coeffs, std::uint64_t seed) {
            return factors_out(ctx.fq, full_factor(ctx.fq, poly_in(ctx.fq, coeffs), seed));
        },
        py::arg("ctx"), py::arg("coeffs"), py::arg("seed") = 0);

    m.def(
        "is_irreducible",
        [](const FieldCtx& ctx, const py::sequence& coeffs) {
            return is_irreducible(ctx.fq, poly_in(ctx.fq, coeffs));
        },
        py::arg("ctx"), py::arg("coeffs"));
}
