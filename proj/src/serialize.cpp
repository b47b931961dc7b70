#include "cyclofactor/serialize.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cyclofactor {

namespace {

/// Balanced representative of a residue: values above p/2 go negative.
std::int64_t balanced(std::uint64_t v, std::uint64_t p) {
    return v > p / 2 ? static_cast<std::int64_t>(v) - static_cast<std::int64_t>(p)
                     : static_cast<std::int64_t>(v);
}

struct TermPrinter {
    std::ostringstream out;
    bool first = true;

    void term(const std::string& coeff_abs, bool negative, std::size_t power,
              const std::string& var) {
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const bool unit = coeff_abs == "1";
        if (power == 0) {
            out << coeff_abs;
        } else {
            if (!unit) out << coeff_abs;
            out << var;
            if (power > 1) out << "^" << power;
        }
    }
};

}  // namespace

std::string elem_to_string(const Fq& fq, FqElem x) {
    if (fq.ext_degree() == 1) return std::to_string(balanced(x.v, fq.characteristic()));
    std::string s = "(";
    const auto c = fq.coords(x);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + ")";
}

std::string elem_to_string(const Fq2& fq2, Fq2Elem x) {
    std::string s = elem_to_string(fq2.base(), x.a);
    if (x.b.v != 0) s += " + " + elem_to_string(fq2.base(), x.b) + "*w";
    return s;
}

namespace {

std::string poly_term_string(const Fq& fq, const Poly<Fq>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    TermPrinter tp;
    const bool prime = fq.ext_degree() == 1;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        if (f.c[i] == FqElem{}) continue;
        if (prime) {
            const std::int64_t b = balanced(f.c[i].v, fq.characteristic());
            tp.term(std::to_string(b < 0 ? -b : b), b < 0, i, var);
        } else {
            tp.term(f.c[i] == fq.one() ? "1" : elem_to_string(fq, f.c[i]), false, i, var);
        }
    }
    return tp.out.str();
}

std::string poly_term_string(const Fq2& fq2, const Poly<Fq2>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    TermPrinter tp;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        if (f.c[i] == Fq2Elem{}) continue;
        std::string cs;
        if (f.c[i] == fq2.one()) cs = "1";
        else if (fq2.in_base(f.c[i])) cs = elem_to_string(fq2.base(), f.c[i].a);
        else cs = "[" + elem_to_string(fq2, f.c[i]) + "]";
        tp.term(cs, false, i, var);
    }
    return tp.out.str();
}

}  // namespace

std::string poly_to_string(const Fq& fq, const Poly<Fq>& f, const std::string& var) {
    return poly_term_string(fq, f, var);
}

std::string poly_to_string(const Fq2& fq2, const Poly<Fq2>& f, const std::string& var) {
    return poly_term_string(fq2, f, var);
}

namespace {

template <class FieldT>
std::string factor_list_to_string_impl(const FieldT& k, const FactorList<FieldT>& fl) {
    std::string s;
    for (const auto& e : fl.entries) {
        s += "(" + poly_to_string(k, e.factor) + ")";
        if (e.multiplicity > 1) s += "^" + std::to_string(e.multiplicity);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string factor_list_to_string(const Fq& fq, const FactorList<Fq>& fl) {
    return factor_list_to_string_impl(fq, fl);
}

std::string factor_list_to_string(const Fq2& fq2, const FactorList<Fq2>& fl) {
    return factor_list_to_string_impl(fq2, fl);
}

nlohmann::json elem_to_json(const Fq& fq, FqElem x) {
    if (fq.ext_degree() == 1) return x.v;
    return fq.coords(x);
}

FqElem elem_from_json(const Fq& fq, const nlohmann::json& j) {
    if (j.is_number()) {
        return fq.from_int(j.get<std::int64_t>());
    }
    std::vector<std::uint64_t> c = j.get<std::vector<std::uint64_t>>();
    if (c.size() != fq.ext_degree())
        throw std::invalid_argument("element: wrong coordinate count");
    return fq.from_coords(c);
}

nlohmann::json poly_to_json(const Fq& fq, const Poly<Fq>& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.c) coeffs.push_back(elem_to_json(fq, c));
    return coeffs;
}

Poly<Fq> poly_from_json(const Fq& fq, const nlohmann::json& j) {
    Poly<Fq> f;
    for (const auto& c : j) f.c.push_back(elem_from_json(fq, c));
    f.trim();
    return f;
}

nlohmann::json factor_list_to_json(const Fq& fq, const FactorList<Fq>& fl) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : fl.entries) {
        arr.push_back({{"coeffs", poly_to_json(fq, e.factor)},
                       {"multiplicity", e.multiplicity},
                       {"provenance", e.provenance}});
    }
    return arr;
}

nlohmann::json report_to_json(const FieldCtx& ctx, const FactorizationReport& report) {
    auto flag = [](std::optional<bool> b) {
        return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
    };
    return {{"q", report.q},
            {"e", report.e},
            {"n", report.n},
            {"d", report.d},
            {"degree", report.target.degree()},
            {"predicted_count", report.predicted_count},
            {"factors", factor_list_to_json(ctx.fq, report.factors)},
            {"checks",
             {{"product_ok", flag(report.checks.product_ok)},
              {"all_irreducible", flag(report.checks.all_irreducible)},
              {"count_ok", flag(report.checks.count_ok)},
              {"oracle_match", flag(report.checks.oracle_match)}}}};
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

FqElem parse_fq_elem(const FieldCtx& ctx, const std::string& text) {
    const auto coords = split(text, '.');
    if (ctx.e == 1) {
        if (coords.size() != 1) throw std::invalid_argument("element: expected a single integer");
        return ctx.fq.from_int(std::stoll(coords[0]));
    }
    if (coords.size() != ctx.e)
        throw std::invalid_argument("element: expected " + std::to_string(ctx.e) +
                                    " '.'-separated coordinates");
    std::vector<std::uint64_t> c;
    for (const auto& part : coords) {
        const std::int64_t v = std::stoll(part);
        c.push_back(ctx.fq.from_int(v).v);
    }
    return ctx.fq.from_coords(c);
}

}  // namespace

Fq2Elem parse_fq2_elem(const FieldCtx& ctx, const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2)
        throw std::invalid_argument("F_q^2 element: expected 'a,b' with b the w-coordinate");
    return ctx.fq2.make(parse_fq_elem(ctx, parts[0]), parse_fq_elem(ctx, parts[1]));
}

Poly<Fq> parse_poly(const FieldCtx& ctx, const std::string& text) {
    Poly<Fq> f;
    for (const auto& part : split(text, ',')) f.c.push_back(parse_fq_elem(ctx, part));
    f.trim();
    return f;
}

}  // namespace cyclofactor
