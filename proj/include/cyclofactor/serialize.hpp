#pragma once

#include <string>

#include <json.hpp>

#include "cyclofactor/factorizer.hpp"
#include "cyclofactor/field.hpp"
#include "cyclofactor/poly.hpp"
#include "cyclofactor/sequences.hpp"

// Rendering and wire formats. JSON uses canonical residues in [0, p): plain
// integers for e = 1, coordinate arrays for e > 1. Text rendering uses
// balanced representatives for e = 1 (residues above p/2 print negative),
// matching how worked examples are usually written.

namespace cyclofactor {

std::string elem_to_string(const Fq& fq, FqElem x);
std::string elem_to_string(const Fq2& fq2, Fq2Elem x);

std::string poly_to_string(const Fq& fq, const Poly<Fq>& f, const std::string& var = "x");
std::string poly_to_string(const Fq2& fq2, const Poly<Fq2>& f, const std::string& var = "x");

/// "(f1)(f2)^m..." in list order.
std::string factor_list_to_string(const Fq& fq, const FactorList<Fq>& fl);
std::string factor_list_to_string(const Fq2& fq2, const FactorList<Fq2>& fl);

nlohmann::json elem_to_json(const Fq& fq, FqElem x);
FqElem elem_from_json(const Fq& fq, const nlohmann::json& j);

nlohmann::json poly_to_json(const Fq& fq, const Poly<Fq>& f);
Poly<Fq> poly_from_json(const Fq& fq, const nlohmann::json& j);

nlohmann::json factor_list_to_json(const Fq& fq, const FactorList<Fq>& fl);

/// {"q","e","n","d","degree","predicted_count","factors":[{"coeffs",
///  "multiplicity","provenance"}],"checks":{...}}; checks that were not
/// performed are emitted as null.
nlohmann::json report_to_json(const FieldCtx& ctx, const FactorizationReport& report);

/// Comma-separated F_q encodings; each coordinate list for e > 1 uses '.'
/// between coordinates ("a0.a1,b0.b1"). Accepts negative integers.
Fq2Elem parse_fq2_elem(const FieldCtx& ctx, const std::string& text);

/// Comma-separated ascending coefficients, same per-coefficient encoding.
Poly<Fq> parse_poly(const FieldCtx& ctx, const std::string& text);

}  // namespace cyclofactor
