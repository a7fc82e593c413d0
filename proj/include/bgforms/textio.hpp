#pragma once

#include <string>

#include <json.hpp>

#include "bgforms/form_operator.hpp"
#include "bgforms/report.hpp"

namespace bgforms {

/// Parses the canonical text form emitted by ParamScalar::str() (and any
/// expression over beta, lambda, u with + - * / ^ and parentheses).
ParamScalar param_from_string(const std::string& text);

/// JSON shape: {"scalar": [..], "xPart": [..], "zPart": [..],
/// "deltaPart": [..], "dPart": [..]} — each value a list of canonical
/// ParamScalar strings indexed by power (xPart/zPart start at power 0 and
/// therefore begin with "0"). Round-trips bit-exactly.
nlohmann::json form_to_json(const FormOperator& op);
FormOperator form_from_json(const nlohmann::json& j);

nlohmann::json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

/// Plain text rendering, e.g. "1/(lambda-beta)*delta".
std::string form_to_text(const FormOperator& op);

/// LaTeX math body using the delta^h d / d delta^h notation.
std::string form_to_latex(const FormOperator& op);
std::string unipoly_to_latex(const UniPoly& p, const std::string& var = "y");
std::string param_to_latex(const ParamScalar& s);
/// Wraps a math body into a standalone compilable document.
std::string latex_document(const std::string& math_body);

nlohmann::json report_to_json(const Report& report);

}  // namespace bgforms
