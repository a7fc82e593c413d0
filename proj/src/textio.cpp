#include "bgforms/textio.hpp"

#include <cctype>
#include <sstream>

#include "bgforms/error.hpp"

namespace bgforms {

namespace {

// --- tiny recursive-descent parser over beta/lambda/u expressions -----------

class ParamParser {
  public:
    explicit ParamParser(const std::string& text) : s_(text) {}

    ParamScalar parse() {
        ParamScalar v = expression();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing input");
        return v;
    }

  private:
    ParamScalar expression() {
        ParamScalar v = term();
        for (;;) {
            skip_ws();
            if (match('+'))
                v += term();
            else if (match('-'))
                v -= term();
            else
                return v;
        }
    }

    ParamScalar term() {
        ParamScalar v = factor();
        for (;;) {
            skip_ws();
            if (match('*'))
                v *= factor();
            else if (match('/'))
                v /= factor();
            else
                return v;
        }
    }

    ParamScalar factor() {
        skip_ws();
        bool negate = false;
        while (match('-')) negate = !negate;
        ParamScalar v = atom();
        skip_ws();
        if (match('^')) {
            skip_ws();
            const long e = integer_literal();
            v = v.pow(e);
        }
        return negate ? -v : v;
    }

    ParamScalar atom() {
        skip_ws();
        if (match('(')) {
            ParamScalar v = expression();
            skip_ws();
            if (!match(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return ParamScalar(Rational(Integer(digits()), Integer(1)));
        const std::string id = identifier();
        if (id == "beta") return ParamScalar::beta();
        if (id == "lambda") return ParamScalar::lambda();
        if (id == "u") return ParamScalar::u();
        fail("unknown symbol '" + id + "'");
        return ParamScalar();
    }

    long integer_literal() {
        bool neg = false;
        while (match('-')) neg = !neg;
        const std::string d = digits();
        const long v = std::stol(d);
        return neg ? -v : v;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return s_.substr(start, pos_ - start);
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a symbol");
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool match(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

nlohmann::json coeff_list(const UniPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k <= p.degree(); ++k)
        arr.push_back(p.coefficient(static_cast<std::size_t>(k)).str());
    return arr;
}

UniPoly coeffs_from(const nlohmann::json& arr) {
    UniPoly p;
    std::size_t k = 0;
    for (const auto& item : arr) {
        p += UniPoly::monomial(k, param_from_string(item.get<std::string>()));
        ++k;
    }
    return p;
}

}  // namespace

ParamScalar param_from_string(const std::string& text) { return ParamParser(text).parse(); }

nlohmann::json form_to_json(const FormOperator& op) {
    nlohmann::json j;
    j["scalar"] = nlohmann::json::array({op.scalar().str()});
    j["xPart"] = coeff_list(op.x_part());
    j["zPart"] = coeff_list(op.z_part());
    j["deltaPart"] = coeff_list(op.delta_part());
    j["dPart"] = coeff_list(op.d_part());
    return j;
}

FormOperator form_from_json(const nlohmann::json& j) {
    const ParamScalar scalar = param_from_string(j.at("scalar").at(0).get<std::string>());
    return FormOperator::from_parts(scalar, coeffs_from(j.at("xPart")), coeffs_from(j.at("zPart")),
                                    coeffs_from(j.at("deltaPart")), coeffs_from(j.at("dPart")));
}

nlohmann::json unipoly_to_json(const UniPoly& p) { return coeff_list(p); }

UniPoly unipoly_from_json(const nlohmann::json& j) { return coeffs_from(j); }

namespace {

void append_terms(std::ostringstream& os, const UniPoly& p, const std::string& symbol,
                  const std::string& trailer, bool& first) {
    for (int k = 0; k <= p.degree(); ++k) {
        const ParamScalar c = p.coefficient(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c.is_one();
        if (!unit || (k == 0 && trailer.empty())) {
            const std::string cs = c.str();
            const bool needs_wrap = cs.find('+') != std::string::npos ||
                                    (cs.rfind('-') != std::string::npos && cs.rfind('-') > 0);
            os << (needs_wrap ? "(" + cs + ")" : cs);
        }
        std::string power;
        if (k > 0) {
            power = symbol;
            if (k > 1) power += "^" + std::to_string(k);
        }
        std::string body = power;
        if (!trailer.empty()) body += (body.empty() ? "" : "*") + trailer;
        if (!body.empty()) {
            if (!unit) os << "*";
            os << body;
        }
    }
}

}  // namespace

std::string form_to_text(const FormOperator& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (!op.scalar().is_zero()) {
        os << op.scalar().str();
        first = false;
    }
    append_terms(os, op.x_part(), "x", "", first);
    append_terms(os, op.z_part(), "z", "", first);
    append_terms(os, op.delta_part(), "x", "delta", first);
    append_terms(os, op.d_part(), "z", "d", first);
    return os.str();
}

std::string param_to_latex(const ParamScalar& s) {
    const auto polish = [](std::string t) {
        std::string out;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t.compare(i, 4, "beta") == 0) {
                out += "\\beta ";
                i += 3;
            } else if (t.compare(i, 6, "lambda") == 0) {
                out += "\\lambda ";
                i += 5;
            } else if (t[i] == '*') {
                out += ' ';
            } else {
                out += t[i];
            }
        }
        return out;
    };
    if (s.is_polynomial()) return polish(s.num().str());
    // str() yields "num/den" with the canonical integer-primitive split
    const std::string text = s.str();
    const std::size_t cut = text.rfind('/');
    std::string num = text.substr(0, cut);
    std::string den = text.substr(cut + 1);
    const auto strip = [](std::string& t) {
        if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    };
    strip(num);
    strip(den);
    return "\\frac{" + polish(num) + "}{" + polish(den) + "}";
}

namespace {

void latex_terms(std::ostringstream& os, const UniPoly& p, const std::string& symbol,
                 const std::string& trailer, bool& first) {
    for (int k = 0; k <= p.degree(); ++k) {
        const ParamScalar c = p.coefficient(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string power;
        if (k == 1) power = symbol;
        if (k > 1) power = "(" + symbol + ")^{" + std::to_string(k) + "}";
        std::string body = power + (trailer.empty() ? "" : (power.empty() ? "" : "\\,") + trailer);
        if (!c.is_one() || body.empty()) os << "\\big[" << param_to_latex(c) << "\\big]";
        os << body;
    }
}

}  // namespace

std::string form_to_latex(const FormOperator& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (!op.scalar().is_zero()) {
        os << "\\big[" << param_to_latex(op.scalar()) << "\\big]";
        first = false;
    }
    latex_terms(os, op.x_part(), "\\delta^h \\mathrm{d}", "", first);
    latex_terms(os, op.z_part(), "\\mathrm{d}\\delta^h", "", first);
    latex_terms(os, op.delta_part(), "\\delta^h \\mathrm{d}", "\\delta^h", first);
    latex_terms(os, op.d_part(), "\\mathrm{d}\\delta^h", "\\mathrm{d}", first);
    return os.str();
}

std::string unipoly_to_latex(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const ParamScalar c = p.coefficient(static_cast<std::size_t>(k));
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!c.is_one() || k == 0) os << "\\big[" << param_to_latex(c) << "\\big]";
        if (k == 1) os << var;
        if (k > 1) os << var << "^{" << k << "}";
    }
    return os.str();
}

std::string latex_document(const std::string& math_body) {
    std::ostringstream os;
    os << "\\documentclass{article}\n"
       << "\\usepackage{amsmath}\n"
       << "\\usepackage[margin=1in]{geometry}\n"
       << "\\begin{document}\n"
       << "\\begin{align*}\n"
       << math_body << "\n"
       << "\\end{align*}\n"
       << "\\end{document}\n";
    return os.str();
}

nlohmann::json report_to_json(const Report& report) {
    nlohmann::json j;
    j["suite"] = report.suite;
    j["passed"] = report.all_passed();
    j["failures"] = report.failures();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json cj;
        // timings stay in the human-readable output; the JSON report is
        // byte-identical across runs for a fixed invocation and seed
        cj["name"] = c.name;
        cj["statement"] = c.statement;
        cj["passed"] = c.passed;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace bgforms
