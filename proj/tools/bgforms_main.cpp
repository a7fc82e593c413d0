// Command-line front end: verification suites, operator evaluation/emission
// and the residue report.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "bgforms/branson_gover.hpp"
#include "bgforms/bvp.hpp"
#include "bgforms/error.hpp"
#include "bgforms/special.hpp"
#include "bgforms/suites.hpp"
#include "bgforms/textio.hpp"

namespace {

using namespace bgforms;

void print_human(const Report& report, std::ostream& os) {
    for (const auto& c : report.checks) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.passed && !c.detail.empty()) os << "  [" << c.detail << "]";
        os << "  (" << std::fixed << std::setprecision(1) << c.millis << " ms)\n";
        os.unsetf(std::ios::fixed);
        if (!c.passed) os << "      " << c.statement << "\n";
    }
    os << report.suite << ": " << (report.checks.size() - report.failures()) << "/"
       << report.checks.size() << " checks passed\n";
}

int cmd_verify(const SuiteSelector& sel, bool with_controls, const std::string& format,
               const std::string& json_out) {
    Report report = run_verification_suite(sel);
    if (with_controls || sel.suite == "all") report.append(run_negative_controls(sel));

    const nlohmann::json j = report_to_json(report);
    if (!json_out.empty()) {
        std::ofstream f(json_out);
        f << j.dump(2) << "\n";
    }
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        print_human(report, std::cout);
    return report.all_passed() ? 0 : 1;
}

std::string render_form(const FormOperator& op, const std::string& format) {
    if (format == "json") return form_to_json(op).dump(2);
    if (format == "latex") return latex_document(form_to_latex(op));
    return form_to_text(op);
}

std::string render_poly(const UniPoly& p, const std::string& format) {
    if (format == "json") return unipoly_to_json(p).dump(2);
    if (format == "latex") return latex_document(unipoly_to_latex(p));
    return p.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and emission of form-Laplacian boundary expansion operators"};
    app.require_subcommand(1);

    // ---- verify ----
    SuiteSelector sel;
    std::string verify_format = "text";
    std::string json_out;
    bool with_controls = false;
    int opt_n = -1, opt_p = -1;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", sel.suite, "suite name")->default_val("all");
    verify->add_option("--m-max", sel.m_max, "polynomial index bound")->default_val(8);
    verify->add_option("--n-max", sel.n_max, "operator order bound")->default_val(6);
    verify->add_option("--trials", sel.trials, "oracle trials")->default_val(20);
    verify->add_option("--dimension", sel.dimension, "oracle matrix dimension")->default_val(8);
    verify->add_option("--seed", sel.seed, "oracle seed")->default_val(42);
    verify->add_option("--n", opt_n, "dimension n (validates p against it)");
    verify->add_option("--p", opt_p, "form degree p");
    verify->add_flag("--negative-controls", with_controls,
                     "also run the designated mutations (implied by --suite all)");
    verify->add_option("--format", verify_format, "text|json")->default_val("text");
    verify->add_option("--json-out", json_out, "write the JSON report to a file");

    // ---- eval ----
    std::string target, tag = "sMinus", sign = "minus", eval_format = "text";
    int em = 0, eN = 1, en = -1, ep = -1;
    auto* eval = app.add_subcommand("eval", "print an object in text, JSON or LaTeX");
    eval->add_option("target", target, "sPoly|solutionOp|bgOp|critical")->required();
    eval->add_option("--tag", tag, "sMinus|sPlus|sOne (for sPoly)");
    eval->add_option("--m", em, "family / operator index");
    eval->add_option("--sign", sign, "minus|plus (for solutionOp)");
    eval->add_option("--N", eN, "operator order parameter");
    eval->add_option("--n", en, "dimension (optional for bgOp; required for critical)");
    eval->add_option("--p", ep, "form degree");
    eval->add_option("--format", eval_format, "text|json|latex")->default_val("text");

    // ---- residue ----
    int rN = 0;
    std::string residue_format = "text";
    auto* residue = app.add_subcommand("residue", "residue of the order-2N solution operator");
    residue->add_option("--N", rN, "order parameter (>= 1)")->required();
    residue->add_option("--format", residue_format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (!is_valid_suite(sel.suite)) {
                std::cerr << "error: unknown suite '" << sel.suite << "'\n";
                return 2;
            }
            if ((opt_n >= 0) != (opt_p >= 0)) {
                std::cerr << "error: --n and --p must be given together\n";
                return 2;
            }
            if (opt_n >= 0) {
                if (opt_n < 3 || opt_p < 0 || opt_p > opt_n) {
                    std::cerr << "error: require n >= 3 and 0 <= p <= n\n";
                    return 2;
                }
            }
            return cmd_verify(sel, with_controls, verify_format, json_out);
        }

        if (eval->parsed()) {
            if (target == "sPoly") {
                SumFamily family;
                if (tag == "sMinus")
                    family = SumFamily::s_minus;
                else if (tag == "sPlus")
                    family = SumFamily::s_plus;
                else if (tag == "sOne")
                    family = SumFamily::s_one;
                else {
                    std::cerr << "error: --tag must be sMinus|sPlus|sOne\n";
                    return 2;
                }
                if (em < 0) {
                    std::cerr << "error: --m must be >= 0\n";
                    return 2;
                }
                std::cout << render_poly(build_s(family, static_cast<unsigned>(em)), eval_format)
                          << "\n";
                return 0;
            }
            if (target == "solutionOp") {
                if (em < 0) {
                    std::cerr << "error: --m must be >= 0\n";
                    return 2;
                }
                const OperatorSign s = sign == "plus" ? OperatorSign::plus : OperatorSign::minus;
                std::cout << render_form(solution_operator(s, em), eval_format) << "\n";
                return 0;
            }
            if (target == "bgOp") {
                if (eN < 1) {
                    std::cerr << "error: --N must be >= 1\n";
                    return 2;
                }
                FormOperator op;
                if (en >= 0 || ep >= 0) {
                    BGSpec spec{eN, en, ep};
                    spec.validate();
                    op = bg_operator(spec);
                } else {
                    op = bg_operator(eN, ParamScalar::beta());
                }
                std::cout << render_form(op, eval_format) << "\n";
                return 0;
            }
            if (target == "critical") {
                if (en < 3 || ep < 0 || ep > en) {
                    std::cerr << "error: critical requires n >= 3 and 0 <= p <= n\n";
                    return 2;
                }
                const CriticalOperators ops = critical_operators(en, ep);
                if (eval_format == "json") {
                    nlohmann::json j;
                    j["L"] = form_to_json(ops.L);
                    j["Q"] = form_to_json(ops.Q);
                    j["G"] = form_to_json(ops.G);
                    std::cout << j.dump(2) << "\n";
                } else if (eval_format == "latex") {
                    std::cout << latex_document("L &= " + form_to_latex(ops.L) + "\\\\\nQ &= " +
                                                form_to_latex(ops.Q) + "\\\\\nG &= " +
                                                form_to_latex(ops.G))
                              << "\n";
                } else {
                    std::cout << "L = " << form_to_text(ops.L) << "\n"
                              << "Q = " << form_to_text(ops.Q) << "\n"
                              << "G = " << form_to_text(ops.G) << "\n";
                }
                return 0;
            }
            std::cerr << "error: unknown eval target '" << target << "'\n";
            return 2;
        }

        if (residue->parsed()) {
            if (rN < 1) {
                std::cerr << "error: --N must be >= 1\n";
                return 2;
            }
            const ResidueLink link = residue_link(rN);
            if (residue_format == "json") {
                nlohmann::json j;
                j["N"] = rN;
                j["simplePole"] = link.simple_pole;
                j["scalar"] = link.scalar.str();
                j["residue"] = form_to_json(link.residue_op);
                j["operator"] = form_to_json(link.bg_op);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "residue scalar = " << link.scalar.str() << "\n"
                          << "residue operator = " << form_to_text(link.residue_op) << "\n"
                          << "order-2N operator = " << form_to_text(link.bg_op) << "\n"
                          << "simple pole: " << (link.simple_pole ? "yes" : "no") << "\n";
            }
            return 0;
        }
    } catch (const AlgebraError& e) {
        if (e.kind() == AlgebraError::Kind::invalid_argument) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
