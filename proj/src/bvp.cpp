#include "bgforms/bvp.hpp"

#include <sstream>

#include "bgforms/error.hpp"
#include "bgforms/special.hpp"

namespace bgforms {

namespace {

ParamScalar hb() { return ParamScalar::beta() * ParamScalar(Rational(1, 2)); }
ParamScalar lam() { return ParamScalar::lambda(); }
ParamScalar beta_s() { return ParamScalar::beta(); }
ParamScalar u_s() { return ParamScalar::u(); }
ParamScalar u_quarter() { return ParamScalar::u() * ParamScalar(Rational(1, 4)); }

// (j-s)(beta - 2 lambda - j + s) + 2(beta - lambda - j + s)
ParamScalar coeff_bracket(long j, long s) {
    const ParamScalar b = beta_s(), l = lam();
    return (ParamScalar(j - s)) * (b - ParamScalar(2) * l - ParamScalar(j) + ParamScalar(s)) +
           ParamScalar(2) * (b - l - ParamScalar(j) + ParamScalar(s));
}

FormOperator laplacian() { return FormOperator::x() + FormOperator::z(); }

// 1/((lambda-beta) * prod_{k=1..m} a_{2k}), defined for m >= 0
ParamScalar b_plus(int m) {
    ParamScalar denom = lam() - beta_s();
    for (int k = 1; k <= m; ++k) denom *= einstein_coefficients(2 * k).a;
    return denom.inverse();
}

FormOperator s_at(SumFamily family, int k, Slot slot) {
    return eval_at_slot(build_s(family, static_cast<unsigned>(k)), slot);
}

std::string idx_name(const char* base, int m) {
    std::ostringstream os;
    os << base << "[" << m << "]";
    return os.str();
}

}  // namespace

RecurrenceCoefficients einstein_coefficients(long j) {
    const ParamScalar b = beta_s(), l = lam();
    RecurrenceCoefficients r;
    r.A = -coeff_bracket(j, 2);
    r.B = ParamScalar(-3) * coeff_bracket(j, 4) +
          ParamScalar(2) * (b + ParamScalar(2)) * (l + ParamScalar(j));
    r.C = ParamScalar(3) * coeff_bracket(j, 6) -
          ParamScalar(4) * (b + ParamScalar(2)) * (l + ParamScalar(j - 3));
    r.D = -coeff_bracket(j, 8) +
          ParamScalar(2) * (b + ParamScalar(2)) * (l + ParamScalar(j - 6));
    r.a = ParamScalar(-j) * (b - ParamScalar(2) * l - ParamScalar(j));
    r.b = ParamScalar(2) * (ParamScalar(j - 2) * (l + ParamScalar(j - 2)) +
                            l * (b + ParamScalar(j - 2)));
    r.c = -(ParamScalar(2) * l + ParamScalar(j - 4)) * (b + ParamScalar(j - 4));
    return r;
}

ExpansionTable solve_einstein_recurrence(int m_max, bool mutate_B) {
    ExpansionTable table(m_max);
    table.set(0, FormOperator::one(), FormOperator::zero());
    const ParamScalar u4 = u_quarter();
    const FormOperator lap = laplacian();
    const FormOperator dd = FormOperator::d();
    const FormOperator del = FormOperator::delta();

    for (int m = 1; m <= m_max; ++m) {
        const long j = 2 * m;
        RecurrenceCoefficients co = einstein_coefficients(j);
        if (mutate_B) co.B += ParamScalar(1);

        const auto minus_at = [&](long idx) {
            return idx >= 0 ? table.minus(static_cast<int>(idx)) : FormOperator::zero();
        };
        const auto plus_at = [&](long idx) {
            return idx >= 0 ? table.plus(static_cast<int>(idx)) : FormOperator::zero();
        };

        FormOperator minus_rhs = (co.B * u4) * minus_at(j - 2);
        minus_rhs += (co.C * u4.pow(2)) * minus_at(j - 4);
        minus_rhs += (co.D * u4.pow(3)) * minus_at(j - 6);
        minus_rhs += lap * minus_at(j - 2);
        minus_rhs -= u4 * (lap * minus_at(j - 4));
        minus_rhs += ParamScalar(2) * (del * plus_at(j - 2));
        minus_rhs += (ParamScalar(2) * u4) * (del * plus_at(j - 4));
        const FormOperator w_minus = co.A.inverse() * minus_rhs;

        FormOperator plus_rhs = (co.b * u4) * plus_at(j - 2);
        plus_rhs += (co.c * u4.pow(2)) * plus_at(j - 4);
        plus_rhs += lap * plus_at(j - 2);
        plus_rhs += ParamScalar(2) * (dd * w_minus);
        plus_rhs -= (ParamScalar(2) * u4.pow(2)) * (dd * minus_at(j - 4));
        const FormOperator w_plus = co.a.inverse() * plus_rhs;

        table.set(static_cast<int>(j), w_plus, w_minus);
    }
    return table;
}

FormOperator solution_operator(OperatorSign sign, int m) {
    if (m < 0)
        throw AlgebraError(AlgebraError::Kind::invalid_argument, "solution operator index < 0");
    if (sign == OperatorSign::minus) {
        if (m == 0) return FormOperator::zero();
        return (b_plus(m - 1) * u_s().pow(m - 1)) *
               (s_at(SumFamily::s_minus, m - 1, Slot::y_minus) * FormOperator::delta());
    }
    if (m == 0) return FormOperator::one();
    const FormOperator core = (lam() - beta_s()) * s_at(SumFamily::s_plus, m, Slot::y_plus) +
                              s_at(SumFamily::s_one, m, Slot::y_one);
    return (b_plus(m) * u_s().pow(m)) * core;
}

FormOperator flat_solution_operator(OperatorSign sign, int j, const ParamScalar& beta) {
    if (j < 0)
        throw AlgebraError(AlgebraError::Kind::invalid_argument, "flat operator index < 0");
    const ParamScalar half = beta * ParamScalar(Rational(1, 2));
    const ParamScalar l = lam();
    if (sign == OperatorSign::minus) {
        if (j == 0) return FormOperator::zero();
        ParamScalar denom = ParamScalar(Rational(4)).pow(j - 1) *
                            ParamScalar(Rational(Integer::factorial(static_cast<unsigned long>(j - 1)), Integer(1))) *
                            pochhammer(l - half + ParamScalar(1), j - 1) * (l - beta);
        return FormOperator::delta_times(
            UniPoly::monomial(static_cast<std::size_t>(j - 1), denom.inverse()));
    }
    if (j == 0) return FormOperator::one();
    ParamScalar denom = ParamScalar(Rational(4)).pow(j) *
                        ParamScalar(Rational(Integer::factorial(static_cast<unsigned long>(j)), Integer(1))) *
                        pochhammer(l - half + ParamScalar(1), j) * (l - beta);
    const ParamScalar inv = denom.inverse();
    return inv * ((l - beta) * FormOperator::x(static_cast<std::size_t>(j)) +
                  (l - beta + ParamScalar(2 * j)) * FormOperator::z(static_cast<std::size_t>(j)));
}

FormOperator flat_solution_operator(OperatorSign sign, int j, int n, int p) {
    return flat_solution_operator(sign, j, ParamScalar(n - 2 * p));
}

FormOperator specialize_operator(const FormOperator& op, const std::optional<Rational>& beta,
                                 const std::optional<Rational>& lambda,
                                 const std::optional<Rational>& u) {
    try {
        FormOperator r = op;
        if (beta) r = r.substituted(Var::beta, ParamScalar(*beta));
        if (lambda) r = r.substituted(Var::lambda, ParamScalar(*lambda));
        if (u) r = r.substituted(Var::u, ParamScalar(*u));
        return r;
    } catch (const AlgebraError& e) {
        if (e.kind() == AlgebraError::Kind::division_by_zero)
            throw AlgebraError(AlgebraError::Kind::resonant_parameter,
                               "resonant parameter: specialization hit a denominator zero");
        throw;
    }
}

MultiPoly denominator_locus(const FormOperator& op) {
    MultiPoly locus(1);
    const auto fold = [&locus](const ParamScalar& c) {
        locus = MultiPoly::lcm(locus, c.den());
    };
    fold(op.scalar());
    for (const auto* part : {&op.x_part(), &op.z_part(), &op.delta_part(), &op.d_part()})
        for (const auto& c : part->coefficients()) fold(c);
    return locus;
}

Report verify_flat_recurrence(int j_max, bool negative_control) {
    const ParamScalar beta = negative_control ? beta_s() + ParamScalar(1) : beta_s();
    const FormOperator lap = laplacian();
    std::vector<NamedCheck> checks;
    for (int j = 1; j <= j_max; ++j) {
        checks.push_back(
            {idx_name("flat-recurrence", j),
             "[(2j-2)(2lambda-beta+2j-2)+2(lambda-beta+2j-2)] w-[2j] = Lap w-[2j-2] + 2 delta w+[2j-2];"
             " 2j(2lambda-beta+2j) w+[2j] = Lap w+[2j-2] + 2 d w-[2j]",
             [j, beta, lap](std::string& detail) {
                 const ParamScalar bf = ParamScalar::beta();  // operators built at the true beta
                 const FormOperator wm = flat_solution_operator(OperatorSign::minus, j, bf);
                 const FormOperator wp = flat_solution_operator(OperatorSign::plus, j, bf);
                 const FormOperator wm_prev = flat_solution_operator(OperatorSign::minus, j - 1, bf);
                 const FormOperator wp_prev = flat_solution_operator(OperatorSign::plus, j - 1, bf);
                 const ParamScalar l = ParamScalar::lambda();
                 const ParamScalar minus_coeff =
                     ParamScalar(2 * j - 2) * (ParamScalar(2) * l - beta + ParamScalar(2 * j - 2)) +
                     ParamScalar(2) * (l - beta + ParamScalar(2 * j - 2));
                 const ParamScalar plus_coeff =
                     ParamScalar(2 * j) * (ParamScalar(2) * l - beta + ParamScalar(2 * j));
                 if (minus_coeff * wm !=
                     lap * wm_prev + ParamScalar(2) * (FormOperator::delta() * wp_prev)) {
                     detail = "minus branch mismatch";
                     return false;
                 }
                 if (plus_coeff * wp != lap * wp_prev + ParamScalar(2) * (FormOperator::d() * wm)) {
                     detail = "plus branch mismatch";
                     return false;
                 }
                 return true;
             }});
    }
    return run_suite("flat-recurrence", std::move(checks));
}

Report verify_flat_einstein_consistency(int j_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(j_max));
    const ParamScalar flat_beta = negative_control ? beta_s() + ParamScalar(1) : beta_s();
    std::vector<NamedCheck> checks;
    for (int j = 1; j <= j_max; ++j) {
        checks.push_back(
            {idx_name("flat-einstein-consistency", j),
             "curved solution operators at u = 0 equal the flat closed forms",
             [j, flat_beta](std::string& detail) {
                 for (const auto sign : {OperatorSign::minus, OperatorSign::plus}) {
                     const FormOperator curved =
                         solution_operator(sign, j).substituted(Var::u, ParamScalar(0));
                     const FormOperator flat = flat_solution_operator(sign, j, flat_beta);
                     if (curved != flat) {
                         detail = sign == OperatorSign::minus ? "minus branch mismatch"
                                                              : "plus branch mismatch";
                         return false;
                     }
                 }
                 return true;
             }});
    }
    return run_suite("flat-einstein-consistency", std::move(checks));
}

namespace {

FormOperator x_shift_factor(const ParamScalar& c) {
    // x + c*u
    return FormOperator::from_x_polynomial(UniPoly{c * ParamScalar::u(), ParamScalar(1)});
}

FormOperator z_shift_factor(const ParamScalar& c) {
    return FormOperator::from_z_polynomial(UniPoly{c * ParamScalar::u(), ParamScalar(1)});
}

bool locus_is_exactly(const MultiPoly& locus, const std::vector<ParamScalar>& linear_factors,
                      std::string& detail) {
    // The locus must be divisible by every stated factor and have no lambda
    // zeros beyond them.
    MultiPoly rest = locus;
    for (const auto& f : linear_factors) {
        const auto q = MultiPoly::divide_exact(rest, f.num());
        if (!q) {
            detail = "stated factor missing from denominator locus: " + f.str();
            return false;
        }
        rest = *q;
    }
    if (rest.degree(Var::lambda) != 0) {
        detail = "denominator locus has unexpected lambda zeros: " + locus.str();
        return false;
    }
    return true;
}

}  // namespace

Report verify_einstein_displays() {
    warm_family_caches(4);
    const ExpansionTable table = solve_einstein_recurrence(3);
    const ParamScalar b = beta_s(), l = lam(), u4 = u_quarter();
    const ParamScalar h = hb();
    const FormOperator one = FormOperator::one();
    const FormOperator del = FormOperator::delta();

    const FormOperator r11 = x_shift_factor(h * (h - ParamScalar(1)));
    const FormOperator r12 = FormOperator::z();
    const FormOperator r10 = x_shift_factor(h * (h + ParamScalar(1)));
    const FormOperator r20 = x_shift_factor(h * (h + ParamScalar(1))) *
                             x_shift_factor((h - ParamScalar(1)) * (h + ParamScalar(2)));
    const FormOperator r21 = x_shift_factor((h - ParamScalar(1)) * h) *
                             x_shift_factor((h - ParamScalar(2)) * (h + ParamScalar(1)));
    const FormOperator r22 =
        (h * (h + ParamScalar(1)) * u_s()) * FormOperator::z() +
        FormOperator::z() * z_shift_factor((h - ParamScalar(1)) * (h + ParamScalar(2)));
    const FormOperator r31 = x_shift_factor((h - ParamScalar(1)) * h) *
                             x_shift_factor((h - ParamScalar(2)) * (h + ParamScalar(1))) *
                             x_shift_factor((h - ParamScalar(3)) * (h + ParamScalar(2)));
    const FormOperator r32 =
        ((h - ParamScalar(1)) * h * (h + ParamScalar(1)) * (h + ParamScalar(2)) * u_s().pow(2)) *
            FormOperator::z() +
        (h * (h + ParamScalar(1)) * u_s()) *
            (FormOperator::z() * z_shift_factor((h - ParamScalar(2)) * (h + ParamScalar(3)))) +
        FormOperator::z() * z_shift_factor((h - ParamScalar(1)) * (h + ParamScalar(2))) *
            z_shift_factor((h - ParamScalar(2)) * (h + ParamScalar(3)));

    const ParamScalar g2 = ParamScalar(2) * l - b + ParamScalar(2);
    const ParamScalar g4 = ParamScalar(2) * l - b + ParamScalar(4);
    const ParamScalar g6 = ParamScalar(2) * l - b + ParamScalar(6);
    const ParamScalar lb = l - b;

    std::vector<NamedCheck> checks;
    checks.push_back({"order-2-minus", "2(lambda-beta) w-[2] = 2 delta",
                      [&, table](std::string& detail) {
                          if (ParamScalar(2) * lb * table.minus(2) == ParamScalar(2) * del &&
                              table.minus(2) == lb.inverse() * del)
                              return true;
                          detail = "order-2 minus display mismatch";
                          return false;
                      }});
    checks.push_back(
        {"order-2-plus",
         "4(2lambda-beta+2)(lambda-beta) w+[2] = 2(lambda-beta) R1^1 + 2(lambda-beta+2) R1^2"
         " + 2(2lambda-beta+2)(lambda-beta) beta u/4",
         [&, table](std::string& detail) {
             const FormOperator lhs = (ParamScalar(4) * g2 * lb) * table.plus(2);
             const FormOperator rhs = (ParamScalar(2) * lb) * r11 +
                                      (ParamScalar(2) * (lb + ParamScalar(2))) * r12 +
                                      (ParamScalar(2) * g2 * lb * b * u4) * one;
             if (lhs == rhs) return true;
             detail = "order-2 plus display mismatch";
             return false;
         }});
    checks.push_back(
        {"order-4-minus",
         "4(2lambda-beta+2)(lambda-beta) w-[4] = 2 R1^0 delta + 2(2lambda-beta+2)(beta+4)(u/4) delta",
         [&, table](std::string& detail) {
             const FormOperator lhs = (ParamScalar(4) * g2 * lb) * table.minus(4);
             const FormOperator rhs = ParamScalar(2) * (r10 * del) +
                                      (ParamScalar(2) * g2 * (b + ParamScalar(4)) * u4) * del;
             if (lhs == rhs) return true;
             detail = "order-4 minus display mismatch";
             return false;
         }});
    checks.push_back(
        {"order-4-plus",
         "16(2lambda-beta+4)(2lambda-beta+2)(lambda-beta) w+[4] = [fourth-order display]",
         [&, table](std::string& detail) {
             const FormOperator lhs = (ParamScalar(16) * g4 * g2 * lb) * table.plus(4);
             const FormOperator rhs =
                 (ParamScalar(2) * lb) * r21 + (ParamScalar(2) * (lb + ParamScalar(4))) * r22 +
                 (ParamScalar(4) * g4 * lb * (b + ParamScalar(2)) * u4) * r11 +
                 (ParamScalar(4) * g4 *
                  (ParamScalar(2) * (lb + ParamScalar(4)) + b * lb) * u4) *
                     r12 +
                 (ParamScalar(2) * g4 * g2 * lb * b * (b + ParamScalar(2)) * u4.pow(2)) * one;
             if (lhs == rhs) return true;
             detail = "order-4 plus display mismatch";
             return false;
         }});
    checks.push_back(
        {"order-6-minus",
         "16(2lambda-beta+2)(2lambda-beta+4)(lambda-beta) w-[6] = [sixth-order minus display]",
         [&, table](std::string& detail) {
             const FormOperator lhs = (ParamScalar(16) * g2 * g4 * lb) * table.minus(6);
             const FormOperator rhs =
                 ParamScalar(2) * (r20 * del) +
                 (ParamScalar(4) * g4 * (b + ParamScalar(6)) * u4) * (r10 * del) +
                 (ParamScalar(2) * g2 * g4 * (b + ParamScalar(4)) * (b + ParamScalar(6)) *
                  u4.pow(2)) *
                     del;
             if (lhs == rhs) return true;
             detail = "order-6 minus display mismatch";
             return false;
         }});
    checks.push_back(
        {"order-6-plus",
         "96(2lambda-beta+6)(2lambda-beta+4)(2lambda-beta+2)(lambda-beta) w+[6] = [sixth-order display]",
         [&, table](std::string& detail) {
             const FormOperator lhs = (ParamScalar(96) * g6 * g4 * g2 * lb) * table.plus(6);
             const FormOperator rhs =
                 (ParamScalar(2) * lb) * r31 + (ParamScalar(2) * (lb + ParamScalar(6))) * r32 +
                 (ParamScalar(6) * g6 * lb * (b + ParamScalar(4)) * u4) * r21 +
                 (ParamScalar(6) * g6 *
                  (ParamScalar(4) * (lb + ParamScalar(6)) + b * (lb + ParamScalar(2))) * u4) *
                     r22 +
                 (ParamScalar(6) * g6 * g4 * lb * (b + ParamScalar(2)) * (b + ParamScalar(4)) *
                  u4.pow(2)) *
                     r11 +
                 (ParamScalar(6) * g6 * g4 *
                  (ParamScalar(2) * (lb + ParamScalar(6)) + b * (lb - ParamScalar(2))) *
                  (b + ParamScalar(4)) * u4.pow(2)) *
                     r12 +
                 (ParamScalar(2) * g6 * g4 * g2 * lb * b * (b + ParamScalar(2)) *
                  (b + ParamScalar(4)) * u4.pow(3)) *
                     one;
             if (lhs == rhs) return true;
             detail = "order-6 plus display mismatch";
             return false;
         }});
    checks.push_back(
        {"minus-denominator-loci",
         "singular sets of w-[2], w-[4], w-[6] are {beta}, {beta/2-1, beta}, {beta/2-1, beta/2-2, beta}",
         [&, table](std::string& detail) {
             const ParamScalar res1 = l - h + ParamScalar(1);
             const ParamScalar res2 = l - h + ParamScalar(2);
             if (!locus_is_exactly(denominator_locus(table.minus(2)), {lb}, detail)) return false;
             if (!locus_is_exactly(denominator_locus(table.minus(4)), {lb, res1}, detail))
                 return false;
             if (!locus_is_exactly(denominator_locus(table.minus(6)), {lb, res1, res2}, detail))
                 return false;
             return true;
         }});
    return run_suite("einstein-displays", std::move(checks));
}

bool einstein_x_sector_identity(int m) {
    const ParamScalar a2m = einstein_coefficients(2 * m).a;
    const ParamScalar b2m = einstein_coefficients(2 * m).b;
    const ParamScalar c2m = einstein_coefficients(2 * m).c;
    const FormOperator x_over_u =
        FormOperator::from_x_polynomial(UniPoly{ParamScalar(0), u_s().inverse()});
    FormOperator lhs = (a2m * b_plus(m)) * s_at(SumFamily::s_plus, m, Slot::y_plus);
    FormOperator rhs =
        b_plus(m - 1) * ((x_over_u + (b2m * ParamScalar(Rational(1, 4))) * FormOperator::one()) *
                         s_at(SumFamily::s_plus, m - 1, Slot::y_plus));
    if (m >= 2)
        rhs += (ParamScalar(Rational(1, 16)) * c2m * b_plus(m - 2)) *
               s_at(SumFamily::s_plus, m - 2, Slot::y_plus);
    return lhs == rhs;
}

bool einstein_z_sector_identity(int m) {
    const auto co = einstein_coefficients(2 * m);
    const ParamScalar inv_u = u_s().inverse();
    const FormOperator z_over_u =
        FormOperator::from_z_polynomial(UniPoly{ParamScalar(0), inv_u});
    const FormOperator del = FormOperator::delta();
    const FormOperator dd = FormOperator::d();

    FormOperator lhs = (co.a * b_plus(m)) * s_at(SumFamily::s_one, m, Slot::y_one);
    FormOperator rhs =
        b_plus(m - 1) * ((z_over_u + (co.b * ParamScalar(Rational(1, 4))) * FormOperator::one()) *
                         s_at(SumFamily::s_one, m - 1, Slot::y_one));
    if (m >= 2)
        rhs += (ParamScalar(Rational(1, 16)) * co.c * b_plus(m - 2)) *
               s_at(SumFamily::s_one, m - 2, Slot::y_one);
    rhs += (b_plus(m - 1) * (lam() - beta_s()) * inv_u) *
           (FormOperator::z() * s_at(SumFamily::s_plus, m - 1, Slot::y_plus));
    rhs += (ParamScalar(2) * b_plus(m - 1) * inv_u) *
           (dd * s_at(SumFamily::s_minus, m - 1, Slot::y_minus) * del);
    if (m >= 3)
        rhs -= (ParamScalar(Rational(1, 8)) * b_plus(m - 3) * inv_u) *
               (dd * s_at(SumFamily::s_minus, m - 3, Slot::y_minus) * del);
    return lhs == rhs;
}

bool einstein_delta_sector_identity(int m) {
    const auto co = einstein_coefficients(2 * m);
    const ParamScalar inv_u = u_s().inverse();
    const FormOperator del = FormOperator::delta();
    const FormOperator lap = laplacian();

    FormOperator lhs =
        (co.A * b_plus(m - 1)) * (s_at(SumFamily::s_minus, m - 1, Slot::y_minus) * del);
    FormOperator rhs = ParamScalar(2) * b_plus(m - 1) *
                       (del * ((lam() - beta_s()) * s_at(SumFamily::s_plus, m - 1, Slot::y_plus) +
                               s_at(SumFamily::s_one, m - 1, Slot::y_one)));
    if (m >= 2) {
        rhs += (ParamScalar(Rational(1, 4)) * co.B * b_plus(m - 2)) *
               (s_at(SumFamily::s_minus, m - 2, Slot::y_minus) * del);
        rhs += (inv_u * b_plus(m - 2)) *
               (lap * s_at(SumFamily::s_minus, m - 2, Slot::y_minus) * del);
        rhs += (ParamScalar(Rational(1, 2)) * b_plus(m - 2)) *
               (del * ((lam() - beta_s()) * s_at(SumFamily::s_plus, m - 2, Slot::y_plus) +
                       s_at(SumFamily::s_one, m - 2, Slot::y_one)));
    }
    if (m >= 3) {
        rhs += (ParamScalar(Rational(1, 16)) * co.C * b_plus(m - 3)) *
               (s_at(SumFamily::s_minus, m - 3, Slot::y_minus) * del);
        rhs -= (ParamScalar(Rational(1, 4)) * inv_u * b_plus(m - 3)) *
               (lap * s_at(SumFamily::s_minus, m - 3, Slot::y_minus) * del);
    }
    if (m >= 4)
        rhs += (ParamScalar(Rational(1, 64)) * co.D * b_plus(m - 4)) *
               (s_at(SumFamily::s_minus, m - 4, Slot::y_minus) * del);
    return lhs == rhs;
}

Report verify_solution_theorem(int m_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(m_max));
    const ExpansionTable table = solve_einstein_recurrence(m_max, negative_control);
    std::vector<NamedCheck> checks;
    for (int m = 1; m <= m_max; ++m) {
        const FormOperator plus_entry = table.plus(2 * m);
        const FormOperator minus_entry = table.minus(2 * m);
        checks.push_back({idx_name("solution-operator-equality", m),
                          "w[2m] = T[m] applied to the boundary datum",
                          [m, plus_entry, minus_entry](std::string& detail) {
                              if (plus_entry != solution_operator(OperatorSign::plus, m)) {
                                  detail = "plus entry differs from closed form";
                                  return false;
                              }
                              if (minus_entry != solution_operator(OperatorSign::minus, m)) {
                                  detail = "minus entry differs from closed form";
                                  return false;
                              }
                              return true;
                          }});
        checks.push_back({idx_name("sector-identities", m),
                          "x-, z- and delta-sector recurrence identities for the closed forms",
                          [m](std::string& detail) {
                              if (!einstein_x_sector_identity(m)) {
                                  detail = "x-sector identity failed";
                                  return false;
                              }
                              if (!einstein_z_sector_identity(m)) {
                                  detail = "z-sector identity failed";
                                  return false;
                              }
                              if (!einstein_delta_sector_identity(m)) {
                                  detail = "delta-sector identity failed";
                                  return false;
                              }
                              return true;
                          }});
    }
    return run_suite("solution-theorem", std::move(checks));
}

}  // namespace bgforms
