#include "bgforms/branson_gover.hpp"

#include <sstream>

#include "bgforms/error.hpp"
#include "bgforms/special.hpp"

namespace bgforms {

namespace {

ParamScalar lam() { return ParamScalar::lambda(); }
ParamScalar beta_f() { return ParamScalar::beta(); }
ParamScalar u_s() { return ParamScalar::u(); }

ParamScalar half(const ParamScalar& beta) { return beta * ParamScalar(Rational(1, 2)); }

FormOperator x_factor(const ParamScalar& c) {
    // x + c*u
    return FormOperator::from_x_polynomial(UniPoly{c * ParamScalar::u(), ParamScalar(1)});
}

FormOperator z_factor(const ParamScalar& c) {
    return FormOperator::from_z_polynomial(UniPoly{c * ParamScalar::u(), ParamScalar(1)});
}

FormOperator maybe_substitute_beta(FormOperator op, const ParamScalar& beta) {
    if (beta == ParamScalar::beta()) return op;
    return op.substituted(Var::beta, beta);
}

std::string idx_name(const char* base, int m) {
    std::ostringstream os;
    os << base << "[" << m << "]";
    return os.str();
}

}  // namespace

void BGSpec::validate() const {
    if (N < 1 || n < 3 || p < 0 || p > n)
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "operator parameters require N >= 1, n >= 3 and 0 <= p <= n");
}

bool BGSpec::exceptional() const {
    if (n % 2 != 0) return false;
    // (beta/2 - N + 1)_{2N-1} vanishes iff beta/2 is an integer in [-(N-1), N-1].
    const int b = beta();
    if (b % 2 != 0) return false;
    const int l = b / 2;
    return l > -(N) && l < N;  // covers beta/2 = l in {-(N-1)..N-1}
}

FormOperator bg_operator(int N, const ParamScalar& beta) {
    if (N < 1)
        throw AlgebraError(AlgebraError::Kind::invalid_argument, "operator order requires N >= 1");
    const ParamScalar h = half(beta_f());
    const FormOperator formal =
        u_s().pow(N) * ((h + ParamScalar(N)) *
                            eval_at_slot(build_r(static_cast<unsigned>(N), ParamScalar(0)), Slot::y_plus) +
                        (h - ParamScalar(N)) *
                            eval_at_slot(build_r1(static_cast<unsigned>(N)), Slot::y_one));
    return maybe_substitute_beta(formal, beta);
}

FormOperator bg_operator(const BGSpec& spec) {
    spec.validate();
    return bg_operator(spec.N, ParamScalar(spec.beta()));
}

FormOperator bg_normalized(int N, const ParamScalar& beta) {
    const ParamScalar norm = pochhammer(half(beta) - ParamScalar(N) + ParamScalar(1), 2 * N - 1);
    return norm * bg_operator(N, beta);
}

std::vector<FormOperator> bg_factors(int N, const ParamScalar& beta) {
    const ParamScalar h = half(beta);
    std::vector<FormOperator> factors;
    for (int l = 1; l <= N; ++l) {
        const ParamScalar pa = h + ParamScalar(N - l + 1);
        const ParamScalar pb = h - ParamScalar(N) + ParamScalar(l);
        const ParamScalar pc = h + ParamScalar(N - l);
        const ParamScalar pd = h - ParamScalar(N) + ParamScalar(l - 1);
        FormOperator f = FormOperator::from_parts(
            pd * pb * pc * pa * u_s(),
            UniPoly::monomial(1, pa * pb),
            UniPoly::monomial(1, pc * pd), UniPoly(), UniPoly());
        factors.push_back(std::move(f));
    }
    return factors;
}

std::vector<FormOperator> bg_unnormalized_factors(int N, const ParamScalar& beta) {
    const ParamScalar h = half(beta);
    std::vector<FormOperator> factors;
    for (int k = 1; k <= N; ++k) {
        const ParamScalar cx = (beta + ParamScalar(2 * k)) / (beta + ParamScalar(2 * k - 2));
        const ParamScalar cz = (beta - ParamScalar(2 * k)) / (beta - ParamScalar(2 * k - 2));
        factors.push_back(FormOperator::from_parts(
            (h - ParamScalar(k)) * (h + ParamScalar(k)) * u_s(), UniPoly::monomial(1, cx),
            UniPoly::monomial(1, cz), UniPoly(), UniPoly()));
    }
    return factors;
}

Report verify_bg_recurrence(int N_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(N_max));
    const ParamScalar h = half(beta_f());
    std::vector<NamedCheck> checks;
    for (int N = 1; N <= N_max; ++N) {
        checks.push_back(
            {idx_name("bg-recurrence", N),
             "Lbar[2N] = [(b/2+N)(b/2-N+1) x + (b/2+N-1)(b/2-N) z"
             " + (b/2-N)(b/2-N+1)(b/2+N-1)(b/2+N) u] Lbar[2N-2]",
             [N, h, negative_control](std::string& detail) {
                 const FormOperator prev =
                     N == 1 ? FormOperator::one() : bg_normalized(N - 1, ParamScalar::beta());
                 ParamScalar cx = (h + ParamScalar(N)) * (h - ParamScalar(N) + ParamScalar(1));
                 ParamScalar cz = (h + ParamScalar(N) - ParamScalar(1)) * (h - ParamScalar(N));
                 if (negative_control) std::swap(cx, cz);
                 const ParamScalar cu = (h - ParamScalar(N)) * (h - ParamScalar(N) + ParamScalar(1)) *
                                        (h + ParamScalar(N) - ParamScalar(1)) * (h + ParamScalar(N));
                 const FormOperator step = FormOperator::from_parts(
                     cu * ParamScalar::u(), UniPoly::monomial(1, cx), UniPoly::monomial(1, cz),
                     UniPoly(), UniPoly());
                 if (bg_normalized(N, ParamScalar::beta()) == step * prev) return true;
                 detail = "recurrence step mismatch";
                 return false;
             }});
        checks.push_back(
            {idx_name("bg-leading-structure", N),
             "L[2N] = (b/2+N)(delta d)^N + (b/2-N)(d delta)^N + lower order; at u=0 exactly",
             [N, h](std::string& detail) {
                 const FormOperator L = bg_operator(N, ParamScalar::beta());
                 if (!L.is_degree_preserving()) {
                     detail = "unexpected delta/d component";
                     return false;
                 }
                 if (L.x_part().coefficient(static_cast<std::size_t>(N)) != h + ParamScalar(N) ||
                     L.z_part().coefficient(static_cast<std::size_t>(N)) != h - ParamScalar(N)) {
                     detail = "leading coefficients mismatch";
                     return false;
                 }
                 const FormOperator flat = L.substituted(Var::u, ParamScalar(0));
                 const FormOperator expected =
                     (h + ParamScalar(N)) * FormOperator::x(static_cast<std::size_t>(N)) +
                     (h - ParamScalar(N)) * FormOperator::z(static_cast<std::size_t>(N));
                 if (flat != expected) {
                     detail = "u = 0 specialization mismatch";
                     return false;
                 }
                 if (L.u_degree() > N) {
                     detail = "u-degree exceeds N";
                     return false;
                 }
                 return true;
             }});
    }
    return run_suite("bg-recurrence", std::move(checks));
}

Report verify_bg_factorization(int N_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(N_max));
    std::vector<NamedCheck> checks;
    for (int N = 1; N <= N_max; ++N) {
        checks.push_back(
            {idx_name("bg-factorization", N),
             "Lbar[2N] equals the ordered product of the N second-order factors",
             [N, negative_control](std::string& detail) {
                 auto factors = bg_factors(N, ParamScalar::beta());
                 if (negative_control)
                     factors[0] += ParamScalar::u() * FormOperator::one();
                 FormOperator prod = FormOperator::one();
                 for (const auto& f : factors) prod *= f;
                 if (prod == bg_normalized(N, ParamScalar::beta())) return true;
                 detail = "factor product mismatch";
                 return false;
             }});
        checks.push_back(
            {idx_name("bg-unnormalized-product", N),
             "L[2N] = (beta/2) * prod_k [(b+2k)/(b+2k-2) x + (b-2k)/(b-2k+2) z + (b/2-k)(b/2+k) u]",
             [N](std::string& detail) {
                 FormOperator prod = FormOperator::one();
                 for (const auto& f : bg_unnormalized_factors(N, ParamScalar::beta())) prod *= f;
                 if ((ParamScalar::beta() * ParamScalar(Rational(1, 2))) * prod ==
                     bg_operator(N, ParamScalar::beta()))
                     return true;
                 detail = "unnormalized product mismatch";
                 return false;
             }});
        if (N <= 4)
            checks.push_back(
                {idx_name("bg-factors-commute", N),
                 "all transpositions of the second-order factors agree",
                 [N](std::string& detail) {
                     const auto factors = bg_factors(N, ParamScalar::beta());
                     for (std::size_t i = 0; i < factors.size(); ++i)
                         for (std::size_t j = i + 1; j < factors.size(); ++j)
                             if (factors[i] * factors[j] != factors[j] * factors[i]) {
                                 detail = "factors do not commute";
                                 return false;
                             }
                     return true;
                 }});
    }
    return run_suite("bg-factorization", std::move(checks));
}

ExceptionalFactorization bg_exceptional(int l, int N) {
    if (N < 1 || l < 0 || l >= N)
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "exceptional factorization requires 0 <= l <= N-1");
    ExceptionalFactorization out;
    if (l == 0) {
        out.fourth_order =
            ParamScalar(N) * (FormOperator::x() - FormOperator::z());
        for (int k = 2; k <= N; ++k)
            out.tail.push_back(FormOperator::from_parts(
                ParamScalar(-static_cast<long>(k) * (k - 1)) * u_s(), UniPoly::monomial(1, ParamScalar(1)),
                UniPoly::monomial(1, ParamScalar(1)), UniPoly(), UniPoly()));
    } else {
        const ParamScalar lc(static_cast<long>(l));
        const FormOperator first = FormOperator::from_parts(
            ParamScalar(0),
            UniPoly::monomial(1, (ParamScalar(2) * lc + ParamScalar(1)) * ParamScalar(Rational(1, 2))),
            UniPoly::monomial(1, (ParamScalar(2) * lc - ParamScalar(1)) * ParamScalar(Rational(1, 2))),
            UniPoly(), UniPoly());
        const FormOperator second = FormOperator::from_parts(
            ParamScalar(2) * lc * u_s(), UniPoly::monomial(1, ParamScalar(-1)),
            UniPoly::monomial(1, ParamScalar(1)), UniPoly(), UniPoly());
        out.fourth_order = first * second;
        for (int k = 1; k <= N; ++k) {
            if (k == l || k == l + 1) continue;
            const ParamScalar cx = ParamScalar(l + k) / ParamScalar(l + k - 1);
            const ParamScalar cz = ParamScalar(l - k) / ParamScalar(l - k + 1);
            out.tail.push_back(FormOperator::from_parts(
                ParamScalar(static_cast<long>(l - k)) * ParamScalar(static_cast<long>(l + k)) * u_s(),
                UniPoly::monomial(1, cx), UniPoly::monomial(1, cz), UniPoly(), UniPoly()));
        }
    }
    FormOperator prod = out.fourth_order;
    for (const auto& f : out.tail) prod *= f;
    if (l >= 1)
        prod = (ParamScalar(-2 * static_cast<long>(l)) / ParamScalar(2 * static_cast<long>(l) - 1)) * prod;
    out.product = prod;
    return out;
}

Report verify_bg_exceptional(int N_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(N_max));
    std::vector<NamedCheck> checks;
    for (int N = 1; N <= N_max; ++N) {
        for (int l = 0; l < N; ++l) {
            std::ostringstream name;
            name << "bg-exceptional[l=" << l << ",N=" << N << "]";
            checks.push_back(
                {name.str(),
                 "factored form at beta = 2l equals the order-2N operator",
                 [l, N, negative_control](std::string& detail) {
                     auto fact = bg_exceptional(l, N);
                     FormOperator product = fact.product;
                     if (negative_control) product = -product;
                     if (product == bg_operator(N, ParamScalar(2 * static_cast<long>(l))))
                         return true;
                     detail = "exceptional product mismatch";
                     return false;
                 }});
        }
    }
    return run_suite("bg-exceptional", std::move(checks));
}

CriticalOperators critical_operators(int n, int p) {
    if (n % 2 != 0)
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "critical operator requires even dimension");
    const int beta = n - 2 * p;
    if (beta <= 0)
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "critical operator requires beta = n - 2p > 0");
    CriticalOperators ops;
    const ParamScalar scale(static_cast<long>(beta));
    FormOperator lx = FormOperator::x();
    FormOperator qz = FormOperator::one();
    for (int l = 1; l <= beta / 2 - 1; ++l) {
        const ParamScalar c = (ParamScalar(beta) * ParamScalar(Rational(1, 2)) - ParamScalar(l)) *
                              (ParamScalar(beta) * ParamScalar(Rational(1, 2)) + ParamScalar(l - 1));
        lx *= x_factor(c);
        qz *= z_factor(c);
    }
    ops.L = scale * lx;
    ops.Q = scale * qz;
    ops.G = FormOperator::delta() * ops.Q;
    return ops;
}

Report verify_critical(const std::vector<int>& betas, bool negative_control) {
    std::vector<NamedCheck> checks;
    for (const int beta : betas) {
        const int n = beta + 2, p = 1;
        std::ostringstream name;
        name << "critical[beta=" << beta << "]";
        checks.push_back(
            {name.str(),
             "L = (n-2p) delta d prod[delta d + (b/2-l)(b/2+l-1) u]; L = G d = delta Q d;"
             " u = 0 forms of L, Q, G",
             [beta, n, p, negative_control](std::string& detail) {
                 CriticalOperators ops = critical_operators(n, p);
                 if (negative_control) {
                     // wrong-side realization of the companion operator
                     FormOperator qx = ParamScalar(static_cast<long>(beta)) * FormOperator::one();
                     for (int l = 1; l <= beta / 2 - 1; ++l) {
                         const ParamScalar c =
                             (ParamScalar(beta) * ParamScalar(Rational(1, 2)) - ParamScalar(l)) *
                             (ParamScalar(beta) * ParamScalar(Rational(1, 2)) + ParamScalar(l - 1));
                         qx *= x_factor(c);
                     }
                     ops.Q = qx;
                     ops.G = FormOperator::delta() * ops.Q;
                 }
                 const int N = beta / 2;
                 BGSpec spec;
                 spec.N = N;
                 spec.n = n;
                 spec.p = p;
                 if (ops.L != bg_operator(spec)) {
                     detail = "product formula differs from the order-beta operator";
                     return false;
                 }
                 if (ops.L != ops.G * FormOperator::d()) {
                     detail = "L != G d";
                     return false;
                 }
                 if (ops.L != FormOperator::delta() * ops.Q * FormOperator::d()) {
                     detail = "L != delta Q d";
                     return false;
                 }
                 const ParamScalar zero(0);
                 const FormOperator q0 = ops.Q.substituted(Var::u, zero);
                 const FormOperator g0 = ops.G.substituted(Var::u, zero);
                 const FormOperator l0 = ops.L.substituted(Var::u, zero);
                 const ParamScalar sc(static_cast<long>(beta));
                 if (q0 != sc * FormOperator::z(static_cast<std::size_t>(N - 1))) {
                     detail = "flat companion mismatch";
                     return false;
                 }
                 if (g0 != sc * (FormOperator::x(static_cast<std::size_t>(N - 1)) *
                                 FormOperator::delta())) {
                     detail = "flat gauge companion mismatch";
                     return false;
                 }
                 if (l0 != sc * FormOperator::x(static_cast<std::size_t>(N))) {
                     detail = "flat critical operator mismatch";
                     return false;
                 }
                 return true;
             }});
    }
    return run_suite("critical", std::move(checks));
}

ParamScalar coefficient_residue(const ParamScalar& f, const ParamScalar& pole_location) {
    if (!pole_location.is_polynomial())
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "pole location must be polynomial in beta");
    const MultiPoly q = MultiPoly::variable(Var::lambda) - pole_location.num();
    MultiPoly den = f.den();
    int multiplicity = 0;
    for (;;) {
        const auto quotient = MultiPoly::divide_exact(den, q);
        if (!quotient) break;
        den = *quotient;
        ++multiplicity;
    }
    if (multiplicity == 0) return ParamScalar(0);
    if (multiplicity > 1)
        throw AlgebraError(AlgebraError::Kind::unexpected_pole_structure,
                           "unexpected pole structure: pole order exceeds one");
    const ParamScalar num_at = substitute_into_poly(f.num(), Var::lambda, pole_location);
    const ParamScalar den_at = substitute_into_poly(den, Var::lambda, pole_location);
    return num_at / den_at;
}

FormOperator operator_residue(const FormOperator& op, const ParamScalar& pole_location,
                              bool& saw_pole) {
    saw_pole = false;
    const auto res = [&](const ParamScalar& c) {
        const ParamScalar r = coefficient_residue(c, pole_location);
        if (!r.is_zero()) saw_pole = true;
        return r;
    };
    return FormOperator::from_parts(res(op.scalar()), op.x_part().mapped(res),
                                    op.z_part().mapped(res), op.delta_part().mapped(res),
                                    op.d_part().mapped(res));
}

ResidueLink residue_link(int N) {
    if (N < 1)
        throw AlgebraError(AlgebraError::Kind::invalid_argument, "residue link requires N >= 1");
    ResidueLink link;
    const FormOperator T = solution_operator(OperatorSign::plus, N);
    const ParamScalar pole = half(beta_f()) - ParamScalar(N);
    link.residue_op = operator_residue(T, pole, link.simple_pole);
    link.bg_op = bg_operator(N, ParamScalar::beta());

    // proportionality scalar from the first nonzero coefficient pair
    const auto ratio_from = [](const UniPoly& r, const UniPoly& g) -> std::optional<ParamScalar> {
        const int top = std::max(r.degree(), g.degree());
        for (int k = 0; k <= top; ++k) {
            const ParamScalar rc = r.coefficient(static_cast<std::size_t>(k));
            const ParamScalar gc = g.coefficient(static_cast<std::size_t>(k));
            if (!gc.is_zero()) return rc / gc;
            if (!rc.is_zero()) return std::nullopt;  // residue has support where bg has none
        }
        return std::nullopt;
    };
    std::optional<ParamScalar> scalar;
    if (!link.bg_op.scalar().is_zero())
        scalar = link.residue_op.scalar() / link.bg_op.scalar();
    if (!scalar) scalar = ratio_from(link.residue_op.x_part(), link.bg_op.x_part());
    if (!scalar) scalar = ratio_from(link.residue_op.z_part(), link.bg_op.z_part());
    if (!scalar)
        throw AlgebraError(AlgebraError::Kind::internal,
                           "no coefficient available to compute the residue ratio");
    link.scalar = *scalar;
    return link;
}

Report verify_residue_link(int N_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(N_max));
    std::vector<NamedCheck> checks;
    for (int N = 1; N <= N_max; ++N) {
        checks.push_back(
            {idx_name("residue-link", N),
             "Res[lambda = beta/2-N] T+[N] is a simple pole and a nonzero multiple of L[2N]",
             [N, negative_control](std::string& detail) {
                 const ResidueLink link = residue_link(N);
                 if (!link.simple_pole) {
                     detail = "no pole found at the resonance";
                     return false;
                 }
                 if (link.scalar.is_zero()) {
                     detail = "vanishing proportionality scalar";
                     return false;
                 }
                 FormOperator bg = link.bg_op;
                 if (negative_control)
                     bg = FormOperator::from_parts(bg.scalar(), bg.x_part(), -bg.z_part(),
                                                   bg.delta_part(), bg.d_part());
                 if (link.residue_op != link.scalar * bg) {
                     detail = "residue is not proportional to the operator";
                     return false;
                 }
                 // independently derived closed form of the multiple
                 Rational fact(1);
                 for (int i = 1; i <= N - 1; ++i) fact *= Rational(i);
                 const Rational lead = Rational(4).pow(N) * Rational(N) * fact * fact;
                 ParamScalar expected =
                     ParamScalar(1) /
                     (ParamScalar(lead) * (half(beta_f()) + ParamScalar(N)));
                 if (N % 2 == 0) expected = -expected;
                 if (link.scalar != expected) {
                     detail = "proportionality scalar differs from the derived closed form";
                     return false;
                 }
                 return true;
             }});
    }
    checks.push_back(
        {"residue-off-resonance",
         "the residue at a non-resonant location vanishes",
         [N_max](std::string& detail) {
             bool saw = false;
             const FormOperator r = operator_residue(
                 solution_operator(OperatorSign::plus, std::min(N_max, 2)),
                 half(beta_f()) + ParamScalar(1), saw);
             if (saw || !r.is_zero()) {
                 detail = "spurious residue off the resonance set";
                 return false;
             }
             return true;
         }});
    return run_suite("residue-link", std::move(checks));
}

}  // namespace bgforms
