#include "bgforms/hypergeom.hpp"

#include <sstream>

#include "bgforms/error.hpp"
#include "bgforms/special.hpp"

namespace bgforms {

namespace {

ParamScalar half_beta() { return ParamScalar::beta() * ParamScalar(Rational(1, 2)); }

std::optional<long> nonpositive_integer(const ParamScalar& s) {
    if (!s.is_integer()) return std::nullopt;
    const long v = s.constant_value().to_long();
    return v <= 0 ? std::optional<long>(-v) : std::nullopt;
}

std::string idx_name(const char* base, int m) {
    std::ostringstream os;
    os << base << "[m=" << m << "]";
    return os.str();
}

}  // namespace

ParamScalar pfq_terminating(const HypergeomSpec& spec) {
    std::optional<long> cap = spec.terms_cap;
    for (const auto& a : spec.upper) {
        if (const auto t = nonpositive_integer(a)) {
            if (!cap || *t < *cap) cap = *t;
        }
    }
    if (!cap)
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "hypergeometric series does not terminate and no term cap was given");

    ParamScalar sum(1);
    ParamScalar term(1);
    for (long l = 0; l < *cap; ++l) {
        ParamScalar num(1);
        for (const auto& a : spec.upper) num *= a + ParamScalar(l);
        if (num.is_zero()) break;  // terminated early by another upper parameter
        ParamScalar den(l + 1);
        for (const auto& b : spec.lower) {
            const ParamScalar f = b + ParamScalar(l);
            if (f.is_zero())
                throw AlgebraError(AlgebraError::Kind::hypergeometric_pole,
                                   "hypergeometric pole: lower parameter hit a nonpositive integer");
            den *= f;
        }
        term = term * num * spec.argument / den;
        sum += term;
    }
    return sum;
}

UniPoly pfq_poly(const std::vector<UniPoly>& upper, const std::vector<ParamScalar>& lower,
                 const ParamScalar& argument, std::optional<long> terms_cap) {
    std::optional<long> cap = terms_cap;
    for (const auto& a : upper) {
        if (a.degree() <= 0) {
            if (const auto t = nonpositive_integer(a.coefficient(0))) {
                if (!cap || *t < *cap) cap = *t;
            }
        }
    }
    if (!cap)
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "hypergeometric series does not terminate and no term cap was given");

    UniPoly sum(1);
    UniPoly term(1);
    for (long l = 0; l < *cap; ++l) {
        UniPoly num(1);
        for (const auto& a : upper) num *= a + UniPoly(ParamScalar(l));
        if (num.is_zero()) break;
        ParamScalar den(l + 1);
        for (const auto& b : lower) {
            const ParamScalar f = b + ParamScalar(l);
            if (f.is_zero())
                throw AlgebraError(AlgebraError::Kind::hypergeometric_pole,
                                   "hypergeometric pole: lower parameter hit a nonpositive integer");
            den *= f;
        }
        term = (argument / den) * (term * num);
        sum += term;
    }
    return sum;
}

UniPoly dual_hahn(unsigned m, const ParamScalar& a, const ParamScalar& b, const ParamScalar& N,
                  bool enforce_classical_range) {
    if (enforce_classical_range) {
        if (!N.is_integer() || N.constant_value().to_long() < 1 ||
            static_cast<long>(m) > N.constant_value().to_long() - 1)
            throw AlgebraError(AlgebraError::Kind::invalid_argument,
                               "dual Hahn classical range requires integer N with m <= N-1");
    }
    const ParamScalar c = a + b + ParamScalar(1);
    UniPoly sum(1);
    UniPoly lattice(1);       // prod_{i<l} (w - i(c+i)) in the variable w
    ParamScalar coeff(1);     // (-1)^l (-m)_l / ((a+1)_l (1-N)_l l!)
    for (long l = 0; l < static_cast<long>(m); ++l) {
        const ParamScalar a1 = a + ParamScalar(1) + ParamScalar(l);
        const ParamScalar n1 = ParamScalar(1) - N + ParamScalar(l);
        if (a1.is_zero() || n1.is_zero())
            throw AlgebraError(AlgebraError::Kind::hypergeometric_pole,
                               "hypergeometric pole: dual Hahn lower parameter vanished");
        coeff = coeff * (-(ParamScalar(-static_cast<long>(m)) + ParamScalar(l))) /
                (a1 * n1 * ParamScalar(l + 1));
        lattice *= UniPoly{-(ParamScalar(l) * (c + ParamScalar(l))), ParamScalar(1)};
        sum += coeff * lattice;
    }
    return sum;
}

Report verify_pochhammer_product(int k_max, bool negative_control) {
    const ParamScalar alpha = ParamScalar::beta();  // fresh formal symbol for the shift
    const UniPoly ylattice{ParamScalar(0), ParamScalar(1), ParamScalar(1)};  // y(y+1)
    std::vector<NamedCheck> checks;
    for (int k = 1; k <= k_max; ++k) {
        const UniPoly lhs = build_r(static_cast<unsigned>(k), alpha).compose(ylattice);
        checks.push_back(
            {idx_name("r-product-pochhammer", k),
             "R[k](y(y+1); alpha) = (-1)^k (-y-alpha)_k (y+1-alpha)_k",
             [k, alpha, negative_control](std::string& detail) {
                 UniPoly rhs(1);
                 for (int i = 0; i < k; ++i) {
                     rhs *= UniPoly{-alpha + ParamScalar(i), ParamScalar(-1)};
                     rhs *= UniPoly{ParamScalar(1) - alpha + ParamScalar(i), ParamScalar(1)};
                 }
                 if (k % 2 == 1 && !negative_control) rhs = -rhs;
                 const UniPoly lattice{ParamScalar(0), ParamScalar(1), ParamScalar(1)};
                 const UniPoly lhs2 = build_r(static_cast<unsigned>(k), alpha).compose(lattice);
                 if (lhs2 == rhs) return true;
                 detail = "polynomial mismatch";
                 return false;
             }});
    }
    return run_suite("r-product-pochhammer", std::move(checks));
}

Report verify_s_hahn_representation(int m_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(m_max));
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    const UniPoly ylattice{ParamScalar(0), ParamScalar(1), ParamScalar(1)};
    const UniPoly minus_y{ParamScalar(0), ParamScalar(-1)};
    const UniPoly y_plus_1{ParamScalar(1), ParamScalar(1)};

    std::vector<NamedCheck> checks;
    for (int m = 1; m <= m_max; ++m) {
        const UniPoly sminus = build_s(SumFamily::s_minus, static_cast<unsigned>(m)).compose(ylattice);
        const UniPoly splus = build_s(SumFamily::s_plus, static_cast<unsigned>(m)).compose(ylattice);
        ParamScalar low_minus = hb + ParamScalar(2);
        ParamScalar low_plus = hb;
        if (negative_control) std::swap(low_minus, low_plus);
        const ParamScalar low2 = lam - hb + ParamScalar(1);

        checks.push_back(
            {idx_name("s-hahn-series", m),
             "s[m](y(y+1)) = prefactor * 3F2(-m, -y, 1+y; ., lambda-beta/2+1; 1)",
             [=](std::string& detail) {
                 const ParamScalar pref_m = pochhammer(low_minus, m) * pochhammer(low2, m);
                 const UniPoly fm = pref_m * pfq_poly({UniPoly(ParamScalar(-m)), minus_y, y_plus_1},
                                                      {low_minus, low2}, ParamScalar(1), m);
                 if (fm != sminus) {
                     detail = "s- series form mismatch";
                     return false;
                 }
                 const ParamScalar pref_p = pochhammer(low_plus, m) * pochhammer(low2, m);
                 const UniPoly fp = pref_p * pfq_poly({UniPoly(ParamScalar(-m)), minus_y, y_plus_1},
                                                      {low_plus, low2}, ParamScalar(1), m);
                 if (fp != splus) {
                     detail = "s+ series form mismatch";
                     return false;
                 }
                 return true;
             }});
        checks.push_back(
            {idx_name("s-dual-hahn", m),
             "s[m](y(y+1)) = prefactor * dualHahn[m](y(y+1); a, b, beta/2-lambda)",
             [=](std::string& detail) {
                 const ParamScalar big_n = hb - lam;
                 const UniPoly dm = dual_hahn(static_cast<unsigned>(m), low_minus - ParamScalar(1),
                                              ParamScalar(-1) - hb, big_n)
                                        .compose(ylattice);
                 if (pochhammer(low_minus, m) * pochhammer(low2, m) * dm != sminus) {
                     detail = "s- dual Hahn form mismatch";
                     return false;
                 }
                 const UniPoly dp = dual_hahn(static_cast<unsigned>(m), low_plus - ParamScalar(1),
                                              ParamScalar(1) - hb, big_n)
                                        .compose(ylattice);
                 if (pochhammer(low_plus, m) * pochhammer(low2, m) * dp != splus) {
                     detail = "s+ dual Hahn form mismatch";
                     return false;
                 }
                 return true;
             }});
    }
    return run_suite("s-hahn-representation", std::move(checks));
}

Report verify_s1_hypergeometric(int m_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(m_max));
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    const ParamScalar beta = ParamScalar::beta();
    const UniPoly ylattice{ParamScalar(0), ParamScalar(1), ParamScalar(1)};
    const UniPoly minus_y{ParamScalar(0), ParamScalar(-1)};
    const UniPoly y_plus_1{ParamScalar(1), ParamScalar(1)};

    std::vector<NamedCheck> checks;
    for (int m = 1; m <= m_max; ++m) {
        const UniPoly lhs = build_s(SumFamily::s_one, static_cast<unsigned>(m)).compose(ylattice);
        const ParamScalar low2 = lam - hb + ParamScalar(1);
        const ParamScalar two_m(2 * m);

        checks.push_back(
            {idx_name("s1-four-term", m),
             "s1[m](y(y+1)) = (lambda-beta/2+1)_m [four-term 3F2/2F1 combination]",
             [=](std::string& detail) {
                 const ParamScalar lowm = hb + ParamScalar(2);
                 UniPoly acc =
                     (lam - beta + two_m) * pochhammer(lowm, m) *
                     pfq_poly({UniPoly(ParamScalar(-m)), minus_y, y_plus_1}, {lowm, low2},
                              ParamScalar(1), m);
                 acc -= two_m * (lam + two_m) * pochhammer(lowm, m - 1) *
                        pfq_poly({UniPoly(ParamScalar(-m + 1)), minus_y, y_plus_1}, {lowm, low2},
                                 ParamScalar(1), m - 1);
                 if (m >= 2) {
                     acc += ParamScalar(static_cast<long>(m) * (m - 1)) * (lam + beta + two_m) *
                            pochhammer(lowm, m - 2) *
                            pfq_poly({UniPoly(ParamScalar(-m + 2)), minus_y, y_plus_1}, {lowm, low2},
                                     ParamScalar(1), m - 2);
                 }
                 acc -= UniPoly((lam - beta) * pochhammer(hb, m) *
                                pfq_terminating({{ParamScalar(-m), ParamScalar(1) - hb}, {low2},
                                                 ParamScalar(1), std::nullopt}));
                 const UniPoly rhs = pochhammer(low2, m) * acc;
                 if (lhs == rhs) return true;
                 detail = "four-term combination mismatch";
                 return false;
             }});

        checks.push_back(
            {idx_name("s1-ratio-form", m),
             "s1[m](y(y+1)) = (lambda-beta/2+1)_m (beta/2)_m [(lambda-beta-2m) 4F3(1+g,...;g,...;1)"
             " - (lambda-beta) 2F1]",
             [=](std::string& detail) {
                 ParamScalar gamma = beta * (lam - beta - two_m) /
                                     (ParamScalar(2) * (lam + beta + two_m));
                 if (negative_control) gamma += ParamScalar(1);
                 const UniPoly f43 =
                     pfq_poly({UniPoly(gamma + ParamScalar(1)), UniPoly(ParamScalar(-m)), minus_y,
                               y_plus_1},
                              {gamma, hb + ParamScalar(1), low2}, ParamScalar(1), m);
                 const ParamScalar f21 = pfq_terminating(
                     {{ParamScalar(-m), ParamScalar(1) - hb}, {low2}, ParamScalar(1), std::nullopt});
                 const UniPoly rhs = pochhammer(low2, m) * pochhammer(hb, m) *
                                     ((lam - beta - two_m) * f43 - UniPoly((lam - beta) * f21));
                 if (lhs == rhs) return true;
                 detail = "4F3 form mismatch";
                 return false;
             }});

        checks.push_back(
            {idx_name("s1-two-series", m),
             "s1[m](y(y+1)) = prefactor (lambda-beta-2m) [3F2 + y(y+1)-weighted 3F2] - tail 2F1",
             [=](std::string& detail) {
                 const UniPoly f1 = pfq_poly({UniPoly(ParamScalar(-m)), minus_y, y_plus_1},
                                             {hb + ParamScalar(1), low2}, ParamScalar(1), m);
                 const UniPoly one_minus_y{ParamScalar(1), ParamScalar(-1)};
                 const UniPoly y_plus_2{ParamScalar(2), ParamScalar(1)};
                 const UniPoly f2 = pfq_poly({UniPoly(ParamScalar(1 - m)), one_minus_y, y_plus_2},
                                             {hb + ParamScalar(2), low2 + ParamScalar(1)},
                                             ParamScalar(1), m - 1);
                 const ParamScalar wcoef = two_m * (lam + beta + two_m) /
                                           (beta * (hb + ParamScalar(1)) * low2 *
                                            (lam - beta - two_m));
                 const ParamScalar f21 = pfq_terminating(
                     {{ParamScalar(-m), ParamScalar(1) - hb}, {low2}, ParamScalar(1), std::nullopt});
                 const ParamScalar pref = pochhammer(low2, m) * pochhammer(hb, m);
                 const UniPoly rhs = pref * (lam - beta - two_m) *
                                         (f1 + wcoef * (ylattice * f2)) -
                                     UniPoly(pref * (lam - beta) * f21);
                 if (lhs == rhs) return true;
                 detail = "two-series form mismatch";
                 return false;
             }});
    }
    return run_suite("s1-hypergeometric", std::move(checks));
}

Report verify_pochhammer_sums(int m_max, bool negative_control) {
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    const ParamScalar beta = ParamScalar::beta();
    std::vector<NamedCheck> checks;
    for (int m = 0; m <= m_max; ++m) {
        checks.push_back(
            {idx_name("chu-vandermonde", m),
             "2F1(-m, alpha; gamma; 1) = (gamma-alpha)_m / (gamma)_m",
             [=](std::string& detail) {
                 // alpha := beta, gamma := lambda as fresh formal symbols
                 const ParamScalar lhs = pfq_terminating(
                     {{ParamScalar(-m), beta}, {lam}, ParamScalar(1), std::nullopt});
                 const ParamScalar num =
                     negative_control ? pochhammer(lam + beta, m) : pochhammer(lam - beta, m);
                 if (lhs == num / pochhammer(lam, m)) return true;
                 detail = "Chu-Vandermonde value mismatch";
                 return false;
             }});
        checks.push_back(
            {idx_name("c-plus-sum", m),
             "sum_k C+[k](m) (beta/2-k)_{2k} = (lambda)_m (beta/2)_m",
             [=](std::string& detail) {
                 ParamScalar sum;
                 for (int k = 0; k <= m; ++k)
                     sum += coeff_c_plus(static_cast<unsigned>(m), static_cast<unsigned>(k)) *
                            pochhammer(hb - ParamScalar(k), 2 * k);
                 if (sum == pochhammer(lam, m) * pochhammer(hb, m)) return true;
                 detail = "C+ sum mismatch";
                 return false;
             }});
        checks.push_back(
            {idx_name("d-one-sum", m),
             "sum_k D1[k](m) (beta/2-k+1)_{2k} = (lambda)_m (beta/2)_m (lambda-beta)",
             [=](std::string& detail) {
                 ParamScalar sum;
                 for (int k = 0; k <= m; ++k)
                     sum += coeff_d_one(static_cast<unsigned>(m), static_cast<unsigned>(k)) *
                            pochhammer(hb - ParamScalar(k) + ParamScalar(1), 2 * k);
                 if (sum == pochhammer(lam, m) * pochhammer(hb, m) * (lam - beta)) return true;
                 detail = "D1 sum mismatch";
                 return false;
             }});
        checks.push_back(
            {idx_name("telescoping-aux", m),
             "m(lambda+beta+2m)(lambda+1)_{m-1} + (lambda-beta-2m)(lambda+1)_m = (lambda)_m (lambda-beta)",
             [=](std::string& detail) {
                 const ParamScalar lhs =
                     ParamScalar(m) * (lam + beta + ParamScalar(2 * m)) *
                         pochhammer(lam + ParamScalar(1), m - 1) +
                     (lam - beta - ParamScalar(2 * m)) * pochhammer(lam + ParamScalar(1), m);
                 if (lhs == pochhammer(lam, m) * (lam - beta)) return true;
                 detail = "auxiliary identity mismatch";
                 return false;
             }});
    }
    return run_suite("pochhammer-sums", std::move(checks));
}

}  // namespace bgforms
