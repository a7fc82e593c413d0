#include "bgforms/special.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace bgforms {

namespace {

ParamScalar half_beta() { return ParamScalar::beta() * ParamScalar(Rational(1, 2)); }

std::mutex cache_mutex;
std::map<unsigned, UniPoly> r0_cache;   // R_k(y; 0)
std::map<unsigned, UniPoly> r1_cache;   // R1_k(y)
std::map<std::pair<int, unsigned>, UniPoly> s_cache;

UniPoly build_r_uncached(unsigned k, const ParamScalar& alpha) {
    UniPoly p(1);
    for (unsigned l = 1; l <= k; ++l) {
        const ParamScalar root = (alpha - ParamScalar(static_cast<long>(l))) *
                                 (alpha - ParamScalar(static_cast<long>(l)) + ParamScalar(1));
        p *= UniPoly{-root, ParamScalar(1)};
    }
    return p;
}

UniPoly build_r1_uncached(unsigned k) {
    if (k == 0) return UniPoly();
    const ParamScalar hb = half_beta();
    const UniPoly pivot{-(hb * (hb + ParamScalar(1))), ParamScalar(1)};  // y - (b/2)(b/2+1)
    UniPoly sum;
    for (unsigned j = 1; j <= k; ++j) {
        const ParamScalar weight =
            pochhammer(hb - ParamScalar(static_cast<long>(k)) + ParamScalar(static_cast<long>(j)) + ParamScalar(1),
                       2 * static_cast<long>(k - j));
        sum += weight * (pivot * build_r_uncached(j - 1, ParamScalar(static_cast<long>(k))));
    }
    return sum;
}

UniPoly build_s_uncached(SumFamily tag, unsigned m) {
    UniPoly sum;
    for (unsigned k = 0; k <= m; ++k) {
        switch (tag) {
            case SumFamily::s_minus:
                sum += coeff_c_minus(m, k) * build_r(k, ParamScalar(0));
                break;
            case SumFamily::s_plus:
                sum += coeff_c_plus(m, k) * build_r(k, ParamScalar(0));
                break;
            case SumFamily::s_one:
                if (k >= 1) sum += coeff_d_one(m, k) * build_r1(k);
                break;
        }
    }
    return sum;
}

std::string idx_name(const char* base, int m) {
    std::ostringstream os;
    os << base << "[m=" << m << "]";
    return os.str();
}

}  // namespace

UniPoly build_r(unsigned k, const ParamScalar& alpha) {
    if (alpha.is_zero()) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = r0_cache.find(k);
        if (it != r0_cache.end()) return it->second;
    }
    UniPoly p = build_r_uncached(k, alpha);
    if (alpha.is_zero()) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        r0_cache.emplace(k, p);
    }
    return p;
}

UniPoly build_r1(unsigned k) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = r1_cache.find(k);
        if (it != r1_cache.end()) return it->second;
    }
    UniPoly p = build_r1_uncached(k);
    std::lock_guard<std::mutex> lock(cache_mutex);
    r1_cache.emplace(k, p);
    return p;
}

UniPoly build_s(SumFamily tag, unsigned m) {
    const auto key = std::make_pair(static_cast<int>(tag), m);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = s_cache.find(key);
        if (it != s_cache.end()) return it->second;
    }
    UniPoly p = build_s_uncached(tag, m);
    std::lock_guard<std::mutex> lock(cache_mutex);
    s_cache.emplace(key, p);
    return p;
}

ParamScalar coeff_c_minus(unsigned m, unsigned k) {
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    const long mk = static_cast<long>(m - k);
    return ParamScalar(binomial(m, k)) *
           pochhammer(hb - lam - ParamScalar(static_cast<long>(m)), mk) *
           pochhammer(-hb - ParamScalar(static_cast<long>(m)) - ParamScalar(1), mk);
}

ParamScalar coeff_c_plus(unsigned m, unsigned k) {
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    const long mk = static_cast<long>(m - k);
    return ParamScalar(binomial(m, k)) *
           pochhammer(hb - lam - ParamScalar(static_cast<long>(m)), mk) *
           pochhammer(-hb - ParamScalar(static_cast<long>(m)) + ParamScalar(1), mk);
}

ParamScalar coeff_d_one(unsigned m, unsigned k) {
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    const ParamScalar beta = ParamScalar::beta();
    const long mm = static_cast<long>(m);
    const long kk = static_cast<long>(k);
    const ParamScalar bracket = ParamScalar(kk) * (lam + beta + ParamScalar(2 * mm)) +
                                hb * (lam - beta - ParamScalar(2 * mm));
    return ParamScalar(binomial(m, k)) *
           pochhammer(lam - hb + ParamScalar(kk) + ParamScalar(1), mm - kk) *
           pochhammer(hb + ParamScalar(kk) + ParamScalar(1), mm - kk - 1) * bracket;
}

void warm_family_caches(unsigned m_max) {
    for (unsigned k = 0; k <= m_max; ++k) {
        build_r(k, ParamScalar(0));
        build_r1(k);
    }
    for (unsigned m = 0; m <= m_max; ++m) {
        build_s(SumFamily::s_minus, m);
        build_s(SumFamily::s_plus, m);
        build_s(SumFamily::s_one, m);
    }
}

Report verify_sminus_recurrence(int m_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(m_max));
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    std::vector<NamedCheck> checks;
    for (int m = 1; m <= m_max; ++m) {
        const UniPoly lhs = build_s(SumFamily::s_minus, static_cast<unsigned>(m));
        const UniPoly sm1 = build_s(SumFamily::s_minus, static_cast<unsigned>(m - 1));
        const UniPoly sm2 = m >= 2 ? build_s(SumFamily::s_minus, static_cast<unsigned>(m - 2)) : UniPoly();
        const long two_m = negative_control ? 2 * m + 1 : 2 * m;
        const ParamScalar shift = ParamScalar(two_m) * (lam + ParamScalar(m)) +
                                  hb * (lam - hb - ParamScalar(1));
        const ParamScalar two_step = ParamScalar(m - 1) * (lam + ParamScalar(m)) *
                                     (lam - hb + ParamScalar(m - 1)) * (hb + ParamScalar(m));
        checks.push_back(
            {idx_name("sminus-recurrence", m),
             "s-[m] = (y + 2m(lambda+m) + beta/2(lambda-beta/2-1)) s-[m-1]"
             " - (m-1)(lambda+m)(lambda-beta/2+m-1)(beta/2+m) s-[m-2]",
             [lhs, sm1, sm2, shift, two_step](std::string& detail) {
                 const UniPoly rhs = (UniPoly::y() + UniPoly(shift)) * sm1 - two_step * sm2;
                 if (lhs == rhs) return true;
                 detail = "polynomial mismatch";
                 return false;
             }});
    }
    return run_suite("sminus-recurrence", std::move(checks));
}

Report verify_splus_recurrence(int m_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(m_max));
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    std::vector<NamedCheck> checks;
    for (int m = 1; m <= m_max; ++m) {
        const UniPoly lhs = build_s(SumFamily::s_plus, static_cast<unsigned>(m));
        const UniPoly sm1 = build_s(SumFamily::s_plus, static_cast<unsigned>(m - 1));
        const UniPoly sm2 = m >= 2 ? build_s(SumFamily::s_plus, static_cast<unsigned>(m - 2)) : UniPoly();
        const ParamScalar shift = ParamScalar(2 * (m - 1)) * (lam + ParamScalar(m - 1)) +
                                  hb * (lam - hb + ParamScalar(1));
        ParamScalar two_step = ParamScalar(m - 1) * (lam + ParamScalar(m - 2)) *
                               (lam - hb + ParamScalar(m - 1)) * (hb + ParamScalar(m - 2));
        if (negative_control) two_step = -two_step;
        checks.push_back(
            {idx_name("splus-recurrence", m),
             "s+[m] = (y + 2(m-1)(lambda+m-1) + beta/2(lambda-beta/2+1)) s+[m-1]"
             " - (m-1)(lambda+m-2)(lambda-beta/2+m-1)(beta/2+m-2) s+[m-2]",
             [lhs, sm1, sm2, shift, two_step](std::string& detail) {
                 const UniPoly rhs = (UniPoly::y() + UniPoly(shift)) * sm1 - two_step * sm2;
                 if (lhs == rhs) return true;
                 detail = "polynomial mismatch";
                 return false;
             }});
    }
    return run_suite("splus-recurrence", std::move(checks));
}

Report verify_r_relation(int m_max) {
    warm_family_caches(static_cast<unsigned>(m_max));
    const ParamScalar hb = half_beta();
    std::vector<NamedCheck> checks;
    for (int m = 0; m <= m_max; ++m) {
        const UniPoly lhs = build_r(static_cast<unsigned>(m), ParamScalar(0));
        const UniPoly r1 = build_r1(static_cast<unsigned>(m));
        const ParamScalar tail = pochhammer(hb - ParamScalar(m) + ParamScalar(1), 2 * m);
        checks.push_back({idx_name("r-r1-relation", m),
                          "R[m](y;0) = R1[m](y) + (beta/2-m+1)_{2m}",
                          [lhs, r1, tail](std::string& detail) {
                              if (lhs == r1 + UniPoly(tail)) return true;
                              detail = "polynomial mismatch";
                              return false;
                          }});
    }
    return run_suite("r-r1-relation", std::move(checks));
}

Report verify_r1_recurrence(int m_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(m_max));
    const ParamScalar hb = half_beta();
    const UniPoly pivot{-(hb * (hb + ParamScalar(1))), ParamScalar(1)};
    std::vector<NamedCheck> checks;
    for (int m = 0; m < m_max; ++m) {
        const UniPoly lhs = build_r1(static_cast<unsigned>(m + 1));
        const UniPoly rm = build_r1(static_cast<unsigned>(m));
        const ParamScalar weight = pochhammer(hb - ParamScalar(m) + ParamScalar(1), 2 * m);
        const UniPoly step{-ParamScalar(static_cast<long>(m) * (m + 1)), ParamScalar(1)};
        checks.push_back(
            {idx_name("r1-recurrence", m),
             "R1[m+1] = (y - m(m+1)) R1[m] + (beta/2-m+1)_{2m} (y - beta/2(beta/2+1))",
             [lhs, rm, weight, step, pivot, negative_control](std::string& detail) {
                 UniPoly rhs = step * rm;
                 if (!negative_control) rhs += weight * pivot;
                 if (lhs == rhs) return true;
                 detail = "polynomial mismatch";
                 return false;
             }});
    }
    return run_suite("r1-recurrence", std::move(checks));
}

Report verify_s1_decomposition(int m_max, bool negative_control) {
    warm_family_caches(static_cast<unsigned>(m_max));
    const ParamScalar hb = half_beta();
    const ParamScalar lam = ParamScalar::lambda();
    const ParamScalar beta = ParamScalar::beta();
    std::vector<NamedCheck> checks;
    for (int m = 2; m <= m_max; ++m) {
        const UniPoly lhs = build_s(SumFamily::s_one, static_cast<unsigned>(m));
        const UniPoly sm = build_s(SumFamily::s_minus, static_cast<unsigned>(m));
        const UniPoly sm1 = build_s(SumFamily::s_minus, static_cast<unsigned>(m - 1));
        const UniPoly sm2 = build_s(SumFamily::s_minus, static_cast<unsigned>(m - 2));
        const ParamScalar c0 = lam - beta + ParamScalar(2 * m);
        const ParamScalar c1 = ParamScalar(2 * m) * (lam + ParamScalar(2 * m)) * (lam - hb + ParamScalar(m));
        const ParamScalar c2 = ParamScalar(static_cast<long>(m) * (m - 1)) *
                               (lam + beta + ParamScalar(2 * m)) *
                               pochhammer(lam - hb + ParamScalar(m - 1), 2);
        const ParamScalar tail = pochhammer(lam, m) * (lam - beta) * pochhammer(hb, m);
        checks.push_back(
            {idx_name("s1-decomposition", m),
             "s1[m] = (lambda-beta+2m) s-[m] - 2m(lambda+2m)(lambda-beta/2+m) s-[m-1]"
             " + m(m-1)(lambda+beta+2m)(lambda-beta/2+m-1)_2 s-[m-2] - (lambda)_m (lambda-beta)(beta/2)_m",
             [lhs, sm, sm1, sm2, c0, c1, c2, tail, negative_control](std::string& detail) {
                 UniPoly rhs = c0 * sm - c1 * sm1 + c2 * sm2;
                 if (!negative_control) rhs -= UniPoly(tail);
                 if (lhs == rhs) return true;
                 detail = "polynomial mismatch";
                 return false;
             }});
    }
    return run_suite("s1-decomposition", std::move(checks));
}

}  // namespace bgforms
