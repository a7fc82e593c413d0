#include "bgforms/multipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace bgforms {

Rational MultiPoly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree(Var v) const {
    int d = -1;
    const int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[i]));
    return d;  // -1 for the zero polynomial
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.total());  // graded order: leading term has max degree
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& b) {
    for (const auto& [m, c] : b.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            prune(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& b) {
    for (const auto& [m, c] : b.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            prune(it);
        }
    }
    return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r += b;
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    r -= b;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma * mb;
            auto [it, inserted] = r.terms_.emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                r.prune(it);
            }
        }
    }
    return r;
}

MultiPoly operator*(const MultiPoly& a, const Rational& c) {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : a.terms_) r.terms_.emplace(m, cc * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Rational MultiPoly::eval(const std::array<Rational, 3>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] != 0) t *= point[i].pow(static_cast<long>(m.e[i]));
        }
        acc += t;
    }
    return acc;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
    const int i = static_cast<int>(v);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree(v), 0)) + 1);
    if (is_zero()) return out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        const std::uint32_t k = rest.e[i];
        rest.e[i] = 0;
        out[k] += MultiPoly::term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients_in(Var v, const std::vector<MultiPoly>& coeffs) {
    MultiPoly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        r += coeffs[k] * variable(v, static_cast<std::uint32_t>(k));
    return r;
}

MultiPoly MultiPoly::substituted(Var v, const MultiPoly& value) const {
    const auto coeffs = coefficients_in(v);
    MultiPoly r;  // Horner in v
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    MultiPoly q;
    MultiPoly r = a;
    const Monomial& lmb = b.leading_monomial();
    const Rational& lcb = b.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        if (!lmb.divides(lmr)) return std::nullopt;
        MultiPoly t = MultiPoly::term(lmr / lmb, r.leading_coefficient() / lcb);
        q += t;
        r -= t * b;
    }
    return q;
}

std::pair<Rational, MultiPoly> MultiPoly::primitive_parts() const {
    if (is_zero()) return {Rational(0), MultiPoly()};
    Integer num_gcd(0);
    Integer den_lcm(1);
    for (const auto& [m, c] : terms_) {
        num_gcd = Integer::gcd(num_gcd, c.numerator());
        den_lcm = Integer::lcm(den_lcm, c.denominator());
    }
    Rational content(num_gcd, den_lcm);
    if (leading_coefficient().sign() < 0) content = -content;
    return {content, *this * content.inverse()};
}

namespace {

// Pseudo-remainder of a by b in the variable v (both with positive degree in v):
// lc(b)^(deg a - deg b + 1) * a mod b, the exact power needed by the
// subresultant divisions.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
    const int db = b.degree(v);
    const MultiPoly lb = b.coefficients_in(v).back();
    MultiPoly r = a;
    int steps_left = a.degree(v) - db + 1;
    while (!r.is_zero() && r.degree(v) >= db) {
        auto rc = r.coefficients_in(v);
        const MultiPoly lr = rc.back();
        const int dr = static_cast<int>(rc.size()) - 1;
        r = r * lb - b * (lr * MultiPoly::variable(v, static_cast<std::uint32_t>(dr - db)));
        --steps_left;
    }
    // pad so the total multiplier is exactly lc(b)^(deg a - deg b + 1)
    for (; steps_left > 0; --steps_left) r = r * lb;
    return r;
}

// Content of p with respect to v: gcd of the coefficient polynomials.
MultiPoly content_in(const MultiPoly& p, Var v) {
    MultiPoly g;
    for (const auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.primitive_parts().second : MultiPoly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// --- modular coprimality probe ----------------------------------------------
//
// Work over F_p at a random evaluation of the other two parameters; the image
// of gcd(a, b) divides the gcd of the images whenever one operand keeps its
// v-degree, so a degree-zero modular gcd proves deg_v(gcd) = 0 exactly.

constexpr std::uint64_t kProbePrimes[4] = {2147483629ULL, 2147483587ULL, 2147483563ULL,
                                           2147483549ULL};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (e > 0) {
        if (e & 1ULL) r = (r * base) % p;
        base = (base * base) % p;
        e >>= 1ULL;
    }
    return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

// Rational coefficient mod p; false when the denominator is divisible by p.
bool rational_mod(const Rational& c, std::uint64_t p, std::uint64_t& out) {
    const Integer num = c.numerator();
    const Integer den = c.denominator();
    const std::uint64_t d = mpz_fdiv_ui(den.raw(), p);
    if (d == 0) return false;
    const std::uint64_t n = mpz_fdiv_ui(num.raw(), p);
    out = (n * mod_inverse(d, p)) % p;
    return true;
}

bool univariate_image_mod(const MultiPoly& poly, Var v, const std::array<long, 3>& point,
                          std::uint64_t p, std::vector<std::uint64_t>& img) {
    img.assign(static_cast<std::size_t>(std::max(poly.degree(v), 0)) + 1, 0);
    const int iv = static_cast<int>(v);
    for (const auto& [m, c] : poly.terms()) {
        std::uint64_t t;
        if (!rational_mod(c, p, t)) return false;
        for (int i = 0; i < 3; ++i) {
            if (i == iv || m.e[i] == 0) continue;
            t = (t * mod_pow(static_cast<std::uint64_t>(point[i]), m.e[i], p)) % p;
        }
        img[m.e[iv]] = (img[m.e[iv]] + t) % p;
    }
    return true;
}

int univariate_gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                              std::uint64_t p) {
    const auto trim = [](std::vector<std::uint64_t>& q) {
        while (!q.empty() && q.back() == 0) q.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::uint64_t inv = mod_inverse(b.back(), p);
        for (auto& c : b) c = (c * inv) % p;
        while (a.size() >= b.size() && !a.empty()) {
            const std::uint64_t f = a.back();
            const std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = (a[off + i] + p - (f * b[i]) % p) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Only ever *proves* coprimality; inconclusive probes fall back to the PRS.
bool provably_coprime(const MultiPoly& a, const MultiPoly& b) {
    for (int iv = 0; iv < 3; ++iv) {
        const Var v = static_cast<Var>(iv);
        const int da = a.degree(v), db = b.degree(v);
        // a divisor of a v-free polynomial is itself v-free
        if (da <= 0 || db <= 0) continue;
        bool proved = false;
        for (int attempt = 0; attempt < 4 && !proved; ++attempt) {
            const std::uint64_t p = kProbePrimes[attempt];
            const std::array<long, 3> point{3 + 5 * attempt, 7 + 11 * attempt, 13 + 17 * attempt};
            std::vector<std::uint64_t> ia, ib;
            if (!univariate_image_mod(a, v, point, p, ia)) continue;
            if (!univariate_image_mod(b, v, point, p, ib)) continue;
            const bool a_ok = !ia.empty() && ia.back() != 0;
            const bool b_ok = !ib.empty() && ib.back() != 0;
            if (!a_ok && !b_ok) continue;
            if (univariate_gcd_degree_mod(a_ok ? ia : ib, a_ok ? ib : ia, p) == 0) proved = true;
        }
        if (!proved) return false;
    }
    return true;
}

}  // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return b.is_zero() ? MultiPoly() : b.primitive_parts().second;
    if (b.is_zero()) return a.primitive_parts().second;
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);
    if (provably_coprime(a, b)) return MultiPoly(1);

    // Main variable: most significant parameter occurring in either operand.
    Var v = Var::beta;
    for (int i = 0; i < 3; ++i) {
        if (a.degree(static_cast<Var>(i)) > 0 || b.degree(static_cast<Var>(i)) > 0) {
            v = static_cast<Var>(i);
            break;
        }
    }

    const int da = a.degree(v);
    const int db = b.degree(v);
    if (da == 0) return gcd(a, content_in(b, v));
    if (db == 0) return gcd(content_in(a, v), b);

    const MultiPoly ca = content_in(a, v);
    const MultiPoly cb = content_in(b, v);
    MultiPoly pa = *divide_exact(a, ca);
    MultiPoly pb = *divide_exact(b, cb);
    const MultiPoly cg = gcd(ca, cb);

    // Subresultant remainder sequence: growth is controlled by exact division
    // by known factors, with a single content extraction at the end.
    MultiPoly r0 = da >= db ? std::move(pa) : std::move(pb);
    MultiPoly r1 = da >= db ? std::move(pb) : std::move(pa);
    MultiPoly g(1), h(1);
    bool first = true;
    while (!r1.is_zero()) {
        if (r1.degree(v) == 0) {
            // A v-free remainder means the primitive parts are coprime in v.
            r0 = MultiPoly(1);
            break;
        }
        const int delta = r0.degree(v) - r1.degree(v);
        MultiPoly r = pseudo_remainder(r0, r1, v);
        if (!r.is_zero() && !first) {
            // divide by g * h^delta (exact by the subresultant theory)
            MultiPoly divisor = g;
            for (int i = 0; i < delta; ++i) divisor = divisor * h;
            r = *divide_exact(r, divisor);
        }
        g = r1.coefficients_in(v).back();
        if (delta >= 1) {
            MultiPoly hnew = g;
            for (int i = 1; i < delta; ++i) hnew = hnew * g;
            if (delta > 1) hnew = *divide_exact(hnew, [&] {
                MultiPoly hh = h;
                for (int i = 1; i < delta - 1; ++i) hh = hh * h;
                return hh;
            }());
            h = std::move(hnew);
        }
        // delta == 0 keeps h unchanged
        r0 = std::move(r1);
        r1 = std::move(r);
        first = false;
    }
    if (r0.degree(v) > 0) r0 = *divide_exact(r0, content_in(r0, v));
    return (cg * r0.primitive_parts().second).primitive_parts().second;
}

MultiPoly MultiPoly::lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly();
    return (*divide_exact(a * b, gcd(a, b))).primitive_parts().second;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff.sign() < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff.sign() < 0 ? "-" : "+");
            if (coeff.sign() < 0) coeff = -coeff;
        }
        first = false;
        const bool has_vars = !m.is_constant();
        if (!coeff.is_one() || !has_vars) {
            os << coeff.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < 3; ++i) {
            if (m.e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var_name(static_cast<Var>(i));
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace bgforms
